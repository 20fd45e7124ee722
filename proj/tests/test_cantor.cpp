#include <topofrac/cantor.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace topofrac;

namespace {

// Independent geometric-series oracle: partial sums to `terms` digits.
// Agreement within 3^-terms plus a denominator bound pins exact equality.
Rat coordinate_by_partial_sums(const CantorAddress& addr, int terms) {
    Rat v = 0;
    Rat w(1, 3);
    for (int i = 0; i < terms; ++i) {
        int digit;
        if (i < (int)addr.digits.size()) digit = addr.digits[i];
        else if (addr.tail.empty()) digit = 0;
        else digit = addr.tail[(i - addr.digits.size()) % addr.tail.size()];
        if (digit) v += 2 * w;
        w /= 3;
    }
    return Rat(1, 3) + v / 3;
}

// Independent ternary-digit cruncher for the Cantor function.
Rat stairs_by_digits(Rat x, int terms) {
    if (x <= 0) return 0;
    if (x >= 1) return 1;
    Rat value = 0;
    Rat w(1, 2);
    for (int i = 0; i < terms; ++i) {
        x *= 3;
        Int d = rat_floor(x);
        x -= Rat(d);
        if (d == 1) return value + w;
        if (d == 2) value += w;
        w /= 2;
        if (x == 0) break;
    }
    return value;
}

}  // namespace

TEST_CASE("cantor_coordinate frozen values") {
    CHECK(cantor_coordinate(CantorAddress::zeros()) == Rat(1, 3));
    CHECK(cantor_coordinate(CantorAddress::ones()) == Rat(2, 3));
    CHECK(cantor_coordinate(CantorAddress{{1}, {}}) == Rat(5, 9));
    // oracle agreement within truncation for periodic tails
    for (const auto& addr :
         {CantorAddress::zeros(), CantorAddress::ones(), CantorAddress{{1}, {}},
          CantorAddress{{0, 1}, {1, 0}}, CantorAddress::gap_left({1, 0})}) {
        Rat exact = cantor_coordinate(addr);
        Rat approx = coordinate_by_partial_sums(addr, 80);
        CHECK(rat_abs(exact - approx) <= pow_int(Rat(1, 3), 79));
    }
}

TEST_CASE("cantor_coordinate is increasing in lexicographic order") {
    // enumerate depth-6 prefixes with 0-tail and 1-tail, lexicographic order
    std::vector<CantorAddress> addrs;
    for (int n = 0; n < 64; ++n) {
        std::vector<int> digits;
        for (int b = 5; b >= 0; --b) digits.push_back((n >> b) & 1);
        addrs.push_back(CantorAddress{digits, {}});
        addrs.push_back(CantorAddress{digits, {1}});
    }
    auto lex_less = [](const CantorAddress& a, const CantorAddress& b) {
        for (int i = 0; i < 80; ++i) {
            auto digit = [&](const CantorAddress& t) {
                if (i < (int)t.digits.size()) return t.digits[i];
                if (t.tail.empty()) return 0;
                return t.tail[(i - t.digits.size()) % t.tail.size()];
            };
            if (digit(a) != digit(b)) return digit(a) < digit(b);
        }
        return false;
    };
    for (const auto& a : addrs)
        for (const auto& b : addrs)
            if (lex_less(a, b)) CHECK(cantor_coordinate(a) <= cantor_coordinate(b));
}

TEST_CASE("identified pairs map to gap endpoints") {
    for (const auto& s : std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1, 1}, {1, 0, 0, 1}}) {
        Rat l = gap_l(s), r = gap_r(s);
        CHECK(l < r);
        // gap length of level-|s| gaps in the scaled copy
        CHECK(r - l == pow_int(Rat(1, 3), (int)s.size() + 2));
    }
}

TEST_CASE("cantor_stairs frozen values and gap constancy") {
    CHECK(cantor_stairs(0) == 0);
    CHECK(cantor_stairs(1) == 1);
    CHECK(cantor_stairs(Rat(1, 3)) == Rat(1, 2));
    CHECK(cantor_stairs(Rat(2, 3)) == Rat(1, 2));
    CHECK(cantor_stairs(Rat(1, 2)) == Rat(1, 2));
    CHECK(cantor_stairs(Rat(1, 9)) == Rat(1, 4));
    CHECK(cantor_stairs(Rat(1, 4)) == Rat(1, 3));  // periodic ternary 0.020202...

    // oracle agreement
    for (int i = 0; i <= 81; ++i) {
        Rat x(i, 81);
        CHECK(cantor_stairs(x) == stairs_by_digits(x, 200));
    }

    // q(l(s)) = q(r(s)): constant on every gap of the standard set
    std::vector<std::vector<int>> level{{}};
    for (int d = 0; d <= 6; ++d) {
        std::vector<std::vector<int>> next;
        for (auto& s : level) {
            Rat l = cantor_standard_point(CantorAddress::gap_left(s));
            Rat r = cantor_standard_point(CantorAddress::gap_right(s));
            CHECK(cantor_stairs(l) == cantor_stairs(r));
            // nondecreasing across the gap
            CHECK(cantor_stairs(l) <= cantor_stairs(r + Rat(1, 1000000)));
            for (int b : {0, 1}) {
                auto t = s;
                t.push_back(b);
                next.push_back(std::move(t));
            }
        }
        level = std::move(next);
    }
}

TEST_CASE("cantor_stairs is nondecreasing") {
    Rat prev = -1;
    for (int i = 0; i <= 243; ++i) {
        Rat v = cantor_stairs(Rat(i, 243));
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("coordinate to address round trip") {
    for (const auto& addr :
         {CantorAddress::zeros(), CantorAddress::ones(), CantorAddress{{1}, {}},
          CantorAddress{{0, 1, 1}, {}}, CantorAddress{{1, 0}, {0, 1}},
          CantorAddress::gap_left({0, 1})}) {
        Rat x = cantor_coordinate(addr);
        auto back = to_cantor_address(x);
        REQUIRE(back.has_value());
        CHECK(cantor_coordinate(*back) == x);
    }
    CHECK_FALSE(to_cantor_address(Rat(1, 2)).has_value());   // big gap interior
    CHECK_FALSE(to_cantor_address(Rat(17, 40)).has_value()); // inside [1/3,2/3] but in a gap
    CHECK_FALSE(to_cantor_address(Rat(1, 4)).has_value());   // outside [1/3,2/3]
}

TEST_CASE("address opposite and prepend") {
    auto a = CantorAddress{{0, 1}, {}};
    auto op = a.opposite();
    CHECK(op.digits == std::vector<int>{1, 0});
    CHECK(op.tail == std::vector<int>{1});
    CHECK(cantor_coordinate(a.prepend(1)) == cantor_coordinate(CantorAddress{{1, 0, 1}, {}}));
    // involution
    auto b = op.opposite();
    CHECK(cantor_coordinate(b) == cantor_coordinate(a));
}
