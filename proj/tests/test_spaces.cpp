#include <topofrac/space.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace topofrac;

TEST_CASE("circle distance wraps") {
    auto s = ModelSpace::circle(23);
    CHECK(distance1(s, 1, 22) == 2);
    CHECK(distance1(s, 0, Rat(23, 2)) == Rat(23, 2));
    CHECK(distance1(s, 5, 5) == 0);
    // never exceeds half the length
    CHECK(distance1(s, 0, 12) == 11);
}

TEST_CASE("interval distance and domain errors") {
    auto s = ModelSpace::interval(0, 1);
    CHECK(distance1(s, 0, 1) == 1);
    CHECK_THROWS_AS(distance1(s, 0, 2), std::domain_error);
    CHECK_THROWS_AS(ModelSpace::interval(1, 1), std::invalid_argument);
}

TEST_CASE("cube max metric") {
    auto s = ModelSpace::cube(2);
    CHECK(distance(s, pt(0, 0), pt(1, Rat(1, 2))) == 1);
    CHECK(distance(s, pt(Rat(1, 4), 0), pt(0, Rat(1, 2))) == Rat(1, 2));
    CHECK_THROWS_AS(ModelSpace::cube(0), std::invalid_argument);
}

TEST_CASE("set diameter") {
    auto c = ModelSpace::circle(23);
    // arc [0,9] sampled densely: farthest pair is the endpoints
    std::vector<Point> arc;
    for (int i = 0; i <= 90; ++i) arc.push_back(pt(Rat(i, 10)));
    CHECK(set_diameter(c, arc) == 9);
    CHECK(set_diameter(c, std::vector<Point>{pt(5)}) == 0);

    auto iv = ModelSpace::interval(0, 1);
    CHECK(set_diameter(iv, std::vector<Point>{pt(0), pt(Rat(1, 3)), pt(1)}) == 1);
    CHECK_THROWS_AS(set_diameter(iv, std::vector<Point>{}), std::domain_error);

    // circle diameter is genuinely cyclic: three equally spaced points
    auto c3 = ModelSpace::circle(3);
    std::vector<Point> three{pt(0), pt(1), pt(2)};
    CHECK(set_diameter(c3, three) == 1);
}

TEST_CASE("triangle inequality on sampled nets (exact)") {
    auto check_space = [](const ModelSpace& s, const std::vector<Rat>& xs) {
        for (const Rat& x : xs)
            for (const Rat& y : xs)
                for (const Rat& z : xs) {
                    CHECK(distance1(s, x, z) <= distance1(s, x, y) + distance1(s, y, z));
                    CHECK(distance1(s, x, y) == distance1(s, y, x));
                }
    };
    std::vector<Rat> xs;
    for (int i = 0; i <= 12; ++i) xs.push_back(Rat(i * 7 % 23) + Rat(i, 13));
    check_space(ModelSpace::circle(23), xs);
    std::vector<Rat> ys;
    for (int i = 0; i <= 12; ++i) ys.push_back(Rat(i, 12));
    check_space(ModelSpace::interval(0, 1), ys);
}

TEST_CASE("hausdorff distance basics") {
    auto iv = ModelSpace::interval(0, 1);
    std::vector<Point> a{pt(0)};
    std::vector<Point> b{pt(0), pt(1)};
    CHECK(hausdorff_distance(iv, a, b) == 1);
    CHECK(hausdorff_distance(iv, b, b) == 0);
    CHECK_THROWS_AS(hausdorff_distance(iv, {}, b), std::domain_error);

    auto c = ModelSpace::circle(10);
    std::vector<Point> p{pt(0)};
    std::vector<Point> q{pt(9)};
    CHECK(hausdorff_distance(c, p, q) == 1);
}

TEST_CASE("hausdorff: fine grid vs depth-6 Cantor endpoints") {
    // brute-force oracle over explicit point lists; the farthest grid
    // point from the endpoint net is the center of the big middle gap
    auto iv = ModelSpace::interval(0, 1);
    std::vector<Point> grid;
    for (int i = 0; i <= 1000; ++i) grid.push_back(pt(Rat(i, 1000)));
    // depth-6 endpoints of the standard middle-thirds Cantor set
    std::vector<std::pair<Rat, Rat>> segs{{0, 1}};
    for (int d = 0; d < 6; ++d) {
        std::vector<std::pair<Rat, Rat>> next;
        for (auto& [a, b] : segs) {
            Rat t = (b - a) / 3;
            next.push_back({a, a + t});
            next.push_back({b - t, b});
        }
        segs = std::move(next);
    }
    std::vector<Point> net;
    for (auto& [a, b] : segs) {
        net.push_back(pt(a));
        net.push_back(pt(b));
    }
    Rat h = hausdorff_distance(iv, grid, net);
    CHECK(rat_abs(h - Rat(1, 6)) <= Rat(1, 1000));

    // independent brute-force check of the same value
    Rat worst = 0;
    for (const auto& g : grid) {
        Rat best(-1);
        for (const auto& n : net) {
            Rat d = rat_abs(g[0] - n[0]);
            if (best < 0 || d < best) best = d;
        }
        worst = std::max(worst, best);
    }
    CHECK(h == worst);
}
