#include <topofrac/system.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace topofrac;

namespace {

FunctionSystem cantor_ifs() {
    auto space = ModelSpace::interval(0, 1);
    auto f0 = make_pl({{Rat(0), Rat(0)}, {Rat(1), Rat(1, 3)}});
    auto f1 = make_pl({{Rat(0), Rat(2, 3)}, {Rat(1), Rat(1)}});
    return FunctionSystem(space, {f0, f1}, {"left", "right"});
}

}  // namespace

TEST_CASE("piecewise evaluation, exact") {
    auto space = ModelSpace::interval(0, 1);
    auto f = make_pl({{Rat(0), Rat(5, 9)}, {Rat(2, 3), Rat(1, 3)}, {Rat(1), Rat(0)}});
    CHECK(evaluate1(space, f, 0) == Rat(5, 9));
    CHECK(evaluate1(space, f, Rat(2, 3)) == Rat(1, 3));
    CHECK(evaluate1(space, f, 1) == 0);
    CHECK(evaluate1(space, f, Rat(1, 3)) == Rat(5, 9) - Rat(1, 9));
    CHECK_THROWS_AS(evaluate1(space, f, 2), std::domain_error);
}

TEST_CASE("circle evaluation reduces mod length") {
    auto space = ModelSpace::circle(23);
    auto reflect = make_pl({{Rat(0), Rat(23)}, {Rat(23), Rat(0)}});
    CHECK(evaluate1(space, reflect, 0) == 0);  // 23 reduces to 0
    CHECK(evaluate1(space, reflect, 9) == 14);
    CHECK(evaluate1(space, reflect, 37) == 9);  // input reduced first
}

TEST_CASE("reflect_compose matches manual reflection") {
    auto space = ModelSpace::circle(23);
    auto inner = make_pl({{Rat(0), Rat(9)}, {Rat(23), Rat(5)}});
    auto rc = make_reflect_compose(inner);
    for (int i = 0; i <= 46; ++i) {
        Rat x(i, 2);
        Rat expected = evaluate1(space, inner, rat_mod(Rat(23) - x, Rat(23)));
        CHECK(evaluate1(space, rc, x) == expected);
    }
}

TEST_CASE("cube maps: permute-half and corner") {
    auto space = ModelSpace::cube(2);
    auto f = make_cube_permute_half(0);
    auto g = make_cube_permute_half(Rat(1, 2));
    CHECK(evaluate(space, f, pt(Rat(2, 5), Rat(4, 5))) == pt(Rat(2, 5), Rat(2, 5)));
    CHECK(evaluate(space, g, pt(0, 0)) == pt(Rat(1, 2), 0));
    CHECK(evaluate(space, f, evaluate(space, g, pt(0, 0))) == pt(0, Rat(1, 2)));

    auto corner = make_cube_corner(pt(1, 0));
    CHECK(evaluate(space, corner, pt(0, 1)) == pt(Rat(1, 2), Rat(1, 2)));

    auto one = ModelSpace::cube(1);
    auto f1 = make_cube_permute_half(0);
    CHECK(evaluate(one, f1, Point{Rat(1, 2)}) == Point{Rat(1, 4)});
}

TEST_CASE("staircase map kind") {
    auto space = ModelSpace::interval(0, 1);
    auto s = make_staircase(0, 1, 0, 1);
    CHECK(evaluate1(space, s, Rat(1, 3)) == Rat(1, 2));
    auto scaled = make_staircase(Rat(5, 9), Rat(2, 3), Rat(2, 3), Rat(1));
    CHECK(evaluate1(space, scaled, Rat(5, 9)) == Rat(2, 3));
    CHECK(evaluate1(space, scaled, Rat(2, 3)) == 1);
}

TEST_CASE("cantor_symbolic rules") {
    auto space = ModelSpace::structured_interval();
    auto pre1 = make_cantor_symbolic(CantorRule::Prepend1);
    // h(1 0-tail) = 5/9; prepend1 of 0-tail address
    CHECK(evaluate1(space, pre1, Rat(1, 3)) == Rat(5, 9));
    auto pre0op = make_cantor_symbolic(CantorRule::Prepend0Op);
    // f-action on C: t = 1-tail maps to 0 (opposite) prefixed by 0
    CHECK(evaluate1(space, pre0op, Rat(2, 3)) == Rat(1, 3) + Rat(0) / 3);
    auto q = make_cantor_symbolic(CantorRule::StairsThenAffine);
    // q(0-tail) = 2/3, q(1-tail) = 1
    CHECK(evaluate1(space, q, Rat(1, 3)) == Rat(2, 3));
    CHECK(evaluate1(space, q, Rat(2, 3)) == 1);
    CHECK_THROWS_AS(evaluate1(space, q, Rat(1, 2)), std::domain_error);
}

TEST_CASE("word evaluation and associativity") {
    auto sys = cantor_ifs();
    Word w00{{0, 0}};
    CHECK(evaluate1(sys, w00, 1) == Rat(1, 9));
    // associativity: w1 ++ w2 applied = w1 applied after w2
    std::vector<Word> words{{{0}}, {{1}}, {{0, 1}}, {{1, 0, 0}}, {{}}};
    for (const auto& w1 : words)
        for (const auto& w2 : words) {
            Word cat;
            cat.letters = w1.letters;
            cat.letters.insert(cat.letters.end(), w2.letters.begin(), w2.letters.end());
            for (int i = 0; i <= 10; ++i) {
                Rat x(i, 10);
                CHECK(evaluate1(sys, cat, x) == evaluate1(sys, w1, evaluate1(sys, w2, x)));
            }
        }
}

TEST_CASE("word image regions and diameters") {
    auto sys = cantor_ifs();
    CHECK(word_image_region_diameter(sys, Word{{0, 0}}) == Rat(1, 9));
    CHECK(word_image_region_diameter(sys, Word{{}}) == 1);
    auto net = build_net(sys, Rat(1, 64));
    CHECK(word_image_diameter(sys, Word{{0, 0}}, net) == Rat(1, 9));
    CHECK(word_image_diameter(sys, Word{{}}, net) == 1);

    // suffix monotonicity: image(h ++ r) inside image(h)
    std::vector<Word> words{{{0}}, {{1}}, {{0, 1}}, {{1, 1}}, {{}}};
    for (const auto& h : words)
        for (const auto& r : words) {
            Word cat;
            cat.letters = h.letters;
            cat.letters.insert(cat.letters.end(), r.letters.begin(), r.letters.end());
            auto rh = std::get<IntervalRegion>(word_image_region(sys, h));
            auto rc = std::get<IntervalRegion>(word_image_region(sys, cat));
            CHECK(rh.lo <= rc.lo);
            CHECK(rc.hi <= rh.hi);
        }
}

TEST_CASE("arc image propagation on the circle") {
    auto space = ModelSpace::circle(23);
    // quarter-slope squeeze onto [0, 23/2]
    auto f = make_pl({{Rat(0), Rat(0)}, {Rat(23), Rat(23, 2)}});
    FunctionSystem sys(space, {f});
    auto arc = std::get<ArcRegion>(word_image_region(sys, Word{{0}}));
    CHECK(arc.len == Rat(23, 2));
    // wrapping arc: rotate by 20 then squeeze
    auto rot = make_pl({{Rat(0), Rat(20)}, {Rat(23), Rat(43)}});
    FunctionSystem sys2(space, {rot, f});
    auto r2 = std::get<ArcRegion>(word_image_region(sys2, Word{{1, 0}}));
    CHECK(r2.len == Rat(23, 2));
}

TEST_CASE("box region image") {
    auto space = ModelSpace::cube(3);
    FunctionSystem sys(space, {make_cube_permute_half(0), make_cube_permute_half(Rat(1, 2))});
    // nine applications halve every side at least three times
    Word w{{0, 1, 0, 1, 1, 0, 0, 1, 0}};
    CHECK(word_image_region_diameter(sys, w) <= Rat(1, 8));
}

TEST_CASE("check_gluing passes continuous and flags broken maps") {
    auto space = ModelSpace::interval(0, 1);
    auto good = make_pl({{Rat(0), Rat(5, 9)}, {Rat(2, 3), Rat(1, 3)}, {Rat(1), Rat(0)}});
    CHECK(check_gluing(space, good).ok);

    MapExpr step;
    step.pieces.push_back({0, Rat(1, 2), PieceKind::Const, 0, 0});
    step.pieces.push_back({Rat(1, 2), 1, PieceKind::Const, Rat(3, 10), Rat(3, 10)});
    auto res = check_gluing(space, step);
    CHECK_FALSE(res.ok);
    CHECK(res.breakpoint == Rat(1, 2));
    CHECK(res.left_value == 0);
    CHECK(res.right_value == Rat(3, 10));

    // circle wrap mismatch
    auto circle = ModelSpace::circle(10);
    auto broken = make_pl({{Rat(0), Rat(1)}, {Rat(10), Rat(5)}});
    CHECK_FALSE(check_gluing(circle, broken).ok);
    auto rot = make_pl({{Rat(0), Rat(4)}, {Rat(10), Rat(14)}});
    CHECK(check_gluing(circle, rot).ok);
}

TEST_CASE("check_weak_contraction") {
    auto space = ModelSpace::interval(0, 1);
    FunctionSystem sys(space, {make_pl({{Rat(0), Rat(0)}, {Rat(1), Rat(1, 3)}})});
    auto net = build_net(sys, Rat(1, 16));
    CHECK(check_weak_contraction(space, sys.maps[0], net).pass);

    auto id = make_identity(space);
    auto res = check_weak_contraction(space, id, net);
    CHECK_FALSE(res.pass);
    CHECK(distance1(space, res.x, res.y) > 0);
}

TEST_CASE("lipschitz audit") {
    auto space = ModelSpace::interval(0, 1);
    auto f = make_pl({{Rat(0), Rat(0)}, {Rat(1), Rat(1, 3)}});
    CHECK(*lipschitz_bound(space, f) == Rat(1, 3));
    auto stairs = make_staircase(0, 1, 0, 1);
    CHECK_FALSE(lipschitz_bound(space, stairs).has_value());
    auto comp = make_compose({f, f});
    CHECK(*lipschitz_bound(space, comp) == Rat(1, 9));
    CHECK(*lipschitz_bound(ModelSpace::cube(2), make_cube_corner(pt(0, 0))) == Rat(1, 2));
}

TEST_CASE("symbolic PL composition and equality") {
    auto space = ModelSpace::circle(23);
    auto refl = make_pl({{Rat(0), Rat(23)}, {Rat(23), Rat(0)}});
    auto rr = pl_compose(space, refl, refl);
    CHECK_FALSE(pl_equality_witness(space, rr, make_identity(space), 0, 23).has_value());
    // x and reflection differ (slopes differ)
    CHECK(pl_equality_witness(space, refl, make_identity(space), 0, 23).has_value());
}

TEST_CASE("preimages of PL maps") {
    auto space = ModelSpace::circle(23);
    auto refl = make_pl({{Rat(0), Rat(23)}, {Rat(23), Rat(0)}});
    auto pts = preimage_points(space, refl, 9);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == 14);

    auto space2 = ModelSpace::interval(0, 1);
    auto tent = make_pl({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1)}, {Rat(1), Rat(0)}});
    auto sols = preimage_points(space2, tent, Rat(1, 2));
    REQUIRE(sols.size() == 2);
    CHECK(sols[0] == Rat(1, 4));
    CHECK(sols[1] == Rat(3, 4));

    MapExpr plateau;
    plateau.pieces.push_back({0, Rat(1, 2), PieceKind::Const, Rat(1, 3), Rat(1, 3)});
    plateau.pieces.push_back({Rat(1, 2), 1, PieceKind::Linear, Rat(1, 3), Rat(1)});
    auto segs = preimage_segments(space2, plateau, Rat(1, 3));
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].first == 0);
    CHECK(segs[0].second == Rat(1, 2));
    CHECK_THROWS_AS(preimage_points(space2, plateau, Rat(1, 3)), std::domain_error);
}
