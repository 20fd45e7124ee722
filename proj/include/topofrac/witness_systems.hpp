// Built-in witness systems, fully constraint-checked at construction:
//
//  * the structured interval [0,1] = L u C u R u gaps with the
//    two-map system (f, g), every figure-table row checkable exactly;
//  * the length-23 circle with the triple (alpha, beta, gamma), its
//    orbit set Q and the derived nine maps;
//  * the cube pair (x2/2, x3, ..., xn, x1) / shifted;
//  * the classical Cantor and binary interval IFS.
#pragma once

#include "contractivity.hpp"

#include <functional>
#include <set>

namespace topofrac {

// ---- structured interval ------------------------------------------------

struct StructuredIntervalSystem {
    ModelSpace space;
    MapExpr f, g;
    FunctionSystem system() const { return FunctionSystem(space, {f, g}, {"f", "g"}); }
};

struct CheckRow {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct CheckReport {
    std::vector<CheckRow> rows;
    int failures = 0;
    void add(std::string name, bool pass, std::string witness = {}) {
        if (!pass) ++failures;
        rows.push_back({std::move(name), pass, std::move(witness)});
    }
    bool ok() const { return failures == 0; }
};

namespace detail {

inline bool region_is(const ModelSpace& space, const Region& r, const Rat& lo, const Rat& hi) {
    if (auto* iv = std::get_if<IntervalRegion>(&r)) return iv->lo == lo && iv->hi == hi;
    (void)space;
    return false;
}

inline std::string rats(const Rat& r) { return rat_str(r); }

}  // namespace detail

// Figure-table verification for (f, g) on the structured interval: every
// row holds exactly for all gap addresses up to `depth`.
inline CheckReport verify_cantor_tables(const StructuredIntervalSystem& sys, int depth = 8) {
    CheckReport rep;
    const ModelSpace& sp = sys.space;
    const MapExpr& f = sys.f;
    const MapExpr& g = sys.g;
    const Rat l(1, 3), r(2, 3);
    auto img = [&](const MapExpr& m, Rat lo, Rat hi) {
        return apply_region(sp, m, IntervalRegion{std::move(lo), std::move(hi)});
    };
    auto ev = [&](const MapExpr& m, const Rat& x) { return evaluate1(sp, m, x); };

    rep.add("f(R)=L", detail::region_is(sp, img(f, r, 1), 0, l));
    rep.add("f(r)=l", ev(f, r) == l);
    rep.add("f(L)=X_empty", detail::region_is(sp, img(f, 0, l), gap_l({}), gap_r({})));
    rep.add("f(l)=l(empty)", ev(f, l) == gap_l({}));
    rep.add("f(C) hull = [l, l(empty)]", detail::region_is(sp, img(f, l, r), l, gap_l({})));
    rep.add("g(R)={p(1)}={1}", detail::region_is(sp, img(g, r, 1), 1, 1));
    rep.add("g(L)={r(empty)}", detail::region_is(sp, img(g, 0, l), gap_r({}), gap_r({})));
    rep.add("g(X_empty)={r}", detail::region_is(sp, img(g, gap_l({}), gap_r({})), r, r));
    rep.add("g(0^C block)=1^C block",
            detail::region_is(sp, img(g, l, Rat(4, 9)), Rat(5, 9), r));
    rep.add("g(1^C block)=R", detail::region_is(sp, img(g, Rat(5, 9), r), r, 1));

    // enumerate addresses s with |s| <= depth
    std::vector<std::vector<int>> addresses{{}};
    {
        std::vector<std::vector<int>> level{{}};
        for (int d = 1; d <= depth; ++d) {
            std::vector<std::vector<int>> next;
            for (auto& s : level)
                for (int bit : {0, 1}) {
                    auto t = s;
                    t.push_back(bit);
                    addresses.push_back(t);
                    next.push_back(std::move(t));
                }
            level = std::move(next);
        }
    }
    auto opp = [](std::vector<int> s) {
        for (int& d : s) d = 1 - d;
        return s;
    };
    auto with0 = [](std::vector<int> s, int lead) {
        s.insert(s.begin(), lead);
        return s;
    };
    for (const auto& s : addresses) {
        std::string tag = "s=";
        for (int d : s) tag += char('0' + d);
        auto s0op = with0(opp(s), 0);
        // f maps gap s onto gap 0^(s^op), swapping endpoints
        rep.add("f(X_s)=X_{0 s^op} " + tag,
                detail::region_is(sp, img(f, gap_l(s), gap_r(s)), gap_l(s0op), gap_r(s0op)));
        rep.add("f(l(s))=r(0 s^op) " + tag, ev(f, gap_l(s)) == gap_r(s0op));
        rep.add("f(r(s))=l(0 s^op) " + tag, ev(f, gap_r(s)) == gap_l(s0op));
        if ((int)s.size() < depth) {
            auto s0 = with0(s, 0), s1 = with0(s, 1);
            // g shifts the 0-block gaps into the 1-block, endpoint-preserving
            rep.add("g(X_{0s})=X_{1s} " + tag,
                    detail::region_is(sp, img(g, gap_l(s0), gap_r(s0)), gap_l(s1), gap_r(s1)));
            rep.add("g(l(0s))=l(1s) " + tag, ev(g, gap_l(s0)) == gap_l(s1));
            rep.add("g(r(0s))=r(1s) " + tag, ev(g, gap_r(s0)) == gap_r(s1));
            // g collapses 1-block gaps to q(l(s)) = q(r(s))
            Rat q_value = Rat(2, 3) +
                          (cantor_binary_value(CantorAddress::gap_left(s))) / 3;
            rep.add("g(X_{1s})={q(l(s))} " + tag,
                    detail::region_is(sp, img(g, gap_l(s1), gap_r(s1)), q_value, q_value));
            rep.add("q(l(s))=q(r(s)) " + tag, ev(g, gap_l(s1)) == ev(g, gap_r(s1)) &&
                                                  ev(g, gap_l(s1)) == q_value);
        }
    }
    // pointwise Cantor action on sampled addresses: prefixes with 0/1 tails
    std::vector<CantorAddress> taddrs;
    for (const auto& s : addresses) {
        taddrs.push_back(CantorAddress{s, {}});
        taddrs.push_back(CantorAddress{s, {1}});
    }
    for (const auto& t : taddrs) {
        Rat x = cantor_coordinate(t);
        std::string tag = "t=" + rat_str(x);
        rep.add("f(h(t))=h(0 t^op) " + tag,
                ev(f, x) == cantor_coordinate(t.opposite().prepend(0)));
        rep.add("g(h(0t))=h(1t) " + tag,
                ev(g, cantor_coordinate(t.prepend(0))) == cantor_coordinate(t.prepend(1)));
        rep.add("g(h(1t))=q(t) " + tag,
                ev(g, cantor_coordinate(t.prepend(1))) ==
                    Rat(2, 3) + cantor_binary_value(t) / 3);
    }
    return rep;
}

// f(x) = 5/9 - x/3 on [0,2/3], 1 - x on [2/3,1];
// g constant 5/9 on L, shift by 2/9 on the 0-block, constant 2/3 on the
// middle gap, staircase onto R over the 1-block, constant 1 on R.
inline StructuredIntervalSystem build_cantor_interval_system(int verify_depth = 8) {
    StructuredIntervalSystem sys;
    sys.space = ModelSpace::structured_interval();
    sys.f = make_pl({{Rat(0), Rat(5, 9)}, {Rat(2, 3), Rat(1, 3)}, {Rat(1), Rat(0)}});
    MapExpr g;
    g.pieces.push_back({Rat(0), Rat(1, 3), PieceKind::Const, Rat(5, 9), Rat(5, 9)});
    g.pieces.push_back({Rat(1, 3), Rat(4, 9), PieceKind::Linear, Rat(5, 9), Rat(2, 3)});
    g.pieces.push_back({Rat(4, 9), Rat(5, 9), PieceKind::Const, Rat(2, 3), Rat(2, 3)});
    g.pieces.push_back({Rat(5, 9), Rat(2, 3), PieceKind::Stairs, Rat(2, 3), Rat(1)});
    g.pieces.push_back({Rat(2, 3), Rat(1), PieceKind::Const, Rat(1), Rat(1)});
    sys.g = g;
    if (!check_gluing(sys.space, sys.f).ok || !check_gluing(sys.space, sys.g).ok)
        throw std::logic_error("structured interval maps failed the gluing check");
    if (verify_depth > 0) {
        CheckReport rep = verify_cantor_tables(sys, std::min(verify_depth, 4));
        if (!rep.ok()) {
            for (const auto& row : rep.rows)
                if (!row.pass)
                    throw std::logic_error("table condition failed: " + row.name);
        }
    }
    return sys;
}

// ---- circle system --------------------------------------------------------

struct CircleWitnessSystem {
    ModelSpace space;
    MapExpr pi, alpha, beta, gamma;
    Rat c = 0, b = 9, d = Rat(23, 2), a = 14;
    Rat fix_alpha = 5, fix_beta = 18;
    FunctionSystem triple() const {
        return FunctionSystem(space, {alpha, beta, gamma}, {"alpha", "beta", "gamma"});
    }
};

namespace detail {

inline bool arc_is(const ModelSpace& sp, const Region& r, const Rat& start, const Rat& len) {
    auto* arc = std::get_if<ArcRegion>(&r);
    if (!arc) return false;
    ArcRegion want = canonical_arc(sp, start, len);
    return arc->start == want.start && arc->len == want.len;
}

// strictly monotone, continuous PL restriction mapping [lo,hi] onto
// [vlo,vhi] (or reversed)
inline bool strictly_monotone_onto(const ModelSpace& sp, const MapExpr& m, const Rat& lo,
                                   const Rat& hi, const Rat& target_lo, const Rat& target_hi) {
    MapExpr pl = to_explicit_pl(sp, m);
    int sign = 0;
    for (const Piece& p : pl.pieces) {
        Rat u = std::max(p.from, lo), v = std::min(p.to, hi);
        if (!(u < v)) continue;
        Rat s = (p.b - p.a) / (p.to - p.from);
        int this_sign = s > 0 ? 1 : (s < 0 ? -1 : 0);
        if (this_sign == 0) return false;
        if (sign == 0) sign = this_sign;
        else if (sign != this_sign) return false;
    }
    Rat va = evaluate1(sp, m, lo), vb = evaluate1(sp, m, hi);
    Rat got_lo = std::min(va, vb), got_hi = std::max(va, vb);
    return got_lo == target_lo && got_hi == target_hi;
}

}  // namespace detail

// The fourteen exact constraints from the circle construction.
inline CheckReport verify_circle_constraints(const CircleWitnessSystem& s) {
    CheckReport rep;
    const ModelSpace& sp = s.space;
    auto ev = [&](const MapExpr& m, const Rat& x) { return evaluate1(sp, m, x); };
    auto arc_img = [&](const MapExpr& m, const Rat& start, const Rat& len) {
        return apply_region(sp, m, canonical_arc(sp, start, len));
    };
    const MapExpr &pi = s.pi, &al = s.alpha, &be = s.beta, &ga = s.gamma;

    // 1: pi is an involution fixing c, d and swapping a/b, A/B, L/R
    bool inv = !pl_equality_witness(sp, pl_compose(sp, pi, pi), make_identity(sp), 0, 23)
                    .has_value();
    bool fixes = ev(pi, s.c) == s.c && ev(pi, s.d) == s.d && ev(pi, s.a) == s.b &&
                 ev(pi, s.b) == s.a;
    bool swaps = detail::arc_is(sp, arc_img(pi, 0, 9), 14, 9) &&
                 detail::arc_is(sp, arc_img(pi, 0, Rat(23, 2)), Rat(23, 2), Rat(23, 2));
    rep.add("pi involution, fixes c,d, swaps a/b, A/B, L/R", inv && fixes && swaps);
    // 2: alpha onto A
    rep.add("alpha(S)=A", detail::arc_is(sp, arc_img(al, 0, 23), 0, 9));
    // 3: alpha = alpha o pi
    rep.add("alpha=alpha.pi",
            !pl_equality_witness(sp, al, pl_compose(sp, al, pi), 0, 23).has_value());
    // 4: alpha|L is a strictly monotone bijection onto A, with fix(alpha)=5
    rep.add("alpha|L homeomorphism onto A, fix(alpha)=5",
            detail::strictly_monotone_onto(sp, al, 0, Rat(23, 2), 0, 9) &&
                ev(al, s.fix_alpha) == s.fix_alpha);
    // 5: alpha(c)=b
    rep.add("alpha(c)=b", ev(al, s.c) == s.b);
    // 6: beta = pi o alpha, with fix(beta)=18=pi(fix(alpha))
    rep.add("beta=pi.alpha, fix(beta)=18",
            !pl_equality_witness(sp, be, pl_compose(sp, pi, al), 0, 23).has_value() &&
                ev(be, s.fix_beta) == s.fix_beta && ev(pi, s.fix_alpha) == s.fix_beta);
    // 7: gamma onto C
    rep.add("gamma(S)=C", detail::arc_is(sp, arc_img(ga, 0, 23), 9, 5));
    // 8: gamma = gamma o pi
    rep.add("gamma=gamma.pi",
            !pl_equality_witness(sp, ga, pl_compose(sp, ga, pi), 0, 23).has_value());
    // 9: gamma^{-1}(b) = C
    {
        auto segs = preimage_segments(sp, ga, s.b);
        rep.add("gamma^{-1}(b)=C",
                segs.size() == 1 && segs[0].first == 9 && segs[0].second == 14);
    }
    // 10: gamma^{-1}(a) = alpha(C) u beta(C) = [0,2] u [21,23]
    {
        auto segs = preimage_segments(sp, ga, s.a);
        bool pre = segs.size() == 2 && segs[0] == std::pair<Rat, Rat>(0, 2) &&
                   segs[1] == std::pair<Rat, Rat>(21, 23);
        bool imgs = detail::arc_is(sp, arc_img(al, 9, 5), 0, 2) &&
                    detail::arc_is(sp, arc_img(be, 9, 5), 21, 2);
        rep.add("gamma^{-1}(a)=alpha(C)u beta(C)=[0,2]u[21,23]", pre && imgs);
    }
    // 11: gamma maps alpha(A)=[2,9] and beta(A)=[14,21] homeomorphically onto C
    rep.add("gamma|alpha(A) and gamma|beta(A) onto C",
            detail::arc_is(sp, arc_img(al, 0, 9), 2, 7) &&
                detail::strictly_monotone_onto(sp, ga, 2, 9, 9, 14) &&
                detail::arc_is(sp, arc_img(be, 0, 9), 14, 7) &&
                detail::strictly_monotone_onto(sp, ga, 14, 21, 9, 14));
    // 12: gamma(fix(alpha)) = d
    rep.add("gamma(fix(alpha))=d", ev(ga, s.fix_alpha) == s.d);
    // 13: gamma|E = pi o gamma o alpha|E on E=[5,9], symbolically
    rep.add("gamma|E=pi.gamma.alpha|E",
            !pl_equality_witness(sp, ga, pl_compose(sp, pi, pl_compose(sp, ga, al)), 5, 9)
                 .has_value());
    // 14: metric data |alpha(A)|=7 and dist(fix(alpha), alpha(a))=3
    rep.add("|alpha(A)|=7 and dist(fix(alpha),alpha(a))=3",
            std::get<ArcRegion>(arc_img(al, 0, 9)).len == 7 &&
                circle_distance(sp.length, s.fix_alpha, ev(al, s.a)) == 3 &&
                ev(al, s.a) == 2);
    return rep;
}

inline CircleWitnessSystem build_circle_system() {
    CircleWitnessSystem s;
    s.space = ModelSpace::circle(23);
    s.pi = make_pl({{Rat(0), Rat(23)}, {Rat(23), Rat(0)}});
    s.alpha = make_pl({{Rat(0), Rat(9)},
                       {Rat(5), Rat(5)},
                       {Rat(9), Rat(2)},
                       {Rat(23, 2), Rat(0)},
                       {Rat(14), Rat(2)},
                       {Rat(18), Rat(5)},
                       {Rat(23), Rat(9)}});
    s.beta = make_pl({{Rat(0), Rat(14)},
                      {Rat(5), Rat(18)},
                      {Rat(9), Rat(21)},
                      {Rat(23, 2), Rat(23)},
                      {Rat(14), Rat(21)},
                      {Rat(18), Rat(18)},
                      {Rat(23), Rat(14)}});
    MapExpr ga;
    ga.pieces.push_back({Rat(0), Rat(2), PieceKind::Const, Rat(14), Rat(14)});
    ga.pieces.push_back({Rat(2), Rat(5), PieceKind::Linear, Rat(14), Rat(23, 2)});
    ga.pieces.push_back({Rat(5), Rat(9), PieceKind::Linear, Rat(23, 2), Rat(9)});
    ga.pieces.push_back({Rat(9), Rat(14), PieceKind::Const, Rat(9), Rat(9)});
    ga.pieces.push_back({Rat(14), Rat(18), PieceKind::Linear, Rat(9), Rat(23, 2)});
    ga.pieces.push_back({Rat(18), Rat(21), PieceKind::Linear, Rat(23, 2), Rat(14)});
    ga.pieces.push_back({Rat(21), Rat(23), PieceKind::Const, Rat(14), Rat(14)});
    s.gamma = ga;
    CheckReport rep = verify_circle_constraints(s);
    if (!rep.ok()) {
        for (const auto& row : rep.rows)
            if (!row.pass) throw std::logic_error("circle constraint failed: " + row.name);
    }
    return s;
}

// ---- orbit set Q and the claims -------------------------------------------

struct OrbitSetQ {
    int depth = 0;
    std::vector<Rat> points;       // sorted
    std::map<Rat, int> generation; // first word length producing the point
};

inline OrbitSetQ orbit_Q(const CircleWitnessSystem& sys, int depth) {
    if (depth < 0 || depth > 12) throw std::invalid_argument("orbit depth must be in [0,12]");
    OrbitSetQ q;
    q.depth = depth;
    std::vector<Rat> frontier{sys.a};
    q.generation[sys.a] = 0;
    for (int d = 1; d <= depth; ++d) {
        std::vector<Rat> next;
        for (const Rat& x : frontier)
            for (const MapExpr* m : {&sys.alpha, &sys.beta, &sys.gamma}) {
                Rat y = evaluate1(sys.space, *m, x);
                if (!q.generation.count(y)) {
                    q.generation.emplace(y, d);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    for (auto& [x, g] : q.generation) q.points.push_back(x);
    std::sort(q.points.begin(), q.points.end());
    return q;
}

struct ClaimsReport {
    CheckReport checks;
    std::vector<Rat> preimage_closure_of_c;
};

// Truncation-safe Claim A (pi(Q_d) inside Q_{d+1}), Claim B (preimages
// of orbit points other than a, b stay in Q_{d+1}), and the accumulated
// preimage set of c.
inline ClaimsReport check_circle_claims(const CircleWitnessSystem& sys, const OrbitSetQ& q) {
    ClaimsReport rep;
    OrbitSetQ q1 = orbit_Q(sys, q.depth + 1);
    auto in_q1 = [&](const Rat& x) { return q1.generation.count(x) > 0; };
    bool claim_a = true;
    Rat claim_a_witness;
    for (const Rat& x : q.points) {
        Rat px = evaluate1(sys.space, sys.pi, x);
        if (!in_q1(px)) {
            claim_a = false;
            claim_a_witness = x;
            break;
        }
    }
    rep.checks.add("claim A: pi(Q_d) in Q_{d+1}", claim_a,
                   claim_a ? "" : rat_str(claim_a_witness));
    bool claim_b = true;
    std::string claim_b_witness;
    for (const Rat& x : q.points) {
        if (x == sys.a || x == sys.b) continue;
        for (const MapExpr* m : {&sys.alpha, &sys.beta, &sys.gamma}) {
            for (const Rat& pre : preimage_points(sys.space, *m, x))
                if (!in_q1(pre)) {
                    claim_b = false;
                    claim_b_witness = rat_str(pre) + " -> " + rat_str(x);
                }
        }
        if (!claim_b) break;
    }
    rep.checks.add("claim B: preimages of Q_d\\{a,b} in Q_{d+1}", claim_b, claim_b_witness);
    // orbit invariance, truncation-safe: images of Q_d lie in Q_{d+1},
    // and Q_{d+1} beyond the seed is reached from Q_d
    {
        std::set<Rat> images;
        bool fwd = true;
        for (const Rat& x : q.points)
            for (const MapExpr* m : {&sys.alpha, &sys.beta, &sys.gamma}) {
                Rat y = evaluate1(sys.space, *m, x);
                images.insert(y);
                fwd = fwd && in_q1(y);
            }
        bool bwd = true;
        for (const Rat& y : q1.points)
            if (y != sys.a && !images.count(y)) bwd = false;
        rep.checks.add("orbit invariance at finite depth", fwd && bwd);
    }
    // c is not in Q (exact, at this depth)
    rep.checks.add("c not in Q", !q.generation.count(sys.c));
    // accumulated preimages of c over words of length <= depth
    std::set<Rat> closure{sys.c};
    for (int d = 0; d < q.depth; ++d) {
        std::set<Rat> next = closure;
        for (const Rat& x : closure)
            for (const MapExpr* m : {&sys.alpha, &sys.beta, &sys.gamma})
                for (auto& [lo, hi] : preimage_segments(sys.space, *m, x)) {
                    if (lo != hi) continue;  // c, d, fixes are never constant values
                    next.insert(lo);
                }
        if (next == closure) break;
        closure = std::move(next);
    }
    rep.preimage_closure_of_c.assign(closure.begin(), closure.end());
    std::vector<Rat> expected{sys.c, sys.fix_alpha, Rat(23, 2), sys.fix_beta};
    std::sort(expected.begin(), expected.end());
    rep.checks.add("preimage closure of c = {c, d, fix(alpha), fix(beta)}",
                   q.depth >= 4 ? rep.preimage_closure_of_c == expected : true);
    return rep;
}

// ---- derived nine maps ------------------------------------------------------

struct NineMapSystem {
    FunctionSystem system;  // f1..f6, g1, g2, g3
    CheckReport equalities; // f3 = f4 = f5 = f6 as functions
};

inline NineMapSystem derived_nine_maps(const CircleWitnessSystem& s) {
    const MapExpr &al = s.alpha, &be = s.beta, &ga = s.gamma;
    std::vector<MapExpr> maps{
        al,
        be,
        make_compose({ga, al, al}),
        make_compose({ga, al, be}),
        make_compose({ga, be, al}),
        make_compose({ga, be, be}),
        make_compose({ga, ga}),
        make_compose({ga, al, ga}),
        make_compose({ga, be, ga}),
    };
    NineMapSystem out{FunctionSystem(s.space, maps,
                                     {"f1", "f2", "f3", "f4", "f5", "f6", "g1", "g2", "g3"}),
                      {}};
    for (int i = 3; i <= 5; ++i) {
        auto w = pl_equality_witness(s.space, out.system.maps[2], out.system.maps[i], 0, 23);
        out.equalities.add("f3=f" + std::to_string(i + 1), !w.has_value(),
                           w ? rat_str(*w) : "");
    }
    if (!out.equalities.ok()) throw std::logic_error("nine-map function equalities failed");
    return out;
}

// Property (A) regrouping: translate a word over {alpha,beta,gamma}
// (letters 0,1,2) into a word over the nine maps plus a remainder of at
// most two letters, grouping from the left.
struct RegroupedWord {
    std::vector<int> nine_letters;
    std::vector<int> remainder;  // letters over the triple, applied innermost
};

inline RegroupedWord regroup_to_nine(const std::vector<int>& w) {
    RegroupedWord out;
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] != 2) {
            out.nine_letters.push_back(w[i]);  // f1 or f2
            i += 1;
            continue;
        }
        if (i + 1 >= w.size()) break;
        if (w[i + 1] == 2) {
            out.nine_letters.push_back(6);  // g1 = gamma gamma
            i += 2;
            continue;
        }
        if (i + 2 >= w.size()) break;
        int second = w[i + 1];
        int third = w[i + 2];
        if (third == 2) out.nine_letters.push_back(7 + second);       // g2 / g3
        else out.nine_letters.push_back(2 + 2 * second + third);      // f3..f6
        i += 3;
    }
    out.remainder.assign(w.begin() + i, w.end());
    return out;
}

// ---- cube system -------------------------------------------------------------

inline FunctionSystem build_cube_system(int n) {
    if (n < 1) throw std::invalid_argument("cube dimension must be >= 1");
    return FunctionSystem(ModelSpace::cube(n),
                          {make_cube_permute_half(0), make_cube_permute_half(Rat(1, 2))},
                          {"f", "g"});
}

// diam of every length-m word image is at most 2^{-floor(m/n)}; checked
// exhaustively for m <= m_max.
inline CheckReport verify_cube_contraction_bound(const FunctionSystem& sys, int m_max) {
    CheckReport rep;
    int n = sys.space.dim;
    std::vector<Region> level{full_region(sys.space)};
    for (int m = 1; m <= m_max; ++m) {
        std::vector<Region> next;
        next.reserve(level.size() * 2);
        Rat worst = 0;
        for (const Region& r : level)
            for (const MapExpr& map : sys.maps) {
                Region img = apply_region(sys.space, map, r);
                worst = std::max(worst, region_diameter(sys.space, img));
                next.push_back(std::move(img));
            }
        Rat bound = pow2(-(m / n));
        rep.add("cube words length " + std::to_string(m) + " diameter <= " + rat_str(bound),
                worst <= bound, rat_str(worst));
        level = std::move(next);
    }
    return rep;
}

// ---- classical IFS -------------------------------------------------------------

inline FunctionSystem build_cantor_ifs() {
    auto space = ModelSpace::interval(0, 1);
    return FunctionSystem(space,
                          {make_pl({{Rat(0), Rat(0)}, {Rat(1), Rat(1, 3)}}),
                           make_pl({{Rat(0), Rat(2, 3)}, {Rat(1), Rat(1)}})},
                          {"x/3", "x/3+2/3"});
}

inline FunctionSystem build_binary_ifs() {
    auto space = ModelSpace::interval(0, 1);
    return FunctionSystem(space,
                          {make_pl({{Rat(0), Rat(0)}, {Rat(1), Rat(1, 2)}}),
                           make_pl({{Rat(0), Rat(1, 2)}, {Rat(1), Rat(1)}})},
                          {"x/2", "x/2+1/2"});
}

inline FunctionSystem build_sierpinski_ifs() {
    auto space = ModelSpace::cube(2);
    return FunctionSystem(space,
                          {make_cube_corner(pt(0, 0)), make_cube_corner(pt(1, 0)),
                           make_cube_corner(pt(0, 1))},
                          {"corner00", "corner10", "corner01"});
}

}  // namespace topofrac
