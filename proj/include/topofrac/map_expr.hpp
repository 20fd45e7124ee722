// Closed-form continuous self-maps and their exact algebra.
//
// A map is one of: a piecewise map (linear / constant / staircase
// pieces over a partition of the coordinate range), a constant, a
// reflection-precomposition, a cube map, a composition chain, or a
// symbolic Cantor-address transform.  Everything evaluates in exact
// rational arithmetic; staircase pieces are exact up to the staircase
// truncation depth.
#pragma once

#include "cantor.hpp"
#include "region.hpp"

#include <memory>
#include <optional>
#include <string>

namespace topofrac {

enum class PieceKind { Linear, Const, Stairs };

struct Piece {
    Rat from, to;
    PieceKind kind = PieceKind::Linear;
    // Linear: a = value at `from`, b = value at `to` (lift values on circles).
    // Const:  a = the value.
    // Stairs: the piece maps [from,to] onto [a,b] through the Cantor function.
    Rat a, b;
};

enum class MapKind { Piecewise, Constant, ReflectCompose, CubeAffine, Compose, CantorSymbolic };
enum class CubeVariant { PermuteHalf, Corner };
enum class CantorRule { Prepend0Op, Prepend1, StairsThenAffine };

struct MapExpr {
    MapKind kind = MapKind::Piecewise;
    std::vector<Piece> pieces;                // Piecewise
    Point value;                              // Constant
    std::shared_ptr<const MapExpr> inner;     // ReflectCompose
    CubeVariant cube_variant = CubeVariant::PermuteHalf;
    Rat cube_shift;                           // PermuteHalf
    Point cube_corner;                        // Corner
    std::vector<MapExpr> chain;               // Compose, outermost first
    CantorRule cantor_rule = CantorRule::Prepend0Op;
    int stairs_depth = 40;
};

// ---- constructors ----------------------------------------------------

inline MapExpr make_const(Point value) {
    MapExpr m;
    m.kind = MapKind::Constant;
    m.value = std::move(value);
    return m;
}
inline MapExpr make_const1(Rat v) { return make_const(pt(std::move(v))); }

// Piecewise-linear map through the given (coordinate, value) nodes.
inline MapExpr make_pl(std::vector<std::pair<Rat, Rat>> nodes) {
    if (nodes.size() < 2) throw std::invalid_argument("make_pl: need >= 2 nodes");
    MapExpr m;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (!(nodes[i].first < nodes[i + 1].first))
            throw std::invalid_argument("make_pl: nodes must be strictly increasing");
        m.pieces.push_back({nodes[i].first, nodes[i + 1].first, PieceKind::Linear,
                            nodes[i].second, nodes[i + 1].second});
    }
    return m;
}

inline MapExpr make_identity(const ModelSpace& space) {
    return make_pl({{space.coord_lo(), space.coord_lo()}, {space.coord_hi(), space.coord_hi()}});
}

// Staircase map: [src_lo,src_hi] -> [dst_lo,dst_hi] through the Cantor
// function (a single-piece piecewise map).
inline MapExpr make_staircase(Rat src_lo, Rat src_hi, Rat dst_lo, Rat dst_hi) {
    MapExpr m;
    m.pieces.push_back({std::move(src_lo), std::move(src_hi), PieceKind::Stairs,
                        std::move(dst_lo), std::move(dst_hi)});
    return m;
}

inline MapExpr make_reflect_compose(MapExpr inner) {
    MapExpr m;
    m.kind = MapKind::ReflectCompose;
    m.inner = std::make_shared<const MapExpr>(std::move(inner));
    return m;
}

inline MapExpr make_cube_permute_half(Rat shift) {
    MapExpr m;
    m.kind = MapKind::CubeAffine;
    m.cube_variant = CubeVariant::PermuteHalf;
    m.cube_shift = std::move(shift);
    return m;
}

inline MapExpr make_cube_corner(Point corner) {
    MapExpr m;
    m.kind = MapKind::CubeAffine;
    m.cube_variant = CubeVariant::Corner;
    m.cube_corner = std::move(corner);
    return m;
}

// Composition, outermost first: compose({f,g,h}) = f o g o h.
inline MapExpr make_compose(std::vector<MapExpr> maps) {
    if (maps.empty()) throw std::invalid_argument("make_compose: empty chain");
    if (maps.size() == 1) return maps[0];
    MapExpr m;
    m.kind = MapKind::Compose;
    m.chain = std::move(maps);
    return m;
}

inline MapExpr make_cantor_symbolic(CantorRule rule) {
    MapExpr m;
    m.kind = MapKind::CantorSymbolic;
    m.cantor_rule = rule;
    return m;
}

// ---- evaluation ------------------------------------------------------

namespace detail {

inline const Piece& locate_piece(const std::vector<Piece>& pieces, const Rat& x) {
    // pieces are sorted and contiguous; find the piece whose closed range holds x
    std::size_t lo = 0, hi = pieces.size();
    while (lo + 1 < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (pieces[mid].from <= x) lo = mid;
        else hi = mid;
    }
    const Piece& p = pieces[lo];
    if (x < p.from || x > p.to) throw std::domain_error("coordinate outside piecewise domain");
    return p;
}

inline Rat piece_value(const Piece& p, const Rat& x, int stairs_depth) {
    switch (p.kind) {
        case PieceKind::Linear:
            return p.a + (p.b - p.a) * (x - p.from) / (p.to - p.from);
        case PieceKind::Const:
            return p.a;
        case PieceKind::Stairs:
            return p.a + (p.b - p.a) * cantor_stairs((x - p.from) / (p.to - p.from), stairs_depth);
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

inline Rat evaluate1(const ModelSpace& space, const MapExpr& map, const Rat& x);

inline Point evaluate(const ModelSpace& space, const MapExpr& map, const Point& x) {
    switch (map.kind) {
        case MapKind::Constant:
            return map.value;
        case MapKind::CubeAffine: {
            if (space.kind != SpaceKind::Cube) throw std::domain_error("cube map on non-cube space");
            int n = space.dim;
            if ((int)x.size() != n) throw std::domain_error("cube point has wrong dimension");
            for (const Rat& c : x)
                if (c < 0 || c > 1) throw std::domain_error("point outside cube domain");
            Point out(n);
            if (map.cube_variant == CubeVariant::PermuteHalf) {
                out[0] = map.cube_shift + x[1 % n] / 2;
                for (int j = 1; j + 1 < n; ++j) out[j] = x[j + 1];
                if (n > 1) out[n - 1] = x[0];
            } else {
                for (int j = 0; j < n; ++j) out[j] = (x[j] + map.cube_corner.at(j)) / 2;
            }
            return out;
        }
        case MapKind::Compose: {
            Point cur = x;
            for (auto it = map.chain.rbegin(); it != map.chain.rend(); ++it)
                cur = evaluate(space, *it, cur);
            return cur;
        }
        default:
            if (x.size() != 1) throw std::domain_error("expected 1D point");
            return pt(evaluate1(space, map, x[0]));
    }
}

inline Rat evaluate1(const ModelSpace& space, const MapExpr& map, const Rat& x) {
    switch (map.kind) {
        case MapKind::Constant:
            return map.value.at(0);
        case MapKind::Piecewise: {
            Rat xr = x;
            if (space.circle_like()) xr = rat_mod(x, space.length);
            else if (x < space.lo || x > space.hi)
                throw std::domain_error("point outside interval domain");
            Rat v = detail::piece_value(detail::locate_piece(map.pieces, xr), xr, map.stairs_depth);
            return space.circle_like() ? rat_mod(v, space.length) : v;
        }
        case MapKind::ReflectCompose: {
            Rat rx = space.circle_like() ? rat_mod(space.length - x, space.length)
                                         : space.lo + space.hi - x;
            return evaluate1(space, *map.inner, rx);
        }
        case MapKind::Compose: {
            Rat cur = x;
            for (auto it = map.chain.rbegin(); it != map.chain.rend(); ++it)
                cur = evaluate1(space, *it, cur);
            return cur;
        }
        case MapKind::CantorSymbolic: {
            auto addr = to_cantor_address(x);
            if (!addr) throw std::domain_error("cantor_symbolic: point not in the Cantor copy");
            switch (map.cantor_rule) {
                case CantorRule::Prepend0Op:
                    return cantor_coordinate(addr->opposite().prepend(0));
                case CantorRule::Prepend1:
                    return cantor_coordinate(addr->prepend(1));
                case CantorRule::StairsThenAffine:
                    return Rat(2, 3) + cantor_binary_value(*addr) / 3;
            }
            throw std::logic_error("unreachable");
        }
        case MapKind::CubeAffine:
            throw std::domain_error("cube map is not a 1D map");
    }
    throw std::logic_error("unreachable");
}

// ---- region images ---------------------------------------------------

namespace detail {

// Lift-value range of one piece restricted to [u,v] subset of [from,to].
inline std::pair<Rat, Rat> piece_range(const Piece& p, const Rat& u, const Rat& v,
                                       int stairs_depth) {
    Rat a = piece_value(p, u, stairs_depth);
    Rat b = piece_value(p, v, stairs_depth);
    if (a > b) std::swap(a, b);
    return {a, b};
}

}  // namespace detail

inline Region apply_region(const ModelSpace& space, const MapExpr& map, const Region& region);

namespace detail {

inline Region piecewise_interval_image(const ModelSpace& space, const MapExpr& map,
                                       const IntervalRegion& iv) {
    bool first = true;
    Rat mn, mx;
    for (const Piece& p : map.pieces) {
        Rat u = std::max(p.from, iv.lo), v = std::min(p.to, iv.hi);
        if (u > v) continue;
        auto [a, b] = piece_range(p, u, v, map.stairs_depth);
        if (first || a < mn) mn = a;
        if (first || b > mx) mx = b;
        first = false;
    }
    if (first) throw std::domain_error("region outside piecewise domain");
    return IntervalRegion{mn, mx};
}

inline Region piecewise_arc_image(const ModelSpace& space, const MapExpr& map,
                                  const ArcRegion& arc) {
    const Rat& L = space.length;
    std::vector<std::pair<Rat, Rat>> segs;  // coordinate segments in [0, L]
    if (arc.len >= L) segs.push_back({Rat(0), L});
    else {
        Rat s = rat_mod(arc.start, L), e = s + arc.len;
        if (e <= L) segs.push_back({s, e});
        else {
            segs.push_back({s, L});
            segs.push_back({Rat(0), e - L});
        }
    }
    std::vector<ArcRegion> out;
    for (const auto& [su, sv] : segs) {
        for (const Piece& p : map.pieces) {
            Rat u = std::max(p.from, su), v = std::min(p.to, sv);
            if (u > v) continue;
            if (u == v && su != sv) {
                // zero-length overlap of a nondegenerate segment; the
                // neighboring piece covers the shared endpoint
                continue;
            }
            auto [a, b] = piece_range(p, u, v, map.stairs_depth);
            if (b - a >= L) return ArcRegion{0, L};
            out.push_back(canonical_arc(space, a, b - a));
        }
    }
    if (out.empty()) throw std::domain_error("region outside piecewise domain");
    return enclosing_arc(space, std::move(out));
}

}  // namespace detail

inline Region apply_region(const ModelSpace& space, const MapExpr& map, const Region& region) {
    switch (map.kind) {
        case MapKind::Constant: {
            if (space.kind == SpaceKind::Cube) {
                BoxRegion b;
                for (const Rat& c : map.value) b.sides.push_back({c, c});
                return b;
            }
            if (space.circle_like())
                return canonical_arc(space, rat_mod(map.value.at(0), space.length), Rat(0));
            return IntervalRegion{map.value.at(0), map.value.at(0)};
        }
        case MapKind::Piecewise: {
            if (auto* iv = std::get_if<IntervalRegion>(&region))
                return detail::piecewise_interval_image(space, map, *iv);
            if (auto* arc = std::get_if<ArcRegion>(&region))
                return detail::piecewise_arc_image(space, map, *arc);
            throw std::domain_error("piecewise map applied to box region");
        }
        case MapKind::ReflectCompose: {
            Region reflected;
            if (auto* iv = std::get_if<IntervalRegion>(&region)) {
                Rat s = space.lo + space.hi;
                reflected = IntervalRegion{s - iv->hi, s - iv->lo};
            } else if (auto* arc = std::get_if<ArcRegion>(&region)) {
                if (arc->len >= space.length) reflected = *arc;
                else
                    reflected = canonical_arc(space, space.length - (arc->start + arc->len),
                                              arc->len);
            } else {
                throw std::domain_error("reflect_compose on box region");
            }
            return apply_region(space, *map.inner, reflected);
        }
        case MapKind::Compose: {
            Region cur = region;
            for (auto it = map.chain.rbegin(); it != map.chain.rend(); ++it)
                cur = apply_region(space, *it, cur);
            return cur;
        }
        case MapKind::CubeAffine: {
            const auto& box = std::get<BoxRegion>(region);
            int n = space.dim;
            BoxRegion out;
            out.sides.resize(n);
            if (map.cube_variant == CubeVariant::PermuteHalf) {
                const auto& s1 = box.sides.at(1 % n);
                out.sides[0] = {map.cube_shift + s1.first / 2, map.cube_shift + s1.second / 2};
                for (int j = 1; j + 1 < n; ++j) out.sides[j] = box.sides[j + 1];
                if (n > 1) out.sides[n - 1] = box.sides[0];
            } else {
                for (int j = 0; j < n; ++j)
                    out.sides[j] = {(box.sides[j].first + map.cube_corner.at(j)) / 2,
                                    (box.sides[j].second + map.cube_corner.at(j)) / 2};
            }
            return out;
        }
        case MapKind::CantorSymbolic:
            throw std::domain_error("cantor_symbolic maps have no region semantics");
    }
    throw std::logic_error("unreachable");
}

// ---- structure queries -----------------------------------------------

inline void collect_breakpoints(const ModelSpace& space, const MapExpr& map,
                                std::vector<Rat>& out) {
    switch (map.kind) {
        case MapKind::Piecewise:
            for (const Piece& p : map.pieces) out.push_back(p.from);
            if (!map.pieces.empty()) out.push_back(map.pieces.back().to);
            break;
        case MapKind::ReflectCompose: {
            std::vector<Rat> inner;
            collect_breakpoints(space, *map.inner, inner);
            for (const Rat& b : inner) {
                out.push_back(b);
                out.push_back(space.circle_like() ? rat_mod(space.length - b, space.length)
                                                  : space.lo + space.hi - b);
            }
            break;
        }
        case MapKind::Compose:
            for (const MapExpr& m : map.chain) collect_breakpoints(space, m, out);
            break;
        default:
            break;
    }
}

// Certified Lipschitz upper bound, when one exists by slope audit.
// Staircase pieces are not Lipschitz, so maps carrying them get nullopt.
inline std::optional<Rat> lipschitz_bound(const ModelSpace& space, const MapExpr& map) {
    switch (map.kind) {
        case MapKind::Constant:
            return Rat(0);
        case MapKind::Piecewise: {
            Rat best = 0;
            for (const Piece& p : map.pieces) {
                if (p.kind == PieceKind::Stairs) {
                    if (p.a != p.b) return std::nullopt;
                    continue;  // degenerate staircase is constant
                }
                if (p.kind == PieceKind::Const) continue;
                best = std::max(best, rat_abs(Rat((p.b - p.a) / (p.to - p.from))));
            }
            return best;
        }
        case MapKind::ReflectCompose:
            return lipschitz_bound(space, *map.inner);
        case MapKind::Compose: {
            Rat prod = 1;
            for (const MapExpr& m : map.chain) {
                auto b = lipschitz_bound(space, m);
                if (!b) return std::nullopt;
                prod *= *b;
            }
            return prod;
        }
        case MapKind::CubeAffine:
            return map.cube_variant == CubeVariant::Corner ? Rat(1, 2) : Rat(1);
        case MapKind::CantorSymbolic:
            return std::nullopt;
    }
    return std::nullopt;
}

// ---- continuity (gluing) check ----------------------------------------

struct GluingResult {
    bool ok = true;
    Rat breakpoint;
    Rat left_value, right_value;
    std::string detail;
};

namespace detail {

inline Rat piece_end_value(const Piece& p, bool at_to) {
    switch (p.kind) {
        case PieceKind::Linear:
        case PieceKind::Stairs:
            return at_to ? p.b : p.a;
        case PieceKind::Const:
            return p.a;
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

// Verifies the piecewise structure is a partition of the coordinate
// range and adjacent pieces agree at shared breakpoints (mod length on
// circles).  Composite kinds are continuous iff their members are.
inline GluingResult check_gluing(const ModelSpace& space, const MapExpr& map) {
    auto fail = [](Rat bp, Rat lv, Rat rv, std::string d) {
        return GluingResult{false, std::move(bp), std::move(lv), std::move(rv), std::move(d)};
    };
    switch (map.kind) {
        case MapKind::Constant:
        case MapKind::CubeAffine:
        case MapKind::CantorSymbolic:
            return {};
        case MapKind::ReflectCompose:
            return check_gluing(space, *map.inner);
        case MapKind::Compose:
            for (const MapExpr& m : map.chain) {
                auto r = check_gluing(space, m);
                if (!r.ok) return r;
            }
            return {};
        case MapKind::Piecewise: {
            if (map.pieces.empty()) return fail(0, 0, 0, "no pieces");
            if (map.pieces.front().from != space.coord_lo() ||
                map.pieces.back().to != space.coord_hi())
                return fail(map.pieces.front().from, 0, 0, "pieces do not cover the space");
            for (std::size_t i = 0; i < map.pieces.size(); ++i) {
                const Piece& p = map.pieces[i];
                if (!(p.from < p.to)) return fail(p.from, 0, 0, "empty piece");
                if (i + 1 < map.pieces.size()) {
                    const Piece& q = map.pieces[i + 1];
                    if (q.from != p.to) return fail(p.to, 0, 0, "gap between pieces");
                    Rat lv = detail::piece_end_value(p, true);
                    Rat rv = detail::piece_end_value(q, false);
                    bool same = space.circle_like() ? rat_mod(lv - rv, space.length) == 0
                                                    : lv == rv;
                    if (!same) return fail(p.to, lv, rv, "value mismatch at breakpoint");
                }
            }
            if (space.circle_like()) {
                Rat lv = detail::piece_end_value(map.pieces.back(), true);
                Rat rv = detail::piece_end_value(map.pieces.front(), false);
                if (rat_mod(lv - rv, space.length) != 0)
                    return fail(space.length, lv, rv, "value mismatch at wrap");
            }
            return {};
        }
    }
    throw std::logic_error("unreachable");
}

// ---- symbolic piecewise-linear algebra --------------------------------
// These helpers require pure PL maps (Linear/Const pieces only).

namespace detail {

inline bool is_pure_pl(const MapExpr& m) {
    if (m.kind != MapKind::Piecewise) return false;
    for (const Piece& p : m.pieces)
        if (p.kind == PieceKind::Stairs) return false;
    return true;
}

}  // namespace detail

// Explicit PL form of any expression built from PL pieces, reflections,
// constants and compositions on a 1D space.
inline MapExpr to_explicit_pl(const ModelSpace& space, const MapExpr& map);

// Symbolic composition outer o inner of explicit PL maps; the result's
// breakpoints are inner's plus preimages of outer's breakpoints.
inline MapExpr pl_compose(const ModelSpace& space, const MapExpr& outer_raw,
                          const MapExpr& inner_raw) {
    MapExpr outer = to_explicit_pl(space, outer_raw);
    MapExpr inner = to_explicit_pl(space, inner_raw);
    const bool circ = space.circle_like();
    const Rat L = circ ? space.length : Rat(0);
    std::vector<Rat> outer_bps;
    for (const Piece& p : outer.pieces) outer_bps.push_back(p.from);
    outer_bps.push_back(outer.pieces.back().to);

    std::vector<Rat> cuts;
    for (const Piece& p : inner.pieces) {
        cuts.push_back(p.from);
        cuts.push_back(p.to);
        if (p.kind == PieceKind::Const || p.a == p.b) continue;
        Rat lo = std::min(p.a, p.b), hi = std::max(p.a, p.b);
        for (const Rat& c : outer_bps) {
            if (circ) {
                // lift copies c + kL crossing [lo,hi]
                Int k0 = rat_floor((lo - c) / L);
                for (Int k = k0; ; ++k) {
                    Rat cc = c + Rat(k) * L;
                    if (cc > hi) break;
                    if (cc >= lo) {
                        Rat x = p.from + (cc - p.a) * (p.to - p.from) / (p.b - p.a);
                        if (x >= p.from && x <= p.to) cuts.push_back(x);
                    }
                }
            } else if (c >= lo && c <= hi) {
                Rat x = p.from + (c - p.a) * (p.to - p.from) / (p.b - p.a);
                if (x >= p.from && x <= p.to) cuts.push_back(x);
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    MapExpr out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rat& u = cuts[i];
        const Rat& v = cuts[i + 1];
        // inner is affine on the cell; its lift values at the ends come
        // from its (unique) piece over the cell
        const Piece& ip = detail::locate_piece(inner.pieces, (u + v) / 2);
        Rat fu = detail::piece_value(ip, u, inner.stairs_depth);
        Rat fv = detail::piece_value(ip, v, inner.stairs_depth);
        Rat fm = (fu + fv) / 2;
        // the image stays inside one outer piece (cuts include breakpoint
        // preimages); find it through the reduced midpoint and its lift shift
        Rat m_red = circ ? rat_mod(fm, L) : fm;
        const Piece& op = detail::locate_piece(outer.pieces, m_red);
        Rat shift = fm - m_red;
        Rat cu = fu - shift, cv = fv - shift;
        Rat plo = std::min(cu, cv), phi = std::max(cu, cv);
        if (plo < op.from || phi > op.to) {
            if (fu == fv) {
                // degenerate image sitting exactly on a shared breakpoint
                cu = cv = m_red;
            } else {
                throw std::logic_error("pl_compose: breakpoint crossing was not cut");
            }
        }
        out.pieces.push_back({u, v, PieceKind::Linear,
                              detail::piece_value(op, cu, outer.stairs_depth),
                              detail::piece_value(op, cv, outer.stairs_depth)});
    }
    return out;
}

inline MapExpr to_explicit_pl(const ModelSpace& space, const MapExpr& map) {
    switch (map.kind) {
        case MapKind::Piecewise:
            if (!detail::is_pure_pl(map))
                throw std::invalid_argument("staircase pieces have no explicit PL form");
            return map;
        case MapKind::Constant: {
            MapExpr m;
            m.pieces.push_back({space.coord_lo(), space.coord_hi(), PieceKind::Const,
                                map.value.at(0), map.value.at(0)});
            return m;
        }
        case MapKind::ReflectCompose: {
            MapExpr inner = to_explicit_pl(space, *map.inner);
            MapExpr refl;  // x -> reflection coordinate as a PL map
            if (space.circle_like())
                refl = make_pl({{Rat(0), space.length}, {space.length, Rat(0)}});
            else
                refl = make_pl({{space.lo, space.hi}, {space.hi, space.lo}});
            return pl_compose(space, inner, refl);
        }
        case MapKind::Compose: {
            MapExpr cur = to_explicit_pl(space, map.chain.back());
            for (auto it = map.chain.rbegin() + 1; it != map.chain.rend(); ++it)
                cur = pl_compose(space, *it, cur);
            return cur;
        }
        default:
            throw std::invalid_argument("map has no explicit PL form");
    }
}

// Exact equality of two maps as functions on [lo,hi], piece by piece:
// on each cell of the refined partition both maps are affine, so equal
// slopes plus agreement at the midpoint (mod length on circles) pins
// them to each other.  Returns a witness coordinate on failure.
inline std::optional<Rat> pl_equality_witness(const ModelSpace& space, const MapExpr& f_raw,
                                              const MapExpr& g_raw, const Rat& lo,
                                              const Rat& hi) {
    MapExpr f = to_explicit_pl(space, f_raw);
    MapExpr g = to_explicit_pl(space, g_raw);
    std::vector<Rat> cuts{lo, hi};
    for (const MapExpr* m : {&f, &g})
        for (const Piece& p : m->pieces) {
            if (p.from > lo && p.from < hi) cuts.push_back(p.from);
            if (p.to > lo && p.to < hi) cuts.push_back(p.to);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto reduced = [&](Rat v) { return space.circle_like() ? rat_mod(v, space.length) : v; };
    auto slope = [](const Piece& p) {
        return p.kind == PieceKind::Const ? Rat(0) : (p.b - p.a) / (p.to - p.from);
    };
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rat mid = (cuts[i] + cuts[i + 1]) / 2;
        const Piece& pf = detail::locate_piece(f.pieces, mid);
        const Piece& pg = detail::locate_piece(g.pieces, mid);
        if (slope(pf) != slope(pg)) return mid;
        if (reduced(evaluate1(space, f, mid)) != reduced(evaluate1(space, g, mid))) return mid;
    }
    if (reduced(evaluate1(space, f, lo)) != reduced(evaluate1(space, g, lo))) return lo;
    if (reduced(evaluate1(space, f, hi)) != reduced(evaluate1(space, g, hi))) return hi;
    return std::nullopt;
}

// ---- preimages --------------------------------------------------------

// Solution set of map(x) = value within the coordinate range, as closed
// segments (degenerate segments are points).  PL maps only.
inline std::vector<std::pair<Rat, Rat>> preimage_segments(const ModelSpace& space,
                                                          const MapExpr& map_raw,
                                                          const Rat& value) {
    MapExpr map = to_explicit_pl(space, map_raw);
    const bool circ = space.circle_like();
    const Rat L = circ ? space.length : Rat(0);
    Rat target = circ ? rat_mod(value, L) : value;
    std::vector<std::pair<Rat, Rat>> segs;
    for (const Piece& p : map.pieces) {
        if (p.kind == PieceKind::Const || p.a == p.b) {
            bool hit = circ ? rat_mod(p.a - target, L) == 0 : p.a == target;
            if (hit) segs.push_back({p.from, p.to});
            continue;
        }
        Rat lo = std::min(p.a, p.b), hi = std::max(p.a, p.b);
        auto consider = [&](const Rat& tv) {
            if (tv < lo || tv > hi) return;
            Rat x = p.from + (tv - p.a) * (p.to - p.from) / (p.b - p.a);
            if (x >= p.from && x <= p.to) segs.push_back({x, x});
        };
        if (circ) {
            Int k0 = rat_floor((lo - target) / L);
            for (Int k = k0;; ++k) {
                Rat tv = target + Rat(k) * L;
                if (tv > hi) break;
                if (tv >= lo) consider(tv);
            }
        } else {
            consider(target);
        }
    }
    std::sort(segs.begin(), segs.end());
    // merge touching segments
    std::vector<std::pair<Rat, Rat>> merged;
    for (auto& s : segs) {
        if (!merged.empty() && s.first <= merged.back().second) {
            merged.back().second = std::max(merged.back().second, s.second);
        } else {
            merged.push_back(s);
        }
    }
    return merged;
}

// Finite preimage points; throws if a whole segment maps to the value.
inline std::vector<Rat> preimage_points(const ModelSpace& space, const MapExpr& map,
                                        const Rat& value) {
    std::vector<Rat> pts;
    for (auto& [a, b] : preimage_segments(space, map, value)) {
        if (a != b) throw std::domain_error("preimage contains a nondegenerate segment");
        pts.push_back(a);
    }
    return pts;
}

}  // namespace topofrac
