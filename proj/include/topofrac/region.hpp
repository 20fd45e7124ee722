// Connected regions of the model spaces: closed intervals, closed arcs
// and boxes.  Images of the (connected) spaces under continuous words
// stay connected, so the contractivity search propagates one region per
// word instead of sampled point clouds.  All arithmetic is exact.
#pragma once

#include "space.hpp"

#include <compare>
#include <variant>

namespace topofrac {

struct IntervalRegion {
    Rat lo, hi;  // lo <= hi
};

// Closed arc on a circle of given length: points start + t, t in [0,len].
// len == circle length means the full circle (canonical start 0).
struct ArcRegion {
    Rat start;
    Rat len;
};

struct BoxRegion {
    std::vector<std::pair<Rat, Rat>> sides;  // per-coordinate [lo,hi]
};

using Region = std::variant<IntervalRegion, ArcRegion, BoxRegion>;

inline Region full_region(const ModelSpace& space) {
    switch (space.kind) {
        case SpaceKind::Interval:
        case SpaceKind::StructuredInterval:
            return IntervalRegion{space.lo, space.hi};
        case SpaceKind::Circle:
        case SpaceKind::BlownUpCircle:
            return ArcRegion{0, space.length};
        case SpaceKind::Cube: {
            BoxRegion b;
            b.sides.assign(space.dim, {Rat(0), Rat(1)});
            return b;
        }
    }
    throw std::logic_error("unreachable");
}

inline ArcRegion canonical_arc(const ModelSpace& space, Rat start, Rat len) {
    const Rat& L = space.length;
    if (len >= L) return {0, L};
    return {rat_mod(start, L), std::move(len)};
}

inline Rat region_diameter(const ModelSpace& space, const Region& r) {
    if (auto* iv = std::get_if<IntervalRegion>(&r)) return iv->hi - iv->lo;
    if (auto* arc = std::get_if<ArcRegion>(&r))
        return std::min(arc->len, Rat(space.length / 2));
    const auto& box = std::get<BoxRegion>(r);
    Rat d = 0;
    for (const auto& [lo, hi] : box.sides) d = std::max(d, Rat(hi - lo));
    return d;
}

inline bool region_equal(const Region& a, const Region& b) {
    if (a.index() != b.index()) return false;
    if (auto* ia = std::get_if<IntervalRegion>(&a)) {
        auto& ib = std::get<IntervalRegion>(b);
        return ia->lo == ib.lo && ia->hi == ib.hi;
    }
    if (auto* aa = std::get_if<ArcRegion>(&a)) {
        auto& ab = std::get<ArcRegion>(b);
        return aa->start == ab.start && aa->len == ab.len;
    }
    return std::get<BoxRegion>(a).sides == std::get<BoxRegion>(b).sides;
}

// Strict ordering usable as a map key (deterministic memoization).
struct RegionLess {
    bool operator()(const Region& a, const Region& b) const {
        if (a.index() != b.index()) return a.index() < b.index();
        if (auto* ia = std::get_if<IntervalRegion>(&a)) {
            auto& ib = std::get<IntervalRegion>(b);
            if (ia->lo != ib.lo) return ia->lo < ib.lo;
            return ia->hi < ib.hi;
        }
        if (auto* aa = std::get_if<ArcRegion>(&a)) {
            auto& ab = std::get<ArcRegion>(b);
            if (aa->start != ab.start) return aa->start < ab.start;
            return aa->len < ab.len;
        }
        return std::get<BoxRegion>(a).sides < std::get<BoxRegion>(b).sides;
    }
};

inline bool arc_contains(const ModelSpace& space, const ArcRegion& arc, const Rat& x) {
    if (arc.len >= space.length) return true;
    Rat off = rat_mod(x - arc.start, space.length);
    return off <= arc.len;
}

inline bool interval_contains(const IntervalRegion& iv, const Rat& x) {
    return iv.lo <= x && x <= iv.hi;
}

// Smallest closed arc containing a union of arcs.  Exact when the union
// is connected (the case for images of continuous maps); otherwise a
// sound over-approximation (hull), which keeps diameter certificates
// conservative.
inline ArcRegion enclosing_arc(const ModelSpace& space, std::vector<ArcRegion> arcs) {
    const Rat& L = space.length;
    if (arcs.empty()) throw std::logic_error("enclosing_arc: empty");
    for (auto& a : arcs)
        if (a.len >= L) return {0, L};
    // Merge overlapping arcs until stable, then take the complement of
    // the largest uncovered gap.
    bool changed = true;
    while (changed && arcs.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < arcs.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < arcs.size() && !changed; ++j) {
                const auto& A = arcs[i];
                const auto& B = arcs[j];
                Rat ds = rat_mod(B.start - A.start, L);
                ArcRegion merged;
                bool overlap = false;
                if (ds <= A.len) {  // B starts inside A
                    merged = canonical_arc(space, A.start, std::max(A.len, Rat(ds + B.len)));
                    overlap = true;
                } else {
                    Rat ds2 = rat_mod(A.start - B.start, L);
                    if (ds2 <= B.len) {  // A starts inside B
                        merged = canonical_arc(space, B.start, std::max(B.len, Rat(ds2 + A.len)));
                        overlap = true;
                    }
                }
                if (overlap) {
                    arcs[i] = merged;
                    arcs.erase(arcs.begin() + j);
                    changed = true;
                }
            }
        }
    }
    if (arcs.size() == 1) return canonical_arc(space, arcs[0].start, arcs[0].len);
    // Disjoint remainder: hull = complement of the widest gap.
    std::sort(arcs.begin(), arcs.end(),
              [](const ArcRegion& a, const ArcRegion& b) { return a.start < b.start; });
    Rat best_gap(-1);
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto& cur = arcs[i];
        const auto& nxt = arcs[(i + 1) % arcs.size()];
        Rat gap = rat_mod(nxt.start - (cur.start + cur.len), L);
        if (gap > best_gap) {
            best_gap = gap;
            best_i = i;
        }
    }
    const auto& after = arcs[(best_i + 1) % arcs.size()];
    return canonical_arc(space, after.start, L - best_gap);
}

}  // namespace topofrac
