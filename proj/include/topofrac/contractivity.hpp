// Certification engine: topological contractivity by word-tree search,
// covering checks, the regrouping reductions, and the antipodal-witness
// checker for two-map covers of the chordal circle.
//
// Image diameters are computed on exact regions (intervals, arcs,
// boxes), which equal the true image diameters for the piecewise map
// classes here and upper-bound every net-image diameter, so returned
// certificates are valid at any net resolution.
#pragma once

#include "system.hpp"

#include <cstdint>
#include <map>
#include <variant>

namespace topofrac {

struct ContractionCertificate {
    Rat epsilon;
    int depth = 0;  // minimal k: every length-k word image has diameter < epsilon
    std::vector<std::vector<int>> frontier;
    std::uint64_t frontier_total = 0;
    bool frontier_truncated = false;
    std::uint64_t visited = 0;
    std::uint64_t pruned = 0;
    Rat net_resolution;
    std::string strategy;
};

struct SearchExhausted {
    int k_max = 0;
    Rat epsilon;
    std::uint64_t visited = 0;
};

using SearchOutcome = std::variant<ContractionCertificate, SearchExhausted>;

inline bool search_found(const SearchOutcome& o) {
    return std::holds_alternative<ContractionCertificate>(o);
}
inline const ContractionCertificate& search_cert(const SearchOutcome& o) {
    return std::get<ContractionCertificate>(o);
}

struct SearchOptions {
    bool enable_pruning = true;
    bool allow_fast_path = true;
    std::size_t frontier_cap = 256;
};

namespace detail {

// Fast engine: recursion over image regions with memoization.  Words
// grow by prepending outer letters, so a child region is one map
// application away from its parent.  Sound only for nonexpanding maps
// (certified Lipschitz bound <= 1 per map): then diam f_i(R) <= diam R
// and a region below epsilon certifies its whole subtree.
class RegionSearch {
  public:
    RegionSearch(const FunctionSystem& sys, Rat eps) : sys_(sys), eps_(std::move(eps)) {}

    std::optional<int> need(const Region& r, int budget) {
        ++visited_;
        if (region_diameter(sys_.space, r) < eps_) {
            ++pruned_;
            return 0;
        }
        auto it = memo_.find(r);
        if (it != memo_.end()) {
            if (it->second.exact) {
                ++pruned_;
                if (it->second.lb <= budget) return it->second.lb;
                return std::nullopt;
            }
            if (it->second.lb > budget) {
                ++pruned_;
                return std::nullopt;
            }
        }
        if (budget == 0) {
            upsert(r, 1, false);
            return std::nullopt;
        }
        int best = 0;
        bool over = false;
        for (const MapExpr& m : sys_.maps) {
            auto c = need(apply_region(sys_.space, m, r), budget - 1);
            if (!c) over = true;
            else best = std::max(best, *c);
            if (over) break;
        }
        if (over) {
            upsert(r, budget + 1, false);
            return std::nullopt;
        }
        upsert(r, best + 1, true);
        return best + 1;
    }

    // Number of first-drop nodes below r (diam(r) >= eps), saturating.
    std::uint64_t count_drops(const Region& r, std::uint64_t cap) {
        auto it = counts_.find(r);
        if (it != counts_.end()) return it->second;
        std::uint64_t total = 0;
        for (const MapExpr& m : sys_.maps) {
            Region c = apply_region(sys_.space, m, r);
            std::uint64_t add = region_diameter(sys_.space, c) < eps_ ? 1 : count_drops(c, cap);
            total = total > cap - std::min(cap, add) ? cap + 1 : total + add;
            if (total > cap) {
                total = cap + 1;
                break;
            }
        }
        counts_.emplace(r, total);
        return total;
    }

    void enumerate_drops(const Region& r, std::vector<int>& path,
                         std::vector<std::vector<int>>& out, std::size_t limit) {
        if (out.size() >= limit) return;
        for (int i = 0; i < (int)sys_.maps.size(); ++i) {
            path.push_back(i);
            Region c = apply_region(sys_.space, sys_.maps[i], r);
            if (region_diameter(sys_.space, c) < eps_) {
                // path prepends outer letters, so the word reads reversed
                out.emplace_back(path.rbegin(), path.rend());
            } else {
                enumerate_drops(c, path, out, limit);
            }
            path.pop_back();
            if (out.size() >= limit) return;
        }
    }

    std::uint64_t visited() const { return visited_; }
    std::uint64_t pruned() const { return pruned_; }

  private:
    struct Entry {
        int lb = 0;
        bool exact = false;
    };
    void upsert(const Region& r, int lb, bool exact) {
        auto& e = memo_[r];
        if (exact) e = {lb, true};
        else if (!e.exact) e.lb = std::max(e.lb, lb);
    }
    const FunctionSystem& sys_;
    Rat eps_;
    std::map<Region, Entry, RegionLess> memo_;
    std::map<Region, std::uint64_t, RegionLess> counts_;
    std::uint64_t visited_ = 0, pruned_ = 0;
};

// Spec engine: depth-first over words grown by appending inner letters;
// a branch whose image diameter drops below epsilon is pruned, because
// appending letters on the right only shrinks the image.
class SuffixSearch {
  public:
    SuffixSearch(const FunctionSystem& sys, Rat eps, int k_max, std::size_t frontier_cap)
        : sys_(sys), eps_(std::move(eps)), k_max_(k_max), cap_(frontier_cap) {}

    std::optional<int> run(std::vector<std::vector<int>>& frontier, std::uint64_t& total,
                           bool& truncated, std::uint64_t& visited, std::uint64_t& pruned) {
        std::vector<int> letters;
        std::optional<int> k = dfs(letters);
        if (!k) return std::nullopt;
        total = frontier_total_;
        truncated = frontier_truncated_;
        frontier = std::move(frontier_);
        std::sort(frontier.begin(), frontier.end());
        visited = visited_;
        for (const auto& w : frontier)
            if ((int)w.size() < *k) ++pruned;
        return k;
    }

  private:
    std::optional<int> dfs(std::vector<int>& letters) {
        ++visited_;
        Region r = full_region(sys_.space);
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            r = apply_region(sys_.space, sys_.maps[*it], r);
        if (region_diameter(sys_.space, r) < eps_) {
            ++frontier_total_;
            if (frontier_.size() < cap_) frontier_.push_back(letters);
            else frontier_truncated_ = true;
            return (int)letters.size();
        }
        if ((int)letters.size() == k_max_) return std::nullopt;
        int best = 0;
        for (int i = 0; i < (int)sys_.maps.size(); ++i) {
            letters.push_back(i);
            auto d = dfs(letters);
            letters.pop_back();
            if (!d) return std::nullopt;
            best = std::max(best, *d);
        }
        return best;
    }

    const FunctionSystem& sys_;
    Rat eps_;
    int k_max_;
    std::size_t cap_;
    std::vector<std::vector<int>> frontier_;
    std::uint64_t frontier_total_ = 0;
    bool frontier_truncated_ = false;
    std::uint64_t visited_ = 0;
};

inline bool system_nonexpanding(const FunctionSystem& sys) {
    for (const MapExpr& m : sys.maps) {
        auto b = lipschitz_bound(sys.space, m);
        if (!b || *b > 1) return false;
    }
    return true;
}

}  // namespace detail

// Smallest k <= k_max with every length-k word image diameter < epsilon.
inline SearchOutcome min_contraction_depth(const FunctionSystem& sys, const Rat& eps, int k_max,
                                           const EpsilonNet& net,
                                           const SearchOptions& opts = {}) {
    if (!(eps > 0)) throw std::invalid_argument("epsilon must be positive");
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    for (const MapExpr& m : sys.maps)
        if (m.kind == MapKind::CantorSymbolic)
            throw std::invalid_argument("cantor_symbolic maps are not searchable");

    if (!opts.enable_pruning) {
        // Reference implementation: enumerate whole levels.
        std::uint64_t visited = 0;
        std::vector<Word> level{Word{}};
        for (int k = 0; k <= k_max; ++k) {
            bool all_small = true;
            std::vector<std::vector<int>> frontier;
            std::uint64_t total = 0;
            for (const Word& w : level) {
                ++visited;
                if (word_image_region_diameter(sys, w) < eps) {
                    ++total;
                    if (frontier.size() < opts.frontier_cap) frontier.push_back(w.letters);
                } else {
                    all_small = false;
                }
            }
            if (all_small) {
                ContractionCertificate cert;
                cert.epsilon = eps;
                cert.depth = k;
                cert.frontier = std::move(frontier);
                cert.frontier_total = total;
                cert.frontier_truncated = total > opts.frontier_cap;
                cert.visited = visited;
                cert.pruned = 0;
                cert.net_resolution = net.resolution;
                cert.strategy = "exhaustive-levels";
                return cert;
            }
            if (k == k_max) break;
            std::vector<Word> next;
            next.reserve(level.size() * sys.maps.size());
            for (const Word& w : level)
                for (int i = 0; i < (int)sys.maps.size(); ++i) {
                    Word v = w;
                    v.letters.push_back(i);
                    next.push_back(std::move(v));
                }
            level = std::move(next);
            if (level.size() > 4'000'000)
                throw std::invalid_argument("unpruned search level exceeds budget");
        }
        return SearchExhausted{k_max, eps, visited};
    }

    if (opts.allow_fast_path && detail::system_nonexpanding(sys)) {
        detail::RegionSearch search(sys, eps);
        auto k = search.need(full_region(sys.space), k_max);
        if (!k) return SearchExhausted{k_max, eps, search.visited()};
        ContractionCertificate cert;
        cert.epsilon = eps;
        cert.depth = *k;
        cert.visited = search.visited();
        cert.pruned = search.pruned();
        cert.net_resolution = net.resolution;
        cert.strategy = "memoized-region";
        Region x = full_region(sys.space);
        if (region_diameter(sys.space, x) < eps) {
            cert.frontier = {{}};
            cert.frontier_total = 1;
        } else {
            cert.frontier_total = search.count_drops(x, 1'000'000);
            std::size_t limit =
                std::min<std::uint64_t>(cert.frontier_total, opts.frontier_cap);
            std::vector<int> path;
            search.enumerate_drops(x, path, cert.frontier, limit);
            std::sort(cert.frontier.begin(), cert.frontier.end());
            cert.frontier_truncated = cert.frontier_total > cert.frontier.size();
        }
        return cert;
    }

    detail::SuffixSearch search(sys, eps, k_max, opts.frontier_cap);
    ContractionCertificate cert;
    cert.epsilon = eps;
    cert.net_resolution = net.resolution;
    cert.strategy = "suffix-dfs";
    auto k = search.run(cert.frontier, cert.frontier_total, cert.frontier_truncated,
                        cert.visited, cert.pruned);
    if (!k) return SearchExhausted{k_max, eps, cert.visited};
    cert.depth = *k;
    return cert;
}

// ---- covering ----------------------------------------------------------

struct CoveringReport {
    bool pass = false;
    std::vector<Region> images;
    std::optional<Point> gap_witness;
    Rat gap_distance;
    std::string method;
};

namespace detail {

inline Rat point_to_region(const ModelSpace& space, const Rat& x, const Region& r) {
    if (auto* iv = std::get_if<IntervalRegion>(&r)) {
        if (interval_contains(*iv, x)) return 0;
        return x < iv->lo ? iv->lo - x : x - iv->hi;
    }
    const auto& arc = std::get<ArcRegion>(r);
    if (arc_contains(space, arc, x)) return 0;
    return std::min(circle_distance(space.length, x, arc.start),
                    circle_distance(space.length, x, rat_mod(arc.start + arc.len, space.length)));
}

inline Rat point_to_regions(const ModelSpace& space, const Rat& x,
                            const std::vector<Region>& rs) {
    Rat best(-1);
    for (const Region& r : rs) {
        Rat d = point_to_region(space, x, r);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

// Box subtraction for the cube covering check.
inline void subtract_box(const BoxRegion& r, const BoxRegion& b, std::vector<BoxRegion>& out) {
    // no overlap -> r survives intact
    for (std::size_t i = 0; i < r.sides.size(); ++i)
        if (b.sides[i].second <= r.sides[i].first || b.sides[i].first >= r.sides[i].second) {
            out.push_back(r);
            return;
        }
    BoxRegion mid = r;
    for (std::size_t i = 0; i < r.sides.size(); ++i) {
        if (b.sides[i].first > mid.sides[i].first) {
            BoxRegion slab = mid;
            slab.sides[i].second = b.sides[i].first;
            out.push_back(slab);
            mid.sides[i].first = b.sides[i].first;
        }
        if (b.sides[i].second < mid.sides[i].second) {
            BoxRegion slab = mid;
            slab.sides[i].first = b.sides[i].second;
            out.push_back(slab);
            mid.sides[i].second = b.sides[i].second;
        }
    }
    // mid is fully inside b: dropped
}

}  // namespace detail

// Exact covering check: do the full-space images of the system's maps
// cover the space?
inline CoveringReport check_covering(const FunctionSystem& sys) {
    CoveringReport rep;
    rep.method = "exact-region";
    for (const MapExpr& m : sys.maps)
        rep.images.push_back(apply_region(sys.space, m, full_region(sys.space)));
    const ModelSpace& space = sys.space;
    if (space.kind == SpaceKind::Cube) {
        std::vector<BoxRegion> remaining{std::get<BoxRegion>(full_region(space))};
        for (const Region& img : rep.images) {
            std::vector<BoxRegion> next;
            for (const BoxRegion& r : remaining)
                detail::subtract_box(r, std::get<BoxRegion>(img), next);
            remaining = std::move(next);
        }
        if (remaining.empty()) {
            rep.pass = true;
            return rep;
        }
        Point witness;
        for (auto& [lo, hi] : remaining.front().sides) witness.push_back((lo + hi) / 2);
        Rat best(-1);
        for (const Region& img : rep.images) {
            const auto& box = std::get<BoxRegion>(img);
            Rat d = 0;
            for (std::size_t i = 0; i < witness.size(); ++i) {
                const Rat& x = witness[i];
                if (x < box.sides[i].first) d = std::max(d, Rat(box.sides[i].first - x));
                else if (x > box.sides[i].second) d = std::max(d, Rat(x - box.sides[i].second));
            }
            if (best < 0 || d < best) best = d;
        }
        rep.gap_witness = witness;
        rep.gap_distance = best;
        return rep;
    }
    if (space.interval_like()) {
        std::vector<IntervalRegion> ivs;
        for (const Region& img : rep.images) ivs.push_back(std::get<IntervalRegion>(img));
        std::sort(ivs.begin(), ivs.end(),
                  [](const IntervalRegion& a, const IntervalRegion& b) { return a.lo < b.lo; });
        Rat cur = space.lo;
        for (const auto& iv : ivs) {
            if (iv.lo > cur) break;
            cur = std::max(cur, iv.hi);
        }
        if (cur >= space.hi) {
            rep.pass = true;
            return rep;
        }
        // gap starts at cur; witness just inside it
        Rat next_lo = space.hi;
        for (const auto& iv : ivs)
            if (iv.lo > cur) next_lo = std::min(next_lo, iv.lo);
        Rat w = (cur + next_lo) / 2;
        rep.gap_witness = pt(w);
        rep.gap_distance = detail::point_to_regions(space, w, rep.images);
        return rep;
    }
    // circle: sweep the window starting at the first arc's start, with
    // each arc contributing twice to handle wrap-around
    const Rat& L = space.length;
    for (const Region& img : rep.images)
        if (std::get<ArcRegion>(img).len >= L) {
            rep.pass = true;
            return rep;
        }
    Rat base = std::get<ArcRegion>(rep.images.front()).start;
    std::vector<std::pair<Rat, Rat>> segs;  // [offset, end) relative to base
    for (const Region& img : rep.images) {
        const auto& arc = std::get<ArcRegion>(img);
        Rat o = rat_mod(arc.start - base, L);
        segs.push_back({o, o + arc.len});
        segs.push_back({o - L, o - L + arc.len});
    }
    std::sort(segs.begin(), segs.end());
    Rat cur = 0;
    for (auto& [s, e] : segs) {
        if (s > cur) break;
        cur = std::max(cur, e);
    }
    if (cur >= L) {
        rep.pass = true;
        return rep;
    }
    Rat next_s = L;
    for (auto& [s, e] : segs)
        if (s > cur) {
            next_s = std::min(next_s, s);
            break;
        }
    Rat w = rat_mod(base + (cur + next_s) / 2, L);
    rep.gap_witness = pt(w);
    rep.gap_distance = detail::point_to_regions(space, w, rep.images);
    return rep;
}

// Net-based covering per the module contract: every net point within
// `resolution` of the union of map images of the net.
inline CoveringReport check_covering_on_net(const FunctionSystem& sys, const EpsilonNet& net) {
    CoveringReport rep;
    rep.method = "net";
    if (sys.space.kind == SpaceKind::Cube)
        throw std::invalid_argument("net covering check is 1D/circle only; use check_covering");
    std::vector<Rat> images;
    images.reserve(net.points.size() * sys.maps.size());
    for (const MapExpr& m : sys.maps)
        for (const Point& p : net.points) images.push_back(evaluate1(sys.space, m, p[0]));
    std::sort(images.begin(), images.end());
    rep.pass = true;
    Rat worst = 0;
    for (const Point& p : net.points) {
        Rat d = detail::nearest_sorted(sys.space, images, p[0]);
        if (d > worst) {
            worst = d;
            if (d > net.resolution && rep.pass) {
                rep.pass = false;
                rep.gap_witness = p;
            }
        }
    }
    rep.gap_distance = worst;
    if (rep.pass) rep.gap_witness.reset();
    return rep;
}

// ---- verify_topological_fractal -----------------------------------------

struct FractalReport {
    CoveringReport covering;
    std::vector<SearchOutcome> certificates;  // one per epsilon
    bool pass = false;
};

inline FractalReport verify_topological_fractal(const FunctionSystem& sys,
                                                const std::vector<Rat>& epsilons, int k_max,
                                                const EpsilonNet& net,
                                                const SearchOptions& opts = {}) {
    FractalReport rep;
    rep.covering = check_covering(sys);
    rep.pass = rep.covering.pass;
    for (const Rat& eps : epsilons) {
        rep.certificates.push_back(min_contraction_depth(sys, eps, k_max, net, opts));
        rep.pass = rep.pass && search_found(rep.certificates.back());
    }
    return rep;
}

// ---- regrouping reductions ----------------------------------------------

struct RegroupReport {
    SearchOutcome derived;   // certificate for {f, g o f, g o g}
    int derived_bound = 0;   // 2k
    SearchOutcome direct;    // certificate for {f, g} within the bound
    bool pass = false;
};

// Observation: if {f, gf, gg} is topologically contractive with depth k,
// then {f, g} is with depth <= 2k.  Certifies the triple, then
// cross-validates the pair directly at the derived bound.
inline RegroupReport regroup_three_to_two(const ModelSpace& space, const MapExpr& f,
                                          const MapExpr& g, const Rat& eps, int k_max,
                                          const SearchOptions& opts = {}) {
    FunctionSystem triple(space, {f, make_compose({g, f}), make_compose({g, g})},
                          {"f", "gf", "gg"});
    FunctionSystem pair(space, {f, g}, {"f", "g"});
    EpsilonNet net = build_net(pair, Rat(1, 64));
    RegroupReport rep;
    rep.derived = min_contraction_depth(triple, eps, k_max, net, opts);
    if (!search_found(rep.derived)) return rep;
    rep.derived_bound = 2 * search_cert(rep.derived).depth;
    int direct_cap = std::max(1, rep.derived_bound);
    rep.direct = min_contraction_depth(pair, eps, direct_cap, net, opts);
    if (!search_found(rep.direct))
        throw std::logic_error("regrouping cross-validation failed: pair not certified "
                               "within twice the triple depth");
    rep.pass = search_cert(rep.direct).depth <= rep.derived_bound;
    return rep;
}

// ---- fractalmaps certificate ---------------------------------------------

struct FractalmapsViolation {
    std::vector<int> f_word;  // over the contractive part
    int gi = 0, gj = 0;
    Rat x1, x2;  // witness points with different composite values
};

struct FractalmapsReport {
    bool hypothesis_ok = false;
    std::optional<FractalmapsViolation> violation;
    SearchOutcome contractive;  // certificate for the contractive part
    SearchOutcome combined;     // direct certificate for the union system
    bool pass = false;
};

// Observation: if the contractive part is topologically contractive and
// every composite g_i o f-word o g_j is constant, the union system is
// topologically contractive.  Checks the hypothesis exactly (image
// regions must be single points) up to the word budget, then validates
// the conclusion by certifying the union directly.
inline FractalmapsReport fractalmaps_certificate(const ModelSpace& space,
                                                 const std::vector<MapExpr>& contractive_part,
                                                 const std::vector<MapExpr>& constant_part,
                                                 int word_budget, const Rat& eps, int k_max,
                                                 const EpsilonNet& net,
                                                 const SearchOptions& opts = {}) {
    FractalmapsReport rep;
    FunctionSystem fsys(space, contractive_part);
    rep.hypothesis_ok = true;
    std::vector<std::vector<int>> words{{}};
    for (int len = 0; len <= word_budget && rep.hypothesis_ok; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : words) {
            for (std::size_t i = 0; i < constant_part.size() && rep.hypothesis_ok; ++i)
                for (std::size_t j = 0; j < constant_part.size() && rep.hypothesis_ok; ++j) {
                    Region r = apply_region(space, constant_part[j], full_region(space));
                    for (auto it = w.rbegin(); it != w.rend(); ++it)
                        r = apply_region(space, fsys.maps[*it], r);
                    r = apply_region(space, constant_part[i], r);
                    if (region_diameter(space, r) > 0) {
                        rep.hypothesis_ok = false;
                        // locate two witness points through the net
                        MapExpr composite = make_compose(
                            {constant_part[i], word_as_map(fsys, Word{w}), constant_part[j]});
                        FractalmapsViolation v;
                        v.f_word = w;
                        v.gi = (int)i;
                        v.gj = (int)j;
                        bool found = false;
                        Rat v0;
                        for (const Point& p : net.points) {
                            Rat val = evaluate1(space, composite, p[0]);
                            if (!found) {
                                v0 = val;
                                v.x1 = p[0];
                                found = true;
                            } else if (val != v0) {
                                v.x2 = p[0];
                                break;
                            }
                        }
                        rep.violation = v;
                    }
                }
            if (len < word_budget)
                for (int i = 0; i < (int)contractive_part.size(); ++i) {
                    auto w2 = w;
                    w2.push_back(i);
                    next.push_back(std::move(w2));
                }
        }
        words = std::move(next);
    }
    if (!rep.hypothesis_ok) return rep;
    rep.contractive = min_contraction_depth(fsys, eps, k_max, net, opts);
    std::vector<MapExpr> all = contractive_part;
    all.insert(all.end(), constant_part.begin(), constant_part.end());
    FunctionSystem combined(space, all);
    rep.combined = min_contraction_depth(combined, eps, k_max, net, opts);
    rep.pass = search_found(rep.contractive) && search_found(rep.combined) &&
               search_cert(rep.combined).depth >= search_cert(rep.contractive).depth;
    return rep;
}

// ---- antipodal witness -----------------------------------------------------

// Chordal distance on a circle of length L parameterized by arc length,
// for display only; all certified comparisons run on exact arc lengths.
inline double chordal_of_arc(const Rat& L, const Rat& arc) {
    return 2.0 * std::sin(3.14159265358979323846 * rat_double(arc) / rat_double(L));
}

struct AntipodalOutcome {
    bool covered = false;
    // witness branch: x and its antipode lie in image of map_index
    int map_index = -1;
    Rat x, antipode;
    Rat a, b;                    // preimages: f(a) = x, f(b) = antipode
    Rat image_arc_distance;      // arc distance of (f(a), f(b)); L/2 exactly
    Rat preimage_arc_distance;   // arc distance of (a, b)
    double chordal_image = 0, chordal_preimage = 0;
    // gap branch
    Rat gap_point;
    Rat gap_distance;
};

// Lusternik-Schnirelmann check for two-map covers of the chordal-metric
// circle: if the images cover, one image contains an exact antipodal
// pair whose preimages refute weak contraction (d(f(a),f(b)) = L/2 >=
// d(a,b)); otherwise reports a verified coverage gap.
inline AntipodalOutcome antipodal_witness(const FunctionSystem& sys, const EpsilonNet& net) {
    if (!sys.space.circle_like() || sys.maps.size() != 2)
        throw std::invalid_argument("antipodal_witness expects two maps on a circle");
    (void)net;
    const Rat& L = sys.space.length;
    CoveringReport cov = check_covering(sys);
    AntipodalOutcome out;
    out.covered = cov.pass;
    if (!cov.pass) {
        out.gap_point = (*cov.gap_witness)[0];
        out.gap_distance = cov.gap_distance;
        if (!(out.gap_distance > 0))
            throw std::logic_error("coverage gap failed re-verification");
        return out;
    }
    // a covering pair of arcs has total length >= L, so one arc has
    // length >= L/2 and contains an antipodal pair starting at its left end
    int idx = 0;
    {
        const auto& a0 = std::get<ArcRegion>(cov.images[0]);
        const auto& a1 = std::get<ArcRegion>(cov.images[1]);
        idx = a0.len >= a1.len ? 0 : 1;
        if (std::get<ArcRegion>(cov.images[idx]).len < L / 2)
            throw std::logic_error("covering arcs without an antipodal pair");
    }
    const auto& arc = std::get<ArcRegion>(cov.images[idx]);
    out.map_index = idx;
    out.x = rat_mod(arc.start, L);
    out.antipode = rat_mod(arc.start + L / 2, L);
    auto pick_preimage = [&](const Rat& v) {
        auto segs = preimage_segments(sys.space, sys.maps[idx], v);
        if (segs.empty()) throw std::logic_error("image point without preimage");
        return segs.front().first;
    };
    out.a = pick_preimage(out.x);
    out.b = pick_preimage(out.antipode);
    out.image_arc_distance = circle_distance(L, out.x, out.antipode);
    out.preimage_arc_distance = circle_distance(L, out.a, out.b);
    out.chordal_image = chordal_of_arc(L, out.image_arc_distance);
    out.chordal_preimage = chordal_of_arc(L, out.preimage_arc_distance);
    // exact refutation of weak contraction: no strict decrease on this pair
    if (!(out.image_arc_distance >= out.preimage_arc_distance))
        throw std::logic_error("antipodal witness failed exact verification");
    // arc threshold implying chordal distance >= 2 - 1e-6
    if (!(out.image_arc_distance >= L / 2 - L * Rat(3, 10000)))
        throw std::logic_error("antipodal witness below the chordal threshold");
    return out;
}

// Deterministic word sampler for soundness probes (no global RNG; the
// CLI is seedless by contract).
inline std::vector<Word> sample_words(int alphabet, int length, int count,
                                      std::uint64_t seed = 0x5DEECE66Dull) {
    std::vector<Word> out;
    std::uint64_t state = seed;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return (state >> 33);
    };
    for (int c = 0; c < count; ++c) {
        Word w;
        for (int i = 0; i < length; ++i) w.letters.push_back((int)(next() % alphabet));
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace topofrac
