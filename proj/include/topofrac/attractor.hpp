// Hutchinson operator iteration and the invariance residual for
// K = f_1(K) u ... u f_n(K), on finite point sets with exact
// coordinates.
#pragma once

#include "system.hpp"

#include <set>

namespace topofrac {

struct AttractorRun {
    int iterations = 0;
    std::size_t point_budget = 0;
    std::vector<Rat> successive_distances;  // Hausdorff between consecutive iterates
    std::vector<Point> points;
};

namespace detail {

inline std::vector<Point> dedup_points(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Deterministic farthest-point thinning: seed with the lexicographically
// smallest point, then greedily add the point farthest from the chosen
// set (ties resolved by coordinate order).
inline std::vector<Point> thin_farthest_point(const ModelSpace& space, std::vector<Point> pts,
                                              std::size_t budget) {
    if (pts.size() <= budget || budget == 0) return pts;
    std::sort(pts.begin(), pts.end());
    std::vector<Point> chosen{pts.front()};
    std::vector<Rat> best_dist(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) best_dist[i] = distance(space, pts[i], pts[0]);
    while (chosen.size() < budget) {
        std::size_t arg = 0;
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (best_dist[i] > best_dist[arg]) arg = i;  // first max wins ties (sorted order)
        if (best_dist[arg] == 0) break;
        chosen.push_back(pts[arg]);
        for (std::size_t i = 0; i < pts.size(); ++i)
            best_dist[i] = std::min(best_dist[i], distance(space, pts[i], pts[arg]));
    }
    return dedup_points(std::move(chosen));
}

}  // namespace detail

inline std::vector<Point> hutchinson_step(const FunctionSystem& sys,
                                          const std::vector<Point>& pts) {
    std::vector<Point> out;
    out.reserve(pts.size() * sys.maps.size());
    for (const MapExpr& m : sys.maps)
        for (const Point& p : pts) out.push_back(evaluate(sys.space, m, p));
    return detail::dedup_points(std::move(out));
}

inline AttractorRun iterate_to_attractor(const FunctionSystem& sys, std::vector<Point> seed,
                                         int iterations, std::size_t point_budget) {
    if (seed.empty()) throw std::domain_error("iterate_to_attractor: empty seed");
    AttractorRun run;
    run.iterations = iterations;
    run.point_budget = point_budget;
    std::vector<Point> cur = detail::dedup_points(std::move(seed));
    for (int i = 0; i < iterations; ++i) {
        std::vector<Point> next = hutchinson_step(sys, cur);
        next = detail::thin_farthest_point(sys.space, std::move(next), point_budget);
        if (i > 0 || iterations == 1)
            run.successive_distances.push_back(hausdorff_distance(sys.space, cur, next));
        cur = std::move(next);
    }
    run.points = std::move(cur);
    return run;
}

// hausdorff(candidate, H(candidate)).
inline Rat invariance_residual(const FunctionSystem& sys, const std::vector<Point>& candidate) {
    if (candidate.empty()) throw std::domain_error("invariance_residual: empty candidate");
    std::vector<Point> image = hutchinson_step(sys, candidate);
    return hausdorff_distance(sys.space, candidate, image);
}

// Exact check hausdorff(candidate, H(candidate)) <= bound via grid
// buckets, for large 2D sets where the quadratic scan is too slow.
inline bool invariance_residual_at_most(const FunctionSystem& sys,
                                        const std::vector<Point>& candidate, const Rat& bound) {
    if (sys.space.kind != SpaceKind::Cube || sys.space.dim != 2)
        return invariance_residual(sys, candidate) <= bound;
    std::vector<Point> image = hutchinson_step(sys, candidate);
    auto cell = [&](const Point& p) {
        return std::pair<Int, Int>(rat_floor(p[0] / bound), rat_floor(p[1] / bound));
    };
    auto bucket = [&](const std::vector<Point>& pts) {
        std::map<std::pair<Int, Int>, std::vector<const Point*>> b;
        for (const Point& p : pts) b[cell(p)].push_back(&p);
        return b;
    };
    auto buckets_a = bucket(candidate);
    auto buckets_b = bucket(image);
    auto directed_ok = [&](const std::vector<Point>& from, const auto& to_buckets) {
        for (const Point& p : from) {
            auto [cx, cy] = cell(p);
            bool ok = false;
            for (Int dx = -1; dx <= 1 && !ok; ++dx)
                for (Int dy = -1; dy <= 1 && !ok; ++dy) {
                    auto it = to_buckets.find(std::pair<Int, Int>(cx + dx, cy + dy));
                    if (it == to_buckets.end()) continue;
                    for (const Point* q : it->second)
                        if (distance(sys.space, p, *q) <= bound) {
                            ok = true;
                            break;
                        }
                }
            if (!ok) return false;
        }
        return true;
    };
    return directed_ok(candidate, buckets_b) && directed_ok(image, buckets_a);
}

}  // namespace topofrac
