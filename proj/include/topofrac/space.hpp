// Model spaces with exact metrics: intervals, circles (arc-length),
// cubes (max metric), the structured interval carrying the Cantor
// copy, and the blown-up circle produced by the Denjoy construction.
#pragma once

#include "rational.hpp"

#include <algorithm>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace topofrac {

enum class SpaceKind { Interval, Circle, Cube, StructuredInterval, BlownUpCircle };

struct BlowupBlob {
    Rat base;       // orbit point q on the base circle
    int gen = 0;    // first word length producing q
    Rat lambda;     // inserted blob length
    Rat lift_left;  // left end of the blob in lifted coordinates
};

struct BlowupData {
    int depth = 0;
    Rat lambda_base;
    Rat base_length;               // 23 for the built-in system
    Rat total_length;              // base_length + sum of lambdas
    std::vector<BlowupBlob> blobs; // sorted by base coordinate
};

struct ModelSpace {
    SpaceKind kind = SpaceKind::Interval;
    Rat lo, hi;     // Interval / StructuredInterval
    Rat length;     // Circle / BlownUpCircle (total length)
    int dim = 1;    // Cube
    std::shared_ptr<const BlowupData> blowup;

    static ModelSpace interval(Rat lo, Rat hi) {
        if (!(lo < hi)) throw std::invalid_argument("interval: lo < hi required");
        ModelSpace s;
        s.kind = SpaceKind::Interval;
        s.lo = std::move(lo);
        s.hi = std::move(hi);
        return s;
    }
    static ModelSpace circle(Rat length) {
        if (!(length > 0)) throw std::invalid_argument("circle: length > 0 required");
        ModelSpace s;
        s.kind = SpaceKind::Circle;
        s.length = std::move(length);
        return s;
    }
    static ModelSpace cube(int dim) {
        if (dim < 1) throw std::invalid_argument("cube: dim >= 1 required");
        ModelSpace s;
        s.kind = SpaceKind::Cube;
        s.dim = dim;
        s.lo = 0;
        s.hi = 1;
        return s;
    }
    static ModelSpace structured_interval() {
        ModelSpace s;
        s.kind = SpaceKind::StructuredInterval;
        s.lo = 0;
        s.hi = 1;
        return s;
    }
    static ModelSpace blown_up_circle(std::shared_ptr<const BlowupData> data) {
        ModelSpace s;
        s.kind = SpaceKind::BlownUpCircle;
        s.length = data->total_length;
        s.blowup = std::move(data);
        return s;
    }

    bool circle_like() const {
        return kind == SpaceKind::Circle || kind == SpaceKind::BlownUpCircle;
    }
    bool interval_like() const {
        return kind == SpaceKind::Interval || kind == SpaceKind::StructuredInterval;
    }
    // 1D coordinate range: [lo,hi] for intervals, [0,length] for circles.
    Rat coord_lo() const { return circle_like() ? Rat(0) : lo; }
    Rat coord_hi() const { return circle_like() ? length : hi; }
};

using Point = std::vector<Rat>;

inline Point pt(Rat x) { return Point{std::move(x)}; }
inline Point pt(Rat x, Rat y) { return Point{std::move(x), std::move(y)}; }

inline Rat circle_distance(const Rat& length, const Rat& x, const Rat& y) {
    Rat d = rat_mod(rat_abs(x - y), length);
    return std::min(d, Rat(length - d));
}

// 1D distance; validates interval membership.
inline Rat distance1(const ModelSpace& space, const Rat& x, const Rat& y) {
    if (space.circle_like()) return circle_distance(space.length, x, y);
    if (x < space.lo || x > space.hi || y < space.lo || y > space.hi)
        throw std::domain_error("point outside interval domain");
    return rat_abs(x - y);
}

inline Rat distance(const ModelSpace& space, const Point& x, const Point& y) {
    if (space.kind == SpaceKind::Cube) {
        if ((int)x.size() != space.dim || (int)y.size() != space.dim)
            throw std::domain_error("cube point has wrong dimension");
        Rat d = 0;
        for (int i = 0; i < space.dim; ++i) {
            if (x[i] < 0 || x[i] > 1 || y[i] < 0 || y[i] > 1)
                throw std::domain_error("point outside cube domain");
            d = std::max(d, rat_abs(x[i] - y[i]));
        }
        return d;
    }
    if (x.size() != 1 || y.size() != 1) throw std::domain_error("expected 1D point");
    return distance1(space, x[0], y[0]);
}

// Max pairwise distance.  Exact; circle case avoids the O(n^2) scan by
// pairing each point against the neighbors of its antipode.
inline Rat set_diameter(const ModelSpace& space, std::span<const Point> pts) {
    if (pts.empty()) throw std::domain_error("set_diameter: empty set");
    if (space.kind == SpaceKind::Cube) {
        Rat best = 0;
        for (int i = 0; i < space.dim; ++i) {
            Rat mn = pts[0].at(i), mx = mn;
            for (const auto& p : pts) {
                mn = std::min(mn, p.at(i));
                mx = std::max(mx, p.at(i));
            }
            best = std::max(best, Rat(mx - mn));
        }
        return best;
    }
    std::vector<Rat> xs;
    xs.reserve(pts.size());
    for (const auto& p : pts) {
        if (p.size() != 1) throw std::domain_error("expected 1D point");
        xs.push_back(space.circle_like() ? rat_mod(p[0], space.length) : p[0]);
    }
    std::sort(xs.begin(), xs.end());
    if (!space.circle_like()) {
        if (xs.front() < space.lo || xs.back() > space.hi)
            throw std::domain_error("point outside interval domain");
        return xs.back() - xs.front();
    }
    const Rat& L = space.length;
    Rat best = 0;
    for (const Rat& x : xs) {
        Rat anti = rat_mod(x + L / 2, L);
        auto it = std::lower_bound(xs.begin(), xs.end(), anti);
        // candidates around the antipode, cyclically
        for (int off = -1; off <= 1; ++off) {
            auto j = it + off;
            if (j < xs.begin()) j += xs.size();
            if (j >= xs.end()) j -= xs.size();
            best = std::max(best, circle_distance(L, x, *j));
        }
    }
    return best;
}

inline Rat set_diameter(const ModelSpace& space, const std::vector<Point>& pts) {
    return set_diameter(space, std::span<const Point>(pts));
}

namespace detail {

// min distance from x to any element of sorted ys (1D or circle).
inline Rat nearest_sorted(const ModelSpace& space, const std::vector<Rat>& ys, const Rat& x) {
    auto it = std::lower_bound(ys.begin(), ys.end(), x);
    Rat best(-1);
    auto consider = [&](std::vector<Rat>::const_iterator j) {
        if (j < ys.begin() || j >= ys.end()) {
            if (!space.circle_like()) return;
            if (j < ys.begin()) j = ys.end() - 1;
            else j = ys.begin();
        }
        Rat d = space.circle_like() ? circle_distance(space.length, x, *j) : rat_abs(x - *j);
        if (best < 0 || d < best) best = d;
    };
    consider(it);
    consider(it == ys.begin() ? ys.begin() - 1 : it - 1);
    return best;
}

}  // namespace detail

// Two-sided Hausdorff distance between finite nonempty sets; 1D and
// circle cases run on sorted coordinates, the cube case is quadratic.
inline Rat hausdorff_distance(const ModelSpace& space, std::span<const Point> a,
                              std::span<const Point> b) {
    if (a.empty() || b.empty()) throw std::domain_error("hausdorff_distance: empty set");
    if (space.kind == SpaceKind::Cube) {
        auto directed = [&](std::span<const Point> from, std::span<const Point> to) {
            Rat worst = 0;
            for (const auto& p : from) {
                Rat best(-1);
                for (const auto& q : to) {
                    Rat d = distance(space, p, q);
                    if (best < 0 || d < best) best = d;
                    if (best == 0) break;
                }
                worst = std::max(worst, best);
            }
            return worst;
        };
        return std::max(directed(a, b), directed(b, a));
    }
    auto coords = [&](std::span<const Point> pts) {
        std::vector<Rat> xs;
        xs.reserve(pts.size());
        for (const auto& p : pts) {
            if (p.size() != 1) throw std::domain_error("expected 1D point");
            xs.push_back(space.circle_like() ? rat_mod(p[0], space.length) : p[0]);
        }
        std::sort(xs.begin(), xs.end());
        return xs;
    };
    std::vector<Rat> xa = coords(a), xb = coords(b);
    auto directed = [&](const std::vector<Rat>& from, const std::vector<Rat>& to) {
        Rat worst = 0;
        for (const Rat& x : from) worst = std::max(worst, detail::nearest_sorted(space, to, x));
        return worst;
    };
    return std::max(directed(xa, xb), directed(xb, xa));
}

inline Rat hausdorff_distance(const ModelSpace& space, const std::vector<Point>& a,
                              const std::vector<Point>& b) {
    return hausdorff_distance(space, std::span<const Point>(a), std::span<const Point>(b));
}

}  // namespace topofrac
