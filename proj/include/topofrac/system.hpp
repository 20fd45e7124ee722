// Function systems, composition words and epsilon-nets.
#pragma once

#include "map_expr.hpp"

#include <string>

namespace topofrac {

struct FunctionSystem {
    ModelSpace space;
    std::vector<MapExpr> maps;
    std::vector<std::string> labels;

    FunctionSystem() = default;
    FunctionSystem(ModelSpace sp, std::vector<MapExpr> ms, std::vector<std::string> ls = {})
        : space(std::move(sp)), maps(std::move(ms)), labels(std::move(ls)) {
        if (maps.empty()) throw std::invalid_argument("function system needs maps");
        if (labels.empty())
            for (std::size_t i = 0; i < maps.size(); ++i) labels.push_back("f" + std::to_string(i));
    }
};

// A word is a list of map indices applied right-to-left: letters[0] is
// the outermost map.
struct Word {
    std::vector<int> letters;
};

inline Point evaluate(const FunctionSystem& sys, const Word& w, const Point& x) {
    Point cur = x;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        cur = evaluate(sys.space, sys.maps.at(*it), cur);
    return cur;
}

inline Rat evaluate1(const FunctionSystem& sys, const Word& w, const Rat& x) {
    Rat cur = x;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        cur = evaluate1(sys.space, sys.maps.at(*it), cur);
    return cur;
}

// Exact image region of the full space under the word.
inline Region word_image_region(const FunctionSystem& sys, const Word& w) {
    Region r = full_region(sys.space);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r = apply_region(sys.space, sys.maps.at(*it), r);
    return r;
}

inline Rat word_image_region_diameter(const FunctionSystem& sys, const Word& w) {
    return region_diameter(sys.space, word_image_region(sys, w));
}

inline MapExpr word_as_map(const FunctionSystem& sys, const Word& w) {
    if (w.letters.empty()) return make_identity(sys.space);
    std::vector<MapExpr> chain;
    for (int i : w.letters) chain.push_back(sys.maps.at(i));
    return make_compose(std::move(chain));
}

// ---- epsilon-nets -----------------------------------------------------

struct EpsilonNet {
    ModelSpace space;
    Rat resolution;
    std::vector<Point> points;  // sorted for 1D spaces
};

struct NetOptions {
    int gap_depth = 6;            // structured interval: gap endpoints up to |s| <= depth
    bool breakpoint_images = true;  // include map images of breakpoints up to word length 2
    std::size_t max_points = 2'000'000;
};

// Uniform grid at the requested resolution plus the landmark points of
// the space and every map breakpoint (and their short-word images), so
// suprema of piecewise-linear images are attained on the net.
inline EpsilonNet build_net(const FunctionSystem& sys, const Rat& resolution,
                            const NetOptions& opts = {}) {
    if (!(resolution > 0)) throw std::invalid_argument("net resolution must be positive");
    const ModelSpace& space = sys.space;
    EpsilonNet net{space, resolution, {}};
    if (space.kind == SpaceKind::Cube) {
        Rat steps_r = Rat(1) / resolution;
        long steps = (long)rat_floor(steps_r);
        if (Rat(steps) < steps_r) ++steps;
        double total = std::pow((double)steps + 1, space.dim);
        if (total > (double)opts.max_points)
            throw std::invalid_argument("cube net would exceed the point budget");
        std::vector<Point> pts{{}};
        for (int d = 0; d < space.dim; ++d) {
            std::vector<Point> next;
            for (const Point& p : pts)
                for (long j = 0; j <= steps; ++j) {
                    Point q = p;
                    Rat c = Rat(j) * resolution;
                    q.push_back(c > 1 ? Rat(1) : c);
                    next.push_back(std::move(q));
                }
            pts = std::move(next);
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        net.points = std::move(pts);
        return net;
    }
    std::vector<Rat> xs;
    Rat lo = space.coord_lo(), hi = space.coord_hi();
    for (Rat x = lo; x < hi; x += resolution) xs.push_back(x);
    if (!space.circle_like()) xs.push_back(hi);
    std::vector<Rat> marks;
    for (const MapExpr& m : sys.maps) collect_breakpoints(space, m, marks);
    if (space.kind == SpaceKind::StructuredInterval) {
        marks.insert(marks.end(), {Rat(0), Rat(1, 3), Rat(2, 3), Rat(1)});
        std::vector<std::vector<int>> level{{}};
        for (int d = 0; d <= opts.gap_depth; ++d) {
            std::vector<std::vector<int>> next;
            for (auto& s : level) {
                marks.push_back(gap_l(s));
                marks.push_back(gap_r(s));
                for (int b : {0, 1}) {
                    auto t = s;
                    t.push_back(b);
                    next.push_back(std::move(t));
                }
            }
            level = std::move(next);
        }
    }
    if (space.kind == SpaceKind::BlownUpCircle && space.blowup) {
        for (const auto& blob : space.blowup->blobs) {
            marks.push_back(blob.lift_left);
            marks.push_back(blob.lift_left + blob.lambda);
        }
    }
    if (opts.breakpoint_images) {
        std::vector<Rat> base = marks;
        std::vector<Rat> layer = base;
        for (int round = 0; round < 2; ++round) {
            std::vector<Rat> next;
            for (const MapExpr& m : sys.maps) {
                if (m.kind == MapKind::CantorSymbolic) continue;
                for (const Rat& x : layer) {
                    Rat xr = space.circle_like() ? rat_mod(x, space.length)
                                                 : std::min(std::max(x, lo), hi);
                    next.push_back(evaluate1(space, m, xr));
                }
            }
            marks.insert(marks.end(), next.begin(), next.end());
            layer = std::move(next);
        }
    }
    for (Rat& m : marks) {
        Rat x = space.circle_like() ? rat_mod(m, space.length) : m;
        if (!space.circle_like() && (x < lo || x > hi)) continue;
        xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.size() > opts.max_points) throw std::invalid_argument("net exceeds the point budget");
    net.points.reserve(xs.size());
    for (Rat& x : xs) net.points.push_back(pt(std::move(x)));
    return net;
}

// Net-image diameter of a word: set_diameter of the evaluated net.  A
// lower bound on the true image diameter, exact for piecewise-linear
// maps on breakpoint-complete nets.
inline Rat word_image_diameter(const FunctionSystem& sys, const Word& w, const EpsilonNet& net) {
    std::vector<Point> image;
    image.reserve(net.points.size());
    for (const Point& p : net.points) image.push_back(evaluate(sys, w, p));
    return set_diameter(sys.space, image);
}

// ---- weak contraction check --------------------------------------------

struct WeakContractionResult {
    bool pass = true;
    Rat x, y;  // witness pair with d(f(x),f(y)) >= d(x,y) when pass is false
};

// Strict pairwise decrease over the net, plus the slope audit for
// piecewise kinds (|slope| <= 1 everywhere; a slope above 1 yields an
// immediate witness inside that piece).
inline WeakContractionResult check_weak_contraction(const ModelSpace& space, const MapExpr& map,
                                                    const EpsilonNet& net) {
    if (map.kind == MapKind::Piecewise) {
        for (const Piece& p : map.pieces) {
            if (p.kind == PieceKind::Linear && rat_abs(p.b - p.a) > p.to - p.from)
                return {false, p.from, p.to};
        }
    }
    const auto& pts = net.points;
    std::vector<Rat> img;
    img.reserve(pts.size());
    for (const Point& p : pts) img.push_back(evaluate1(space, map, p[0]));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Rat d = distance1(space, pts[i][0], pts[j][0]);
            if (d == 0) continue;
            if (!(distance1(space, img[i], img[j]) < d)) return {false, pts[i][0], pts[j][0]};
        }
    return {};
}

}  // namespace topofrac
