#include "eszk/geometry.hpp"

#include <algorithm>
#include <string>

#include "eszk/error.hpp"
#include "eszk/random.hpp"

namespace eszk {

void require_bound(Point p) {
    if (!within_bound(p)) {
        throw InputError("coordinate (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                         ") exceeds the bound 10^9");
    }
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InputError("a polygon needs at least one vertex");
    for (const auto& p : vertices_) require_bound(p);
}

Polygon::Polygon(std::initializer_list<Point> vertices)
    : Polygon(std::vector<Point>(vertices)) {}

std::vector<std::int64_t> Polygon::flattened() const {
    std::vector<std::int64_t> out;
    out.reserve(2 * size());
    for (const auto& p : vertices_) {
        out.push_back(p.x);
        out.push_back(p.y);
    }
    return out;
}

Polygon Polygon::reversed() const {
    return Polygon(std::vector<Point>(vertices_.rbegin(), vertices_.rend()));
}

Polygon Polygon::rotated(std::size_t shift) const {
    auto copy = vertices_;
    std::rotate(copy.begin(), copy.begin() + static_cast<std::ptrdiff_t>(shift % size()),
                copy.end());
    return Polygon(std::move(copy));
}

std::int64_t delta(Point a, Point b, Point c) {
    require_bound(a);
    require_bound(b);
    require_bound(c);
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
}

bool on_segment(Point a, Point b, Point p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

int dimension(std::span<const Point> points) {
    if (points.empty()) return 0;
    const Point a = points.front();
    auto distinct = std::find_if(points.begin(), points.end(), [a](Point p) { return p != a; });
    if (distinct == points.end()) return 0;
    const Point b = *distinct;
    for (const auto& c : points) {
        if (delta(a, b, c) != 0) return 2;
    }
    return 1;
}

bool is_strict(const Polygon& polygon) {
    const auto n = polygon.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (delta(polygon[i], polygon[j], polygon[k]) == 0) return false;
    return true;
}

bool is_ordinary(const Polygon& polygon) {
    std::vector<Point> sorted(polygon.begin(), polygon.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

ClassificationReport classify(const Polygon& polygon) {
    return {polygon.size(), is_strict(polygon), is_ordinary(polygon),
            dimension(polygon.vertices())};
}

Hull convex_hull(std::span<const Point> points) {
    if (points.empty()) throw InputError("convex hull of an empty point set");
    for (const auto& p : points) require_bound(p);

    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Hull hull;
    if (pts.size() <= 2) {
        hull.cycle = pts;
        hull.extreme_points = pts;
        return hull;
    }

    // Andrew's monotone chain; popping on <= 0 drops collinear points.
    std::vector<Point> chain(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && delta(chain[k - 2], chain[k - 1], p) <= 0) --k;
        chain[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && delta(chain[k - 2], chain[k - 1], pts[i]) <= 0) --k;
        chain[k++] = pts[i];
    }
    chain.resize(k - 1);

    // All points collinear: the chain degenerates to the two endpoints.
    hull.cycle = std::move(chain);
    hull.extreme_points = hull.cycle;
    std::sort(hull.extreme_points.begin(), hull.extreme_points.end());
    return hull;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Polygon perturb_to_strict(const Polygon& polygon, const PerturbOptions& options) {
    const auto scale = options.scale;
    const auto jitter = options.jitter;
    if (scale < 1) throw InputError("perturbation scale must be at least 1");
    if (jitter < 0 || 2 * jitter >= scale)
        throw InputError("perturbation jitter must satisfy 0 <= J < M/2");
    if (options.max_attempts < 1) throw InputError("perturbation needs at least one attempt");

    const std::int64_t limit = (kCoordBound - jitter) / scale;
    for (const auto& p : polygon) {
        if (p.x > limit || p.x < -limit || p.y > limit || p.y < -limit)
            throw InputError("scaled coordinates would exceed the bound 10^9");
    }

    std::vector<Point> scaled;
    scaled.reserve(polygon.size());
    for (const auto& p : polygon) scaled.push_back({p.x * scale, p.y * scale});

    Rng rng(options.seed);
    std::vector<Point> trial(scaled.size());
    for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
        for (std::size_t i = 0; i < scaled.size(); ++i) {
            const auto u = rng.uniform(-jitter, jitter);
            const auto w = rng.uniform(-jitter, jitter);
            trial[i] = {scaled[i].x + u, scaled[i].y + w};
        }
        Polygon candidate(trial);
        if (is_strict(candidate)) return candidate;
    }
    throw ExhaustionError("no strict perturbation found", options.max_attempts);
}

}  // namespace eszk
