#include "eszk/convexity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "eszk/error.hpp"

namespace eszk {
namespace {

std::string format_point(Point p) {
    std::ostringstream out;
    out << '(' << p.x << ", " << p.y << ')';
    return out.str();
}

std::int64_t dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

// Left normal of d; for a counterclockwise hull edge it points inward.
Point left_normal(Point d) { return {-d.y, d.x}; }

bool on_closed_segment(Point a, Point b, Point p) {
    return delta(a, b, p) == 0 && on_segment(a, b, p);
}

bool supports(const Polygon& polygon, Point base, Point normal) {
    return std::all_of(polygon.begin(), polygon.end(),
                       [&](Point v) { return dot(normal, v - base) >= 0; });
}

}  // namespace

std::string_view to_string(ConvexityMethod method) {
    switch (method) {
        case ConvexityMethod::theorem1: return "theorem1";
        case ConvexityMethod::oracle: return "oracle";
        case ConvexityMethod::small_n: return "small_n";
        case ConvexityMethod::dim_le_1: return "dim_le_1";
    }
    return "unknown";
}

ConvexityVerdict theorem1_test(const Polygon& polygon) {
    const auto n = polygon.size();
    if (n < 4) throw PreconditionError("determinant-sign test needs n >= 4");
    if (!is_strict(polygon))
        throw PreconditionError("determinant-sign test needs a strict polygon; use oracle_test");

    const int reference = orientation(polygon[0], polygon[1], polygon[2]);
    ConvexityVerdict verdict{true, ConvexityMethod::theorem1, std::nullopt};

    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
        if (orientation(polygon[a], polygon[b], polygon[c]) == reference) return true;
        std::ostringstream out;
        out << "sign of D(" << a << ',' << b << ',' << c << ") differs from sign of D(0,1,2)";
        verdict.convex = false;
        verdict.witness = out.str();
        return false;
    };

    for (std::size_t i = 2; i <= n - 2; ++i)
        if (!check(i - 1, i, i + 1)) return verdict;
    for (std::size_t j = 2; j <= n - 2; ++j)
        if (!check(0, j, j + 1)) return verdict;
    for (std::size_t k = 2; k <= n - 2; ++k)
        if (!check(0, 1, k + 1)) return verdict;
    return verdict;
}

ConvexityVerdict oracle_test(const Polygon& polygon) {
    ConvexityVerdict verdict{true, ConvexityMethod::oracle, std::nullopt};
    if (dimension(polygon.vertices()) <= 1) return verdict;

    const auto hull = convex_hull(polygon.vertices()).cycle;
    const auto h = hull.size();
    const auto n = polygon.size();

    // (a) every edge lies inside one hull edge. A non-degenerate segment on
    // the boundary of a strictly convex polygon cannot turn a corner, so
    // containment in a single hull edge is both necessary and sufficient.
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> cover(h);
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = polygon[i];
        const Point b = polygon[polygon.next(i)];
        std::optional<std::size_t> host;
        for (std::size_t t = 0; t < h && !host; ++t) {
            const Point s = hull[t];
            const Point e = hull[(t + 1) % h];
            if (on_closed_segment(s, e, a) && on_closed_segment(s, e, b)) host = t;
        }
        if (!host) {
            verdict.convex = false;
            verdict.witness = "edge " + std::to_string(i) + " [" + format_point(a) + ", " +
                              format_point(b) + "] is not on the hull boundary";
            return verdict;
        }
        if (a == b) continue;
        const Point s = hull[*host];
        const Point dir = hull[(*host + 1) % h] - s;
        auto lo = dot(dir, a - s);
        auto hi = dot(dir, b - s);
        if (lo > hi) std::swap(lo, hi);
        cover[*host].emplace_back(lo, hi);
    }

    // (b) every hull edge is covered by the polygon edges lying on it,
    // measured by integer projection onto the hull edge direction.
    for (std::size_t t = 0; t < h; ++t) {
        const Point dir = hull[(t + 1) % h] - hull[t];
        const auto length = dot(dir, dir);
        auto& intervals = cover[t];
        std::sort(intervals.begin(), intervals.end());
        std::int64_t reach = 0;
        for (const auto& [lo, hi] : intervals) {
            if (lo > reach) break;
            reach = std::max(reach, hi);
        }
        if (reach < length) {
            verdict.convex = false;
            verdict.witness = "hull edge [" + format_point(hull[t]) + ", " +
                              format_point(hull[(t + 1) % h]) + "] is not covered by polygon edges";
            return verdict;
        }
    }
    return verdict;
}

ConvexityVerdict is_convex(const Polygon& polygon) {
    if (polygon.size() <= 3) return {true, ConvexityMethod::small_n, std::nullopt};
    if (dimension(polygon.vertices()) <= 1) return {true, ConvexityMethod::dim_le_1, std::nullopt};
    if (is_strict(polygon)) return theorem1_test(polygon);
    return oracle_test(polygon);
}

std::optional<ToOneSideWitness> to_one_side(const Polygon& polygon) {
    // Support directions for degenerate edges: a repeated vertex needs some
    // supporting line through it, and every boundary point lies on a hull
    // edge (or on the line itself in dimension 1).
    std::vector<Point> support_normals;
    switch (dimension(polygon.vertices())) {
        case 0:
            support_normals.push_back({1, 0});
            break;
        case 1: {
            const Point a = polygon[0];
            const Point b = *std::find_if(polygon.begin(), polygon.end(),
                                          [a](Point p) { return p != a; });
            const Point n = left_normal(b - a);
            support_normals.push_back(n);
            support_normals.push_back({-n.x, -n.y});
            break;
        }
        default: {
            const auto hull = convex_hull(polygon.vertices()).cycle;
            for (std::size_t t = 0; t < hull.size(); ++t)
                support_normals.push_back(left_normal(hull[(t + 1) % hull.size()] - hull[t]));
        }
    }

    ToOneSideWitness witness;
    for (std::size_t j = 0; j < polygon.size(); ++j) {
        const Point base = polygon[j];
        const Point d = polygon[polygon.next(j)] - base;
        std::optional<Point> found;
        if (d != Point{}) {
            const Point n = left_normal(d);
            for (Point candidate : {n, Point{-n.x, -n.y}}) {
                if (supports(polygon, base, candidate)) {
                    found = candidate;
                    break;
                }
            }
        } else {
            for (Point candidate : support_normals) {
                if (supports(polygon, base, candidate)) {
                    found = candidate;
                    break;
                }
            }
        }
        if (!found) return std::nullopt;
        witness.normals.push_back(*found);
    }
    return witness;
}

Polygon permute(const Polygon& polygon, const std::vector<std::size_t>& order) {
    std::vector<Point> out;
    out.reserve(order.size());
    for (auto i : order) out.push_back(polygon[i]);
    return Polygon(std::move(out));
}

bool is_pre_convex(const Polygon& polygon) {
    if (polygon.size() <= 3) return true;
    if (is_strict(polygon)) {
        std::vector<Point> vertices(polygon.begin(), polygon.end());
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        return vertices == convex_hull(polygon.vertices()).extreme_points;
    }
    if (polygon.size() > kMaxPermutationSize)
        throw CapabilityError("pre-convexity of a non-strict polygon needs permutation search; n = " +
                              std::to_string(polygon.size()) + " exceeds the limit of " +
                              std::to_string(kMaxPermutationSize));
    std::vector<std::size_t> order(polygon.size());
    std::iota(order.begin(), order.end(), 0);
    do {
        if (is_convex(permute(polygon, order)).convex) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

PermutationCensus convex_permutations(const Polygon& polygon) {
    if (polygon.size() > kMaxPermutationSize)
        throw CapabilityError("permutation census limited to n <= " +
                              std::to_string(kMaxPermutationSize));
    PermutationCensus census;
    std::vector<std::size_t> order(polygon.size());
    std::iota(order.begin(), order.end(), 0);
    do {
        ++census.total;
        if (is_convex(permute(polygon, order)).convex) census.convex.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return census;
}

}  // namespace eszk
