#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace eszk {

/// Largest admissible absolute coordinate. With |x|,|y| <= 10^9 every
/// coordinate difference is below 2^31 and the orientation determinant
/// stays below 8 * 10^18 < 2^63.
inline constexpr std::int64_t kCoordBound = 1'000'000'000;

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr auto operator<=>(const Point&, const Point&) = default;
    friend constexpr bool operator==(const Point&, const Point&) = default;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

constexpr bool within_bound(Point p) {
    return p.x >= -kCoordBound && p.x <= kCoordBound && p.y >= -kCoordBound &&
           p.y <= kCoordBound;
}

/// Throws InputError if `p` violates the coordinate bound.
void require_bound(Point p);

/// Ordered vertex sequence (V_0, ..., V_{n-1}). Duplicates are allowed and
/// order is significant. Construction enforces n >= 1 and the coordinate
/// bound, so every Polygon in the program is a valid predicate input.
class Polygon {
public:
    explicit Polygon(std::vector<Point> vertices);
    Polygon(std::initializer_list<Point> vertices);

    std::size_t size() const noexcept { return vertices_.size(); }
    const Point& operator[](std::size_t i) const { return vertices_[i]; }
    std::span<const Point> vertices() const noexcept { return vertices_; }
    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }

    /// Cyclic successor index: edge i joins V_i and V_{(i+1) mod n}.
    std::size_t next(std::size_t i) const noexcept { return i + 1 == size() ? 0 : i + 1; }

    /// Flattened image (x_0, y_0, ..., x_{n-1}, y_{n-1}).
    std::vector<std::int64_t> flattened() const;

    Polygon reversed() const;
    /// Cyclic shift so that the result starts at V_{shift mod n}.
    Polygon rotated(std::size_t shift) const;

    friend auto operator<=>(const Polygon&, const Polygon&) = default;
    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<Point> vertices_;
};

/// Twice the signed area of triangle (a, b, c); equal to the 3x3
/// determinant with rows (1, x, y). Positive for a counterclockwise turn,
/// negative for clockwise, zero for collinear points.
std::int64_t delta(Point a, Point b, Point c);

inline int orientation(Point a, Point b, Point c) {
    const auto d = delta(a, b, c);
    return (d > 0) - (d < 0);
}

/// Closed-segment membership for a point already known to be collinear
/// with [a, b] (or a == b).
bool on_segment(Point a, Point b, Point p);

struct ClassificationReport {
    std::size_t n = 0;
    bool strict = false;
    bool ordinary = false;
    int dimension = 0;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Affine dimension of the vertex set: 0, 1 or 2.
int dimension(std::span<const Point> points);
bool is_strict(const Polygon& polygon);
bool is_ordinary(const Polygon& polygon);
ClassificationReport classify(const Polygon& polygon);

struct Hull {
    /// Extreme points in counterclockwise order, starting at the
    /// lexicographically smallest one. No points interior to hull edges.
    std::vector<Point> cycle;
    /// Same points, sorted lexicographically.
    std::vector<Point> extreme_points;
};

/// Strict convex hull (monotone chain, duplicates removed first). A single
/// distinct point gives a one-element cycle, a collinear set its two
/// endpoints. Throws InputError on empty input.
Hull convex_hull(std::span<const Point> points);

/// Exactly the SplitMix64 sequence; used to derive reproducible seeds.
std::uint64_t splitmix64(std::uint64_t& state);

struct PerturbOptions {
    std::int64_t scale = 1;    ///< M >= 1
    std::int64_t jitter = 0;   ///< J, with 2J < M
    std::uint64_t seed = 0;
    int max_attempts = 64;
};

/// Maps vertex i to (M x_i + u_i, M y_i + w_i) with |u_i|, |w_i| <= J,
/// resampling the offsets until the polygon is strict. With J = 0 and a
/// strict input the result is the input scaled by M. Throws InputError on
/// invalid parameters and ExhaustionError when no strict sample is found.
Polygon perturb_to_strict(const Polygon& polygon, const PerturbOptions& options);

}  // namespace eszk
