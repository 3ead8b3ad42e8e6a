#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eszk/geometry.hpp"

namespace eszk {

enum class ConvexityMethod { theorem1, oracle, small_n, dim_le_1 };

std::string_view to_string(ConvexityMethod method);

struct ConvexityVerdict {
    bool convex = false;
    ConvexityMethod method = ConvexityMethod::oracle;
    /// Set whenever `convex` is false: the first violated sign condition or
    /// the first edge that leaves the hull boundary.
    std::optional<std::string> witness;
};

/// Determinant-sign test for strict n-gons, n >= 4. The polygon is convex
/// iff the signs of
///   D(i-1, i, i+1)  for i in {2..n-2},
///   D(0, j, j+1)    for j in {1..n-2},
///   D(0, 1, k+1)    for k in {2..n-2}
/// all agree. Stops at the first disagreement. Throws PreconditionError for
/// non-strict input or n < 4.
ConvexityVerdict theorem1_test(const Polygon& polygon);

/// Definition-level decision: the union of the closed edges [V_i, V_{i+1}]
/// (cyclic) equals the boundary of conv P. Exact for every polygon,
/// including repeated vertices and collinear runs.
ConvexityVerdict oracle_test(const Polygon& polygon);

/// n <= 3 and dimension <= 1 are convex outright; strict polygons go
/// through theorem1_test, everything else through oracle_test.
ConvexityVerdict is_convex(const Polygon& polygon);

/// One integer normal per edge (a supporting functional up to positive
/// scale). For edge j every vertex V satisfies <normal, V - V_j> >= 0.
struct ToOneSideWitness {
    std::vector<Point> normals;
};

std::optional<ToOneSideWitness> to_one_side(const Polygon& polygon);

/// Whether some permutation of the vertices is convex. Strict polygons use
/// the extreme-point characterization; non-strict ones fall back to
/// permutation search and are rejected with CapabilityError above
/// kMaxPermutationSize vertices.
bool is_pre_convex(const Polygon& polygon);

inline constexpr std::size_t kMaxPermutationSize = 8;

struct PermutationCensus {
    std::size_t total = 0;                          ///< n!
    std::vector<std::vector<std::size_t>> convex;   ///< index orders, lexicographic
};

/// Enumerates all n! index orders and keeps the convex ones.
/// CapabilityError when n > kMaxPermutationSize.
PermutationCensus convex_permutations(const Polygon& polygon);

/// Applies an index order: result[i] = polygon[order[i]].
Polygon permute(const Polygon& polygon, const std::vector<std::size_t>& order);

}  // namespace eszk
