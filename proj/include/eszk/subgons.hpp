#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eszk/geometry.hpp"

namespace eszk {

/// Strictly increasing index tuple selecting a sub-polygon.
class IndexSubset {
public:
    /// Throws InputError unless the indices are strictly increasing, lie in
    /// [0, n) and 1 <= size <= n.
    IndexSubset(std::vector<std::size_t> indices, std::size_t n);

    std::size_t size() const noexcept { return indices_.size(); }
    std::size_t operator[](std::size_t i) const { return indices_[i]; }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

    friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;
    friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

private:
    std::vector<std::size_t> indices_;
};

Polygon sub_polygon(const Polygon& polygon, const IndexSubset& subset);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

/// Which convexity decision enumerations apply to each sub-polygon.
enum class ConvexityRoute {
    dispatch,  ///< is_convex (fast determinant-sign path when strict)
    oracle,    ///< oracle_test only
};

struct SubgonCount {
    std::uint64_t count = 0;
    std::uint64_t total = 0;            ///< C(n, k)
    std::vector<IndexSubset> subsets;   ///< filled only when requested
};

struct CountOptions {
    ConvexityRoute route = ConvexityRoute::dispatch;
    bool collect = false;
    std::uint64_t budget = kEnumerationBudget;
};

/// Exhaustive count of convex sub-k-gons. InputError unless 1 <= k <= n;
/// CapabilityError when C(n, k) exceeds the budget.
SubgonCount count_convex_subgons(const Polygon& polygon, std::size_t k,
                                 const CountOptions& options = {});

struct FindOptions {
    std::uint64_t budget = kEnumerationBudget;
    /// Perturbation used for non-strict input before re-verification.
    std::int64_t perturb_scale = 10'000;
    std::int64_t perturb_jitter = 1;
    std::uint64_t perturb_seed = 0x5eed;
};

/// Lexicographically first convex sub-k-gon found, or nothing.
///
/// Strict polygons are searched depth-first over increasing tuples, and a
/// partial tuple is extended only while each new 4-subset stays convex,
/// that is while all triple orientations in the tuple agree. Every
/// candidate is re-checked with is_convex; a failed re-check switches to
/// plain enumeration. Non-strict polygons are perturbed to a strict one,
/// searched there, and the index set is re-verified on the original; if
/// that fails (or the perturbation has no solution) the original is
/// enumerated exhaustively.
std::optional<IndexSubset> find_convex_subgon(const Polygon& polygon, std::size_t k,
                                              const FindOptions& options = {});

enum class TripleColor : std::int8_t { bad = -1, good = 1 };

/// Colors every 3-subset {i < j < k} of {0, ..., n-1}.
class TripleColoring {
public:
    /// Colors are listed in lexicographic order of the triples.
    TripleColoring(std::size_t n, std::span<const TripleColor> colors);

    std::size_t size() const noexcept { return n_; }
    /// Any order of three distinct indices; the color is that of the sorted triple.
    TripleColor color(std::size_t i, std::size_t j, std::size_t k) const;

private:
    std::size_t n_;
    std::vector<TripleColor> table_;  // n^3 dense, all permutations filled
};

/// Good iff delta(V_i, V_j, V_k) > 0 for i < j < k. PreconditionError for
/// non-strict input.
TripleColoring triple_coloring(const Polygon& polygon);

struct MonochromaticSubset {
    IndexSubset subset;
    TripleColor color;
};

/// Lexicographically first m-subset all of whose 3-subsets share a color.
/// InputError for m < 3.
std::optional<MonochromaticSubset> find_totally_monochromatic(const TripleColoring& coloring,
                                                              std::size_t m);

/// Number of k-subsets whose 3-subsets all share a color. For a strict
/// polygon's coloring this equals the number of convex sub-k-gons (k >= 4).
std::uint64_t count_totally_monochromatic(const TripleColoring& coloring, std::size_t k);

}  // namespace eszk
