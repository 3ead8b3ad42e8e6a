#include "eszk/subgons.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <string>

#include "eszk/convexity.hpp"
#include "eszk/error.hpp"

namespace eszk {
namespace {

void require_k(const Polygon& polygon, std::size_t k) {
    if (k < 1 || k > polygon.size())
        throw InputError("k = " + std::to_string(k) + " must satisfy 1 <= k <= n = " +
                         std::to_string(polygon.size()));
}

void require_budget(std::uint64_t total, std::uint64_t budget) {
    if (total > budget)
        throw CapabilityError(std::to_string(total) + " subsets exceed the enumeration budget of " +
                              std::to_string(budget));
}

// Advances `idx` to the next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const auto k = idx.size();
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

Polygon select(const Polygon& polygon, const std::vector<std::size_t>& idx) {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(polygon[i]);
    return Polygon(std::move(out));
}

bool convex_by(ConvexityRoute route, const Polygon& polygon) {
    return route == ConvexityRoute::oracle ? oracle_test(polygon).convex
                                           : is_convex(polygon).convex;
}

std::optional<IndexSubset> first_by_enumeration(const Polygon& polygon, std::size_t k,
                                                std::uint64_t budget) {
    require_budget(binomial(polygon.size(), k), budget);
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        if (is_convex(select(polygon, idx)).convex) return IndexSubset(idx, polygon.size());
    } while (next_combination(idx, polygon.size()));
    return std::nullopt;
}

// Depth-first walk over the m-subsets of a coloring whose triples all share
// one color, in lexicographic order. `visit` returns true to stop the walk.
// Node count is charged against `budget`.
template <class Visit>
class MonochromaticWalk {
public:
    MonochromaticWalk(const TripleColoring& coloring, std::size_t m, std::uint64_t budget,
                      Visit& visit)
        : coloring_(coloring), m_(m), budget_(budget), visit_(visit) {
        tuple_.reserve(m);
    }

    bool run() { return extend(0, 0); }

private:
    bool extend(std::size_t start, int color) {
        if (tuple_.size() == m_) return visit_(tuple_, color);
        const auto n = coloring_.size();
        for (std::size_t next = start; next + (m_ - tuple_.size()) <= n; ++next) {
            if (++nodes_ > budget_)
                throw CapabilityError("search exceeded the budget of " + std::to_string(budget_) +
                                      " nodes");
            int c = color;
            bool consistent = true;
            for (std::size_t a = 0; a < tuple_.size() && consistent; ++a) {
                for (std::size_t b = a + 1; b < tuple_.size(); ++b) {
                    const int here = static_cast<int>(coloring_.color(tuple_[a], tuple_[b], next));
                    if (c == 0) c = here;
                    if (here != c) {
                        consistent = false;
                        break;
                    }
                }
            }
            if (!consistent) continue;
            tuple_.push_back(next);
            const bool stop = extend(next + 1, c);
            tuple_.pop_back();
            if (stop) return true;
        }
        return false;
    }

    const TripleColoring& coloring_;
    std::size_t m_;
    std::uint64_t budget_;
    Visit& visit_;
    std::vector<std::size_t> tuple_;
    std::uint64_t nodes_ = 0;
};

template <class Visit>
bool walk_monochromatic(const TripleColoring& coloring, std::size_t m, std::uint64_t budget,
                        Visit visit) {
    return MonochromaticWalk<Visit>(coloring, m, budget, visit).run();
}

std::optional<IndexSubset> find_strict(const Polygon& polygon, std::size_t k,
                                       std::uint64_t budget) {
    const auto coloring = triple_coloring(polygon);
    std::optional<IndexSubset> found;
    bool inconsistent = false;
    walk_monochromatic(coloring, k, budget, [&](const std::vector<std::size_t>& tuple, int) {
        if (is_convex(select(polygon, tuple)).convex) {
            found.emplace(tuple, polygon.size());
        } else {
            inconsistent = true;
        }
        return true;
    });
    if (inconsistent) return first_by_enumeration(polygon, k, budget);
    return found;
}

}  // namespace

IndexSubset::IndexSubset(std::vector<std::size_t> indices, std::size_t n)
    : indices_(std::move(indices)) {
    if (indices_.empty() || indices_.size() > n)
        throw InputError("index subset size must lie in [1, n]");
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] >= n)
            throw InputError("index " + std::to_string(indices_[i]) + " out of range for n = " +
                             std::to_string(n));
        if (i > 0 && indices_[i] <= indices_[i - 1])
            throw InputError("indices must be strictly increasing");
    }
}

Polygon sub_polygon(const Polygon& polygon, const IndexSubset& subset) {
    if (subset.size() > polygon.size() || subset.indices().back() >= polygon.size())
        throw InputError("index subset does not fit the polygon");
    return select(polygon, subset.indices());
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    __extension__ typedef unsigned __int128 wide;
    wide result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(result);
}

SubgonCount count_convex_subgons(const Polygon& polygon, std::size_t k,
                                 const CountOptions& options) {
    require_k(polygon, k);
    SubgonCount result;
    result.total = binomial(polygon.size(), k);
    require_budget(result.total, options.budget);

    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        if (convex_by(options.route, select(polygon, idx))) {
            ++result.count;
            if (options.collect) result.subsets.emplace_back(idx, polygon.size());
        }
    } while (next_combination(idx, polygon.size()));
    return result;
}

std::optional<IndexSubset> find_convex_subgon(const Polygon& polygon, std::size_t k,
                                              const FindOptions& options) {
    require_k(polygon, k);
    if (k <= 3) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        return IndexSubset(std::move(idx), polygon.size());
    }
    if (is_strict(polygon)) return find_strict(polygon, k, options.budget);

    std::optional<Polygon> perturbed;
    try {
        perturbed = perturb_to_strict(
            polygon, {options.perturb_scale, options.perturb_jitter, options.perturb_seed});
    } catch (const InputError&) {
    } catch (const ExhaustionError&) {
    }
    if (perturbed) {
        auto candidate = find_strict(*perturbed, k, options.budget);
        if (candidate && is_convex(sub_polygon(polygon, *candidate)).convex) return candidate;
    }
    return first_by_enumeration(polygon, k, options.budget);
}

TripleColoring::TripleColoring(std::size_t n, std::span<const TripleColor> colors)
    : n_(n), table_(n * n * n, TripleColor::good) {
    if (colors.size() != binomial(n, 3))
        throw InputError("triple coloring needs C(n,3) = " + std::to_string(binomial(n, 3)) +
                         " colors, got " + std::to_string(colors.size()));
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto c = colors[r++];
                for (auto [a, b, d] : {std::array{i, j, k}, std::array{i, k, j}, std::array{j, i, k},
                                       std::array{j, k, i}, std::array{k, i, j}, std::array{k, j, i}})
                    table_[(a * n + b) * n + d] = c;
            }
}

TripleColor TripleColoring::color(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= n_ || j >= n_ || k >= n_ || i == j || j == k || i == k)
        throw InputError("triple coloring lookup needs three distinct indices below n");
    return table_[(i * n_ + j) * n_ + k];
}

TripleColoring triple_coloring(const Polygon& polygon) {
    if (!is_strict(polygon)) throw PreconditionError("triple coloring needs a strict polygon");
    const auto n = polygon.size();
    std::vector<TripleColor> colors;
    colors.reserve(binomial(n, 3));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                colors.push_back(delta(polygon[i], polygon[j], polygon[k]) > 0 ? TripleColor::good
                                                                               : TripleColor::bad);
    return TripleColoring(n, colors);
}

std::optional<MonochromaticSubset> find_totally_monochromatic(const TripleColoring& coloring,
                                                              std::size_t m) {
    if (m < 3) throw InputError("monochromatic subset search needs m >= 3");
    if (m > coloring.size()) return std::nullopt;
    std::optional<MonochromaticSubset> found;
    walk_monochromatic(coloring, m, std::numeric_limits<std::uint64_t>::max(),
                       [&](const std::vector<std::size_t>& tuple, int color) {
                           found.emplace(MonochromaticSubset{IndexSubset(tuple, coloring.size()),
                                                             static_cast<TripleColor>(color)});
                           return true;
                       });
    return found;
}

std::uint64_t count_totally_monochromatic(const TripleColoring& coloring, std::size_t k) {
    if (k > coloring.size()) return 0;
    if (k <= 3) return binomial(coloring.size(), k);
    std::uint64_t count = 0;
    walk_monochromatic(coloring, k, std::numeric_limits<std::uint64_t>::max(),
                       [&](const std::vector<std::size_t>&, int) {
                           ++count;
                           return false;
                       });
    return count;
}

}  // namespace eszk
