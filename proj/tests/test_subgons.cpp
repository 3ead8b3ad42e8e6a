#include <doctest.h>

#include "eszk/convexity.hpp"
#include "eszk/error.hpp"
#include "eszk/subgons.hpp"
#include "support/oracles.hpp"

using namespace eszk;
using eszk::testing::seven_gon;
using eszk::testing::unit_square;

namespace {

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

// All k-subsets of {0..n-1} by bitmask, in no particular order.
std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

Polygon pick(const Polygon& p, const std::vector<std::size_t>& idx) {
    return sub_polygon(p, IndexSubset(idx, p.size()));
}

const Polygon kHexagon{{0, 0}, {4, -1}, {7, 2}, {6, 6}, {2, 7}, {-2, 3}};

}  // namespace

TEST_CASE("index subsets") {
    CHECK_THROWS_AS(IndexSubset({0, 0}, 3), InputError);
    CHECK_THROWS_AS(IndexSubset({2, 1}, 3), InputError);
    CHECK_THROWS_AS(IndexSubset({0, 3}, 3), InputError);
    CHECK_THROWS_AS(IndexSubset({}, 3), InputError);
    CHECK(IndexSubset({0, 2}, 3) < IndexSubset({1, 2}, 3));
}

TEST_CASE("sub_polygon") {
    CHECK(pick(seven_gon(), iota(7)) == seven_gon());
    CHECK(pick(unit_square(), {0, 1, 2}) == Polygon{{0, 0}, {1, 0}, {1, 1}});
    CHECK(pick(seven_gon(), {0, 2, 4, 6}) == Polygon{{-13, 0}, {0, 16}, {27, -15}, {16, 30}});
    CHECK_THROWS_AS(sub_polygon(unit_square(), IndexSubset({0, 5}, 6)), InputError);
}

TEST_CASE("binomial") {
    CHECK(binomial(7, 4) == 35);
    CHECK(binomial(13, 4) == 715);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
    CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("count_convex_subgons") {
    const auto seven = count_convex_subgons(seven_gon(), 4);
    CHECK(seven.count == 0);
    CHECK(seven.total == 35);
    CHECK(count_convex_subgons(seven_gon(), 4, {.route = ConvexityRoute::oracle}).count == 0);

    const auto square = count_convex_subgons(unit_square(), 4, {.collect = true});
    CHECK(square.count == 1);
    CHECK(square.total == 1);
    REQUIRE(square.subsets.size() == 1);
    CHECK(square.subsets[0].indices() == iota(4));

    REQUIRE(theorem1_test(kHexagon).convex);
    CHECK(count_convex_subgons(kHexagon, 4).count == 15);
    CHECK(count_convex_subgons(kHexagon, 4, {.route = ConvexityRoute::oracle}).count == 15);

    // Vertex 3 reflected to (18, -39); six convex sub-4-gons by independent recount.
    const Polygon modified{{-13, 0}, {15, 0}, {0, 16}, {18, -39}, {27, -15}, {10, 20}, {16, 30}};
    const auto mod = count_convex_subgons(modified, 4, {.collect = true});
    CHECK(mod.count == 6);
    CHECK(mod.subsets.front().indices() == std::vector<std::size_t>{0, 3, 4, 5});

    CHECK(count_convex_subgons(seven_gon(), 3).count == 35);
    CHECK_THROWS_AS(count_convex_subgons(seven_gon(), 0), InputError);
    CHECK_THROWS_AS(count_convex_subgons(seven_gon(), 8), InputError);
    CHECK_THROWS_AS(count_convex_subgons(seven_gon(), 4, {.budget = 34}), CapabilityError);
}

TEST_CASE("find_convex_subgon examples") {
    CHECK_FALSE(find_convex_subgon(seven_gon(), 4));
    const auto sq = find_convex_subgon(unit_square(), 4);
    REQUIRE(sq);
    CHECK(sq->indices() == iota(4));
    CHECK(find_convex_subgon(seven_gon(), 3)->indices() == iota(3));
    CHECK(find_convex_subgon(kHexagon, 6)->indices() == iota(6));
    CHECK_THROWS_AS(find_convex_subgon(seven_gon(), 9), InputError);
}

TEST_CASE("find_convex_subgon on random strict 13-gons") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const auto p = testing::random_strict_polygon(rng, 13, 1'000'000);
        const auto found = find_convex_subgon(p, 4);
        REQUIRE(found);
        CHECK(oracle_test(sub_polygon(p, *found)).convex);
    }
}

TEST_CASE("find_convex_subgon returns the lexicographically least convex subset") {
    Rng rng(21);
    for (int i = 0; i < 300; ++i) {
        const auto n = static_cast<std::size_t>(rng.uniform(4, 9));
        const auto k = static_cast<std::size_t>(rng.uniform(4, static_cast<std::int64_t>(n)));
        const auto p = testing::random_strict_polygon(rng, n, 30);
        const auto all = count_convex_subgons(p, k, {.route = ConvexityRoute::oracle, .collect = true});
        const auto found = find_convex_subgon(p, k);
        REQUIRE(found.has_value() == (all.count > 0));
        if (found) CHECK(*found == all.subsets.front());
    }
}

TEST_CASE("find_convex_subgon on non-strict polygons") {
    const Polygon line{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}};
    const auto on_line = find_convex_subgon(line, 5);
    REQUIRE(on_line);
    CHECK(on_line->indices() == iota(5));

    Rng rng(4);
    for (int i = 0; i < 300; ++i) {
        const auto n = static_cast<std::size_t>(rng.uniform(4, 8));
        auto p = testing::random_polygon(rng, n, 3);
        const auto k = static_cast<std::size_t>(rng.uniform(4, static_cast<std::int64_t>(n)));
        const auto found = find_convex_subgon(p, k);
        const bool any = count_convex_subgons(p, k, {.route = ConvexityRoute::oracle}).count > 0;
        CHECK(found.has_value() == any);
        if (found) CHECK(oracle_test(sub_polygon(p, *found)).convex);
    }
}

TEST_CASE("triple_coloring") {
    const auto square = triple_coloring(unit_square());
    for (const auto& t : all_subsets(4, 3)) CHECK(square.color(t[0], t[1], t[2]) == TripleColor::good);
    const auto reflected = triple_coloring(Polygon{{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    for (const auto& t : all_subsets(4, 3))
        CHECK(reflected.color(t[0], t[1], t[2]) == TripleColor::bad);
    CHECK(square.color(2, 0, 1) == square.color(0, 1, 2));
    CHECK_THROWS_AS(square.color(0, 0, 1), InputError);
    CHECK_THROWS_AS(triple_coloring(Polygon{{0, 0}, {1, 0}, {2, 0}, {0, 1}}), PreconditionError);

    // No 4-subset of the seven-gon is monochromatic.
    const auto seven = triple_coloring(seven_gon());
    for (const auto& q : all_subsets(7, 4)) {
        const auto c = seven.color(q[0], q[1], q[2]);
        const bool mono = seven.color(q[0], q[1], q[3]) == c && seven.color(q[0], q[2], q[3]) == c &&
                          seven.color(q[1], q[2], q[3]) == c;
        CHECK_FALSE(mono);
    }
}

TEST_CASE("find_totally_monochromatic") {
    const auto square = triple_coloring(unit_square());
    const auto three = find_totally_monochromatic(square, 3);
    REQUIRE(three);
    CHECK(three->subset.indices() == iota(3));

    const auto four = find_totally_monochromatic(square, 4);
    REQUIRE(four);
    CHECK(four->subset.indices() == iota(4));
    CHECK(four->color == TripleColor::good);

    CHECK_FALSE(find_totally_monochromatic(triple_coloring(seven_gon()), 4));
    CHECK_FALSE(find_totally_monochromatic(square, 5));
    CHECK_THROWS_AS(find_totally_monochromatic(square, 2), InputError);

    // Abstract coloring: bad exactly on triples containing index 0.
    std::vector<TripleColor> colors;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            for (std::size_t k = j + 1; k < 6; ++k)
                colors.push_back(i == 0 ? TripleColor::bad : TripleColor::good);
    const TripleColoring abstract(6, colors);
    const auto mono = find_totally_monochromatic(abstract, 5);
    REQUIRE(mono);
    CHECK(mono->subset.indices() == std::vector<std::size_t>{1, 2, 3, 4, 5});
    CHECK(mono->color == TripleColor::good);
    CHECK(count_totally_monochromatic(abstract, 4) == 5);
    CHECK_THROWS_AS(TripleColoring(6, std::span<const TripleColor>(colors).first(5)), InputError);
}

TEST_CASE("monochromatic 4-subsets are exactly the convex sub-4-gons") {
    Rng rng(17);
    for (int i = 0; i < 400; ++i) {
        const auto n = static_cast<std::size_t>(rng.uniform(4, 10));
        const auto p = testing::random_strict_polygon(rng, n, 40);
        const auto coloring = triple_coloring(p);
        const auto counted = count_convex_subgons(p, 4, {.route = ConvexityRoute::oracle});
        const auto mono = find_totally_monochromatic(coloring, 4);
        CHECK(mono.has_value() == (counted.count > 0));
        CHECK(count_totally_monochromatic(coloring, 4) == counted.count);
        if (mono) CHECK(is_convex(sub_polygon(p, mono->subset)).convex);
    }
}

TEST_CASE("every sub-4-gon of a convex strict polygon is convex") {
    Rng rng(29);
    for (int i = 0; i < 300; ++i) {
        const auto n = static_cast<std::size_t>(rng.uniform(4, 9));
        const auto p = testing::random_strictly_convex_polygon(rng, n, 60);
        REQUIRE(is_convex(p).convex);
        CHECK(count_convex_subgons(p, 4, {.route = ConvexityRoute::oracle}).count == binomial(n, 4));
    }
}
