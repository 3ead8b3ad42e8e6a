#include <doctest.h>

#include "eszk/convexity.hpp"
#include "eszk/error.hpp"
#include "eszk/extremal.hpp"
#include "support/oracles.hpp"

using namespace eszk;
using eszk::testing::seven_gon;
using eszk::testing::unit_square;

namespace {

SearchConfig small_config() {
    SearchConfig cfg;
    cfg.n = 6;
    cfg.k = 4;
    cfg.seed = 3;
    cfg.box = 30;
    cfg.max_iterations = 400;
    cfg.restarts = 6;
    return cfg;
}

}  // namespace

TEST_CASE("built-in seven-gon has the expected coordinates") {
    CHECK(seven_gon_without_convex_quadrilateral() == seven_gon());
}

TEST_CASE("verify_certificate") {
    const auto cert = verify_certificate(seven_gon(), 4);
    CHECK(cert.verified);
    CHECK(cert.claimed_bound == 8);
    CHECK(cert.subgon_total == 35);
    CHECK(cert.convex_count == 0);

    const auto square = verify_certificate(unit_square(), 4);
    CHECK_FALSE(square.verified);
    CHECK(square.convex_count == 1);

    const Polygon modified{{-13, 0}, {15, 0}, {0, 16}, {18, -39}, {27, -15}, {10, 20}, {16, 30}};
    CHECK_FALSE(verify_certificate(modified, 4).verified);
    CHECK_THROWS_AS(verify_certificate(seven_gon(), 4, 10), CapabilityError);

    // Re-verification of a verified certificate reproduces it.
    CHECK(verify_certificate(cert.polygon, cert.k).verified);
}

TEST_CASE("f_bounds") {
    const auto three = f_bounds(3);
    CHECK(three.lower == 3);
    CHECK(three.upper == 3u);
    CHECK_FALSE(three.lower_provenance.empty());

    const auto four = f_bounds(4);
    CHECK(four.lower == 8);
    CHECK(four.upper == 13u);
    CHECK_FALSE(four.upper_provenance.empty());

    const auto five = f_bounds(5);
    CHECK_FALSE(five.upper.has_value());
    CHECK(five.symbolic_upper == std::string("R(5,13;4)"));
    CHECK(five.lower == 5);

    CHECK(f_bounds(1).upper == 1u);
    CHECK_THROWS_AS(f_bounds(0), InputError);
}

TEST_CASE("f_bounds uses verified certificates only") {
    std::vector<Certificate> certs;
    Certificate forged = verify_certificate(unit_square(), 4);
    forged.claimed_bound = 12;
    certs.push_back(forged);  // unverified: ignored
    CHECK(f_bounds(4, certs).lower == 8);

    const auto for_five = verify_certificate(seven_gon(), 5);
    REQUIRE(for_five.verified);
    certs.push_back(for_five);
    const auto rec = f_bounds(5, certs);
    CHECK(rec.lower == 8);
    CHECK(rec.lower_provenance.find("certificate") != std::string::npos);
    CHECK_FALSE(rec.upper.has_value());
    CHECK(f_bounds(6, certs).lower == 6);

    auto big = verify_certificate(seven_gon(), 4);
    big.claimed_bound = 14;  // would contradict the upper bound 13
    CHECK_THROWS_AS(f_bounds(4, std::vector<Certificate>{big}), std::logic_error);
}

TEST_CASE("search configuration validation") {
    auto cfg = small_config();
    CHECK_NOTHROW(validate(cfg));
    cfg.k = 7;
    CHECK_THROWS_AS(validate(cfg), InputError);
    cfg = small_config();
    cfg.box = 0;
    CHECK_THROWS_AS(validate(cfg), InputError);
    cfg = small_config();
    cfg.decay = 1.5;
    CHECK_THROWS_AS(validate(cfg), InputError);
    cfg = small_config();
    cfg.initial = unit_square();
    CHECK_THROWS_AS(validate(cfg), InputError);
    cfg.n = 3;
    cfg.k = 3;
    cfg.initial = Polygon{{0, 0}, {1, 0}, {2, 0}};
    CHECK_THROWS_AS(validate(cfg), InputError);
}

TEST_CASE("strict_objective counts convex sub-k-gons") {
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const auto n = static_cast<std::size_t>(rng.uniform(4, 9));
        const auto k = static_cast<std::size_t>(rng.uniform(3, static_cast<std::int64_t>(n)));
        const auto p = testing::random_strict_polygon(rng, n, 40);
        CHECK(strict_objective(p, k) ==
              count_convex_subgons(p, k, {.route = ConvexityRoute::oracle}).count);
    }
    CHECK_FALSE(strict_objective(Polygon{{0, 0}, {1, 1}, {2, 2}, {0, 1}}, 4));
}

TEST_CASE("restart seeds are a pure function of seed and index") {
    CHECK(restart_seed(1, 0) == restart_seed(1, 0));
    CHECK(restart_seed(1, 0) != restart_seed(1, 1));
    CHECK(restart_seed(1, 0) != restart_seed(2, 0));
}

TEST_CASE("best-so-far objective never increases within a restart") {
    const auto cfg = small_config();
    for (std::uint64_t r = 0; r < 4; ++r) {
        const auto outcome = anneal_restart(cfg, r, true);
        REQUIRE_FALSE(outcome.trace.empty());
        for (std::size_t i = 1; i < outcome.trace.size(); ++i)
            CHECK(outcome.trace[i] <= outcome.trace[i - 1]);
        CHECK(outcome.trace.back() == outcome.objective);
        CHECK(strict_objective(outcome.best, cfg.k) == outcome.objective);
    }
}

TEST_CASE("search is deterministic and independent of the worker count") {
    auto cfg = small_config();
    const auto a = search_extremal(cfg);
    const auto b = search_extremal(cfg);
    cfg.workers = 3;
    const auto c = search_extremal(cfg);
    CHECK(a.best == b.best);
    CHECK(a.best == c.best);
    CHECK(a.restart_objectives == c.restart_objectives);
    CHECK(a.objective == count_convex_subgons(a.best, cfg.k).count);
    CHECK(classify(a.best).strict);
    for (auto p : a.best) CHECK((std::abs(p.x) <= cfg.box && std::abs(p.y) <= cfg.box));
    if (a.objective == 0) {
        REQUIRE(a.certificate);
        CHECK(a.certificate->verified);
    } else {
        CHECK_FALSE(a.certificate);
    }
}

TEST_CASE("search seeded with the seven-gon reports objective zero") {
    SearchConfig cfg;
    cfg.n = 7;
    cfg.k = 4;
    cfg.restarts = 2;
    cfg.max_iterations = 100;
    cfg.initial = seven_gon();
    const auto result = search_extremal(cfg);
    CHECK(result.objective == 0);
    CHECK(result.restart_objectives[0] == 0);
    REQUIRE(result.certificate);
    CHECK(result.certificate->verified);
    CHECK(result.certificate->claimed_bound == 8);
}

TEST_CASE("search finds a small certificate") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.k = 4;
    cfg.seed = 9;
    cfg.restarts = 20;
    cfg.max_iterations = 2000;
    const auto result = search_extremal(cfg);
    CHECK(result.objective == 0);
    REQUIRE(result.certificate);
    CHECK(verify_certificate(result.best, 4).verified);
}

TEST_CASE("grow") {
    CHECK_THROWS_AS(grow(unit_square(), small_config()), PreconditionError);

    // The first five vertices of the seven-gon carry no convex sub-4-gon.
    const Polygon five{seven_gon()[0], seven_gon()[1], seven_gon()[2], seven_gon()[3], seven_gon()[4]};
    REQUIRE(verify_certificate(five, 4).verified);
    auto cfg = small_config();
    cfg.max_iterations = 3000;
    cfg.box = 40;
    const auto grown = grow(five, cfg);
    REQUIRE(grown);
    CHECK(grown->size() == 6);
    CHECK(verify_certificate(*grown, 4).verified);
    CHECK(classify(*grown).strict);

    const auto larger = grow(seven_gon(), [] {
        auto c = small_config();
        c.max_iterations = 50;
        return c;
    }());
    if (larger) CHECK(verify_certificate(*larger, 4).verified);
}
