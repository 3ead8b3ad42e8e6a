#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eszk/geometry.hpp"
#include "eszk/subgons.hpp"

namespace eszk {

/// The 7-gon with no convex sub-4-gon, witnessing F(4) >= 8.
Polygon seven_gon_without_convex_quadrilateral();

/// Lower-bound certificate: `polygon` has no convex sub-k-gon, hence
/// F(k) >= n + 1.
struct Certificate {
    Polygon polygon;
    std::size_t k = 0;
    std::size_t claimed_bound = 0;   ///< polygon.size() + 1
    bool verified = false;           ///< set only by verify_certificate
    std::uint64_t subgon_total = 0;  ///< C(n, k)
    std::uint64_t convex_count = 0;
};

/// Exhaustive recount with oracle_test on every sub-k-gon; never relies on
/// the determinant-sign fast path. CapabilityError above the budget.
Certificate verify_certificate(const Polygon& polygon, std::size_t k,
                               std::uint64_t budget = kEnumerationBudget);

/// Known bounds on F(k). Each numeric entry names where it comes from.
struct FBoundRecord {
    std::size_t k = 0;
    std::size_t lower = 0;
    std::string lower_provenance;
    std::optional<std::size_t> upper;
    std::string upper_provenance;
    std::optional<std::string> symbolic_upper;
};

/// k <= 3: F(k) = k. k = 4: 8 <= F(4) <= 13. k >= 5: F(k) >= k with the
/// upper bound kept symbolic as R(k,13;4). Verified certificates for the
/// same k raise the lower bound; unverified ones are ignored.
/// InputError for k < 1.
FBoundRecord f_bounds(std::size_t k, std::span<const Certificate> certificates = {});

struct SearchConfig {
    std::size_t n = 7;
    std::size_t k = 4;
    std::uint64_t seed = 1;
    std::int64_t box = 50;               ///< coordinates stay in [-box, box]
    std::uint64_t max_iterations = 5000; ///< per restart
    std::uint64_t restarts = 200;
    double initial_temperature = 2.0;
    double decay = 0.999;                ///< T_t = T_0 * decay^t
    std::int64_t radius = 5;             ///< move offsets in [-radius, radius]^2
    unsigned workers = 1;                ///< restart fan-out; does not affect results
    /// Starting state for restart 0 (strict, n vertices); random otherwise.
    std::optional<Polygon> initial;
};

/// InputError for invalid configurations.
void validate(const SearchConfig& config);

/// Number of convex sub-k-gons of a strict polygon, computed from its triple
/// orientations; nullopt if the polygon is not strict.
std::optional<std::uint64_t> strict_objective(const Polygon& polygon, std::size_t k);

/// Seed of restart `index`; a pure function of (seed, index).
std::uint64_t restart_seed(std::uint64_t seed, std::uint64_t index);

struct RestartOutcome {
    Polygon best;
    std::uint64_t objective = 0;
    std::uint64_t iterations = 0;
    /// Best-so-far objective after each iteration; filled when requested.
    std::vector<std::uint64_t> trace;
};

/// One annealing run. Moves displace a single vertex; non-strict or
/// out-of-box states are rejected. Stops early once the objective hits 0.
RestartOutcome anneal_restart(const SearchConfig& config, std::uint64_t index,
                              bool record_trace = false);

struct SearchResult {
    Polygon best;
    std::uint64_t objective = 0;
    std::optional<Certificate> certificate;
    std::size_t best_restart = 0;
    std::vector<std::uint64_t> restart_objectives;
};

/// Runs all restarts (across `config.workers` threads), keeps the minimum
/// objective with ties broken by the lexicographically smallest flattened
/// encoding, and certifies a zero objective with verify_certificate.
/// Results do not depend on the worker count.
SearchResult search_extremal(const SearchConfig& config);

/// Tries to extend a certified polygon by one vertex: for each of
/// config.max_iterations rounds, one sampled point is tried at every
/// insertion position. Returns the first extension that passes
/// verify_certificate. PreconditionError if `polygon` is not certified.
std::optional<Polygon> grow(const Polygon& polygon, const SearchConfig& config);

}  // namespace eszk
