#include "eszk/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "eszk/convexity.hpp"
#include "eszk/error.hpp"
#include "eszk/random.hpp"

namespace eszk {
namespace {

constexpr int kPlacementAttempts = 10'000;

bool extends_strictly(std::span<const Point> existing, Point p) {
    for (std::size_t i = 0; i < existing.size(); ++i) {
        if (existing[i] == p) return false;
        for (std::size_t j = i + 1; j < existing.size(); ++j)
            if (delta(existing[i], existing[j], p) == 0) return false;
    }
    return true;
}

Point random_point(Rng& rng, std::int64_t box) {
    return {rng.uniform(-box, box), rng.uniform(-box, box)};
}

Polygon random_strict_polygon(Rng& rng, std::size_t n, std::int64_t box) {
    std::vector<Point> points;
    points.reserve(n);
    while (points.size() < n) {
        int attempt = 0;
        Point p = random_point(rng, box);
        while (!extends_strictly(points, p)) {
            if (++attempt >= kPlacementAttempts)
                throw ExhaustionError("could not place a vertex in general position", attempt);
            p = random_point(rng, box);
        }
        points.push_back(p);
    }
    return Polygon(std::move(points));
}

bool in_box(Point p, std::int64_t box) {
    return p.x >= -box && p.x <= box && p.y >= -box && p.y <= box;
}

// Minimum objective, then lexicographically smallest flattened encoding.
bool better(std::uint64_t objective, const Polygon& candidate, std::uint64_t best_objective,
            const Polygon& best) {
    if (objective != best_objective) return objective < best_objective;
    return candidate.flattened() < best.flattened();
}

std::uint64_t objective_of(const Polygon& polygon, std::size_t k) {
    if (auto fast = strict_objective(polygon, k)) return *fast;
    return count_convex_subgons(polygon, k).count;
}

}  // namespace

Polygon seven_gon_without_convex_quadrilateral() {
    return Polygon{{-13, 0}, {15, 0}, {0, 16}, {18, 39}, {27, -15}, {10, 20}, {16, 30}};
}

Certificate verify_certificate(const Polygon& polygon, std::size_t k, std::uint64_t budget) {
    const auto count =
        count_convex_subgons(polygon, k, {.route = ConvexityRoute::oracle, .budget = budget});
    Certificate cert{polygon, k, polygon.size() + 1, count.count == 0, count.total, count.count};
    return cert;
}

FBoundRecord f_bounds(std::size_t k, std::span<const Certificate> certificates) {
    if (k < 1) throw InputError("F(k) is defined for k >= 1");
    FBoundRecord record;
    record.k = k;
    if (k <= 3) {
        record.lower = k;
        record.upper = k;
        record.lower_provenance = "a (k-1)-gon has no sub-k-gon";
        record.upper_provenance = "every polygon with at most 3 vertices is convex";
    } else if (k == 4) {
        const auto seven = verify_certificate(seven_gon_without_convex_quadrilateral(), 4);
        if (!seven.verified) throw std::logic_error("built-in 7-gon certificate failed verification");
        record.lower = seven.claimed_bound;
        record.lower_provenance = "explicit 7-gon with none of its 35 sub-4-gons convex";
        record.upper = 13;
        record.upper_provenance =
            "R(4,4;3) = 13: every strict 13-gon has a convex sub-4-gon; perturbation extends this "
            "to all 13-gons";
    } else {
        record.lower = k;
        record.lower_provenance = "a (k-1)-gon has no sub-k-gon";
        record.symbolic_upper = "R(" + std::to_string(k) + ",13;4)";
    }

    for (const auto& cert : certificates) {
        if (cert.k != k || !cert.verified || cert.claimed_bound <= record.lower) continue;
        record.lower = cert.claimed_bound;
        record.lower_provenance = "verified certificate: " + std::to_string(cert.polygon.size()) +
                                  "-gon with no convex sub-" + std::to_string(k) + "-gon";
    }
    if (record.upper && record.lower > *record.upper)
        throw std::logic_error("lower bound exceeds upper bound for F(" + std::to_string(k) + ")");
    return record;
}

void validate(const SearchConfig& config) {
    if (config.n < 1) throw InputError("search needs n >= 1");
    if (config.k < 1 || config.k > config.n) throw InputError("search needs 1 <= k <= n");
    if (config.box < 1 || config.box > kCoordBound)
        throw InputError("search box must lie in [1, 10^9]");
    if (config.max_iterations < 1 || config.restarts < 1)
        throw InputError("iterations and restarts must be positive");
    if (!(config.initial_temperature > 0.0)) throw InputError("temperature must be positive");
    if (!(config.decay > 0.0 && config.decay <= 1.0))
        throw InputError("temperature decay must lie in (0, 1]");
    if (config.radius < 1) throw InputError("move radius must be positive");
    if (config.workers < 1) throw InputError("at least one worker is required");
    if (config.initial) {
        if (config.initial->size() != config.n)
            throw InputError("initial polygon must have n vertices");
        if (!is_strict(*config.initial)) throw InputError("initial polygon must be strict");
    }
}

std::optional<std::uint64_t> strict_objective(const Polygon& polygon, std::size_t k) {
    const auto n = polygon.size();
    std::vector<TripleColor> colors;
    colors.reserve(binomial(n, 3));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l) {
                const auto d = delta(polygon[i], polygon[j], polygon[l]);
                if (d == 0) return std::nullopt;
                colors.push_back(d > 0 ? TripleColor::good : TripleColor::bad);
            }
    if (k > n) return 0;
    return count_totally_monochromatic(TripleColoring(n, colors), k);
}

std::uint64_t restart_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (index + 1));
    return splitmix64(state);
}

RestartOutcome anneal_restart(const SearchConfig& config, std::uint64_t index, bool record_trace) {
    Rng rng(restart_seed(config.seed, index));
    Polygon current = (index == 0 && config.initial)
                          ? *config.initial
                          : random_strict_polygon(rng, config.n, config.box);
    std::uint64_t current_objective = *strict_objective(current, config.k);

    RestartOutcome outcome{current, current_objective, 0, {}};
    std::vector<Point> trial(current.begin(), current.end());
    double temperature = config.initial_temperature;

    for (std::uint64_t it = 0; it < config.max_iterations && outcome.objective > 0; ++it) {
        ++outcome.iterations;
        const auto v = rng.index(config.n);
        const Point moved{trial[v].x + rng.uniform(-config.radius, config.radius),
                          trial[v].y + rng.uniform(-config.radius, config.radius)};
        const double u = rng.unit();

        if (in_box(moved, config.box)) {
            const Point saved = trial[v];
            trial[v] = moved;
            Polygon candidate(trial);
            const auto objective = strict_objective(candidate, config.k);
            bool accept = false;
            if (objective) {
                if (*objective <= current_objective) {
                    accept = true;
                } else {
                    const double rise = static_cast<double>(*objective - current_objective);
                    accept = u < std::exp(-rise / temperature);
                }
            }
            if (accept) {
                current = std::move(candidate);
                current_objective = *objective;
                if (better(current_objective, current, outcome.objective, outcome.best)) {
                    outcome.best = current;
                    outcome.objective = current_objective;
                }
            } else {
                trial[v] = saved;
            }
        }
        temperature *= config.decay;
        if (record_trace) outcome.trace.push_back(outcome.objective);
    }
    return outcome;
}

SearchResult search_extremal(const SearchConfig& config) {
    validate(config);

    std::vector<std::optional<RestartOutcome>> outcomes(config.restarts);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (auto r = next++; r < config.restarts; r = next++) outcomes[r] = anneal_restart(config, r);
    };
    const auto workers = static_cast<unsigned>(
        std::min<std::uint64_t>(config.workers, config.restarts));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    SearchResult result{outcomes[0]->best, outcomes[0]->objective, std::nullopt, 0, {}};
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        const auto& o = *outcomes[r];
        result.restart_objectives.push_back(o.objective);
        if (r > 0 && better(o.objective, o.best, result.objective, result.best)) {
            result.best = o.best;
            result.objective = o.objective;
            result.best_restart = r;
        }
    }

    const auto recount = count_convex_subgons(result.best, config.k).count;
    if (recount != result.objective)
        throw std::logic_error("search objective disagrees with an exhaustive recount");
    if (result.objective == 0) result.certificate = verify_certificate(result.best, config.k);
    return result;
}

std::optional<Polygon> grow(const Polygon& polygon, const SearchConfig& config) {
    if (!verify_certificate(polygon, config.k).verified)
        throw PreconditionError("grow needs a verified certificate as input");
    if (config.box < 1 || config.box > kCoordBound)
        throw InputError("search box must lie in [1, 10^9]");

    std::int64_t box = config.box;
    for (const auto& p : polygon) box = std::max({box, std::abs(p.x), std::abs(p.y)});
    const bool keep_strict = is_strict(polygon);

    Rng rng(config.seed);
    std::vector<Point> base(polygon.begin(), polygon.end());
    for (std::uint64_t round = 0; round < config.max_iterations; ++round) {
        for (std::size_t pos = 0; pos <= base.size(); ++pos) {
            const Point p = random_point(rng, box);
            if (keep_strict && !extends_strictly(base, p)) continue;
            auto vertices = base;
            vertices.insert(vertices.begin() + static_cast<std::ptrdiff_t>(pos), p);
            Polygon candidate(std::move(vertices));
            if (objective_of(candidate, config.k) != 0) continue;
            if (verify_certificate(candidate, config.k).verified) return candidate;
        }
    }
    return std::nullopt;
}

}  // namespace eszk
