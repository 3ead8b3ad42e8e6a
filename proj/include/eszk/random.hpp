#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace eszk {

// Standard distributions are implementation-defined, so draws are done by
// hand on top of mt19937_64 to keep seeded runs identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t draw = next();
        while (draw >= limit) draw = next();
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
    }

    std::size_t index(std::size_t size) {
        return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(size) - 1));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace eszk
