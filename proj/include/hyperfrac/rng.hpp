#pragma once

#include <cstdint>

#include "hyperfrac/rational.hpp"

namespace hyperfrac {

/// splitmix64: tiny deterministic stream, stable across platforms. Trial
/// streams are derived from (seed, index) so fan-out order never matters.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// uniform in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mix(seed ^ (0x5851f42d4c957f2dull * (index + 1)));
        mix.next();
        return mix;
    }
};

/// Uniform dyadic rational in [0, 1) with denominator 2^30.
inline Rational uniform_unit(SplitMix64& rng) {
    return Rational(static_cast<std::int64_t>(rng.next() >> 34), std::int64_t{1} << 30);
}

/// Uniform dyadic rational in [-1, 1].
inline Rational uniform_symmetric(SplitMix64& rng) {
    return Rational(static_cast<std::int64_t>(rng.next() >> 34) * 2 - (std::int64_t{1} << 30),
                    std::int64_t{1} << 30);
}

}  // namespace hyperfrac
