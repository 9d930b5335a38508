#pragma once

#include <cstdint>

#include "scrollcalc/integer.hpp"

namespace scrollcalc {

// SplitMix64 stream. Fully specified here so that seeded runs are
// byte-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~0ull - ~0ull % n;
        std::uint64_t z = next();
        while (z >= limit) z = next();
        return z % n;
    }

    // Uniform integer in [-bound, bound].
    Integer coefficient(const Integer& bound) {
        const auto span = (2 * bound + 1).convert_to<std::uint64_t>();
        return Integer(below(span)) - bound;
    }

private:
    std::uint64_t state_;
};

// Per-stream seeds (one stream per sampling trial), so trials are
// reproducible individually and independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace scrollcalc
