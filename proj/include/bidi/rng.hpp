#pragma once

#include <cstdint>

namespace bidi {

// SplitMix64, the single seeded generator used everywhere results must be
// reproducible (pair sampling, synthetic test graphs). The update function
// is the one from Java's SplittableRandom; given the same seed it produces
// the same stream on every platform and compiler.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Bounded draw via the high 64 bits of a 128-bit product. Bias is
    // below 2^-64 per draw and the mapping is fully deterministic.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace bidi
