#pragma once

#include <cstdint>

namespace xisb {

/// Counter-based generator: output i depends only on (seed, i), so streams
/// are reproducible, mergeable, and cheap to split for parallel draws.
struct SamplerState {
    std::uint64_t seed = 0;
    std::uint64_t counter = 0;

    explicit SamplerState(std::uint64_t seed_in = 0) : seed(seed_in) {}

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t next() {
        ++counter;
        return mix(seed + counter * 0x9E3779B97F4A7C15ull);
    }

    /// Independent stream derived from this state's seed; does not advance
    /// this state.
    SamplerState split(std::uint64_t stream) const {
        return SamplerState(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ull)));
    }

    /// Uniform on the open interval (0, 1): 53 significant bits, never 0 or 1.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }
};

} // namespace xisb
