#pragma once

#include <cstdint>

namespace commlab {

/// SplitMix64: output k is mix(seed + (k+1) * 0x9E3779B97F4A7C15), so the
/// stream is a pure function of (seed, position). This is the only source of
/// randomness in the library; Gaussians come from Box-Muller on its uniforms
/// so that streams are identical across standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal variate.
    double normal();

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// The SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

/// Sub-seed for trial `index` of a run with the given master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

} // namespace commlab
