#pragma once

#include <cstdint>

namespace localcap {

/// Deterministic, platform-independent generator (splitmix64 core).
/// Standard-library distributions are implementation-defined, so all
/// sampling used in results goes through this class to keep seeds
/// reproducible across compilers.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Poisson variate. Exact inversion-style product method below mean 10,
    /// transformed rejection (PTRS) above; both use only this generator's
    /// uniforms, so sequences are reproducible.
    std::uint64_t poisson(double mean);

  private:
    std::uint64_t state_;
};

/// Stable derivation of per-stream seeds from a base seed, used to hand
/// independent substreams to parallel workers.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace localcap
