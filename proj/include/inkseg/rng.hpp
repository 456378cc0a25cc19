#pragma once

// Reproducible randomness for the corpus generator. Bits come from
// std::mt19937_64, whose output sequence the standard fixes exactly; the
// floating-point transforms are written out here because the standard
// distributions are implementation-defined.

#include <cstdint>
#include <random>

namespace inkseg {

/// SplitMix64 finalizer, used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for stream `stream` of a run seeded with `seed`; lets every sample draw
/// from its own stream so generation order cannot change the output.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);
    /// Standard normal by the Marsaglia polar method.
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace inkseg
