#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace hodgepsh {

// SplitMix64. Chosen over the <random> engines because the per-trial seed derivation
// and the uniform mapping below must be reproducible across implementations.
class SplitMix64 {
public:
    using result_type = std::uint64_t;
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t operator()() {
        state_ += kGolden;
        return finalize(state_);
    }
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    // (x >> 11) * 2^-53: uniform on [0, 1) with 53 significant bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform in the closed disc of the given radius (area measure).
    std::complex<double> in_disc(double radius) {
        const double r = radius * std::sqrt(uniform());
        const double theta = 2.0 * std::numbers::pi * uniform();
        return std::polar(r, theta);
    }

private:
    std::uint64_t state_;
};

// Seed of trial i under a master seed: finalize(master + (i + 1) * golden).
constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    return SplitMix64::finalize(master + (index + 1) * SplitMix64::kGolden);
}

}  // namespace hodgepsh
