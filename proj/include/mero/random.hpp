#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace mero {

/// Seeded generator with hand-rolled distributions. std:: distributions
/// are implementation-defined, so every sampled value here goes through
/// the raw engine to keep runs reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t seed, std::uint64_t stream)
        : engine_(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {}

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Area-uniform point in the closed disk of the given radius.
    std::complex<double> unit_disk(double radius) {
        const double r = radius * std::sqrt(uniform());
        const double a = uniform(0.0, 2.0 * std::numbers::pi);
        return std::polar(r, a);
    }

    std::complex<double> unimodular() {
        return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace mero
