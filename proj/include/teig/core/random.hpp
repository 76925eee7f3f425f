#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace teig {

using cplx = std::complex<double>;

/// Seeded source of uniform samples. The mapping from engine bits to doubles is
/// fixed here (53-bit mantissa) so sample streams do not depend on the standard
/// library's distribution implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Real and imaginary parts independently uniform on [-1, 1).
    cplx complex_unit_square() {
        const double re = uniform(-1.0, 1.0);
        const double im = uniform(-1.0, 1.0);
        return {re, im};
    }

    /// Uniform in the closed unit disk (rejection sampling).
    cplx complex_unit_disk() {
        for (;;) {
            const cplx z = complex_unit_square();
            if (std::norm(z) <= 1.0) return z;
        }
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace teig
