#pragma once

#include <complex>
#include <stdexcept>

namespace mero {

/// Value together with first and second derivatives with respect to z.
/// Propagating jets through the closed-form member representations gives
/// pointwise f, f', f'' without numerical differentiation.
struct Jet {
    std::complex<double> v{0.0};
    std::complex<double> d1{0.0};
    std::complex<double> d2{0.0};

    static Jet seed(std::complex<double> z) { return Jet{z, 1.0, 0.0}; }
    static Jet constant(std::complex<double> c) { return Jet{c, 0.0, 0.0}; }
};

inline Jet operator+(const Jet& a, const Jet& b) { return Jet{a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet operator-(const Jet& a, const Jet& b) { return Jet{a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet operator-(const Jet& a) { return Jet{-a.v, -a.d1, -a.d2}; }

inline Jet operator*(const Jet& a, const Jet& b) {
    return Jet{a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

inline Jet operator*(std::complex<double> s, const Jet& a) { return Jet{s * a.v, s * a.d1, s * a.d2}; }

inline Jet operator/(const Jet& a, const Jet& b) {
    if (b.v == std::complex<double>(0.0))
        throw std::domain_error("jet division by zero value");
    const std::complex<double> q = a.v / b.v;
    const std::complex<double> q1 = (a.d1 - q * b.d1) / b.v;
    const std::complex<double> q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.v;
    return Jet{q, q1, q2};
}

inline Jet operator+(const Jet& a, std::complex<double> c) { return Jet{a.v + c, a.d1, a.d2}; }
inline Jet operator+(std::complex<double> c, const Jet& a) { return a + c; }
inline Jet operator-(std::complex<double> c, const Jet& a) { return Jet{c - a.v, -a.d1, -a.d2}; }

}  // namespace mero
