#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mero/coefficients.hpp"
#include "mero/report.hpp"

namespace mero {

inline constexpr double kGoldenThreshold = 0.61803398874989484820;  // (sqrt 5 - 1)/2
inline constexpr double kSqrt3Threshold = 0.73205080756887729353;   // sqrt 3 - 1

/// Disk of the n-th Taylor coefficient over Co(p):
/// |A_n - (1-p^{2n+2})/(p^{n-1}(1-p^4))| <= p^2 (1-p^{2n-2})/(p^{n-1}(1-p^4)).
/// Equality exactly on the rotation family f_theta.
inline double theorem_a_center(double p, int n) {
    return (1.0 - std::pow(p, 2 * n + 2)) / (std::pow(p, n - 1) * (1.0 - std::pow(p, 4)));
}

inline double theorem_a_radius(double p, int n) {
    return p * p * (1.0 - std::pow(p, 2 * n - 2)) / (std::pow(p, n - 1) * (1.0 - std::pow(p, 4)));
}

inline InequalityReport check_theoremA(const CoefficientVector& taylor, int n, double p) {
    if (n < 2) throw std::invalid_argument("check_theoremA: n must be >= 2");
    const double lhs = std::abs(taylor.at(n) - Complex(theorem_a_center(p, n)));
    return InequalityReport::upper("theoremA", lhs, theorem_a_radius(p, n), p).with_n(n);
}

/// Residue disk over Co(p): |a_-1 + p^2/(1-p^4)| <= p^4/(1-p^4).
inline InequalityReport check_wirths_am1(Complex am1, double p) {
    const double p4 = std::pow(p, 4);
    const double lhs = std::abs(am1 + Complex(p * p / (1.0 - p4)));
    return InequalityReport::upper("wirths_am1", lhs, p4 / (1.0 - p4), p);
}

/// a_0 disk over Co(p), stated for p <= sqrt(3) - 1:
/// |(1-p^2) a_0 / p + (1-p^2+p^4)/(1-p^4)| <= p^2 (2-p^2)/(1-p^4).
inline InequalityReport check_bpw_a0(Complex a0, double p) {
    const double p2 = p * p;
    const double p4 = p2 * p2;
    const double lhs = std::abs((1.0 - p2) * a0 / p + Complex((1.0 - p2 + p4) / (1.0 - p4)));
    return InequalityReport::upper("bpw_a0", lhs, p2 * (2.0 - p2) / (1.0 - p4), p)
        .flag_range(p <= kSqrt3Threshold, "p > sqrt(3)-1");
}

/// |a_-1 - (1-p^2) a_0 / p| <= 1, stated for p <= (sqrt 5 - 1)/2.
inline InequalityReport check_thm1(Complex am1, Complex a0, double p) {
    const double lhs = std::abs(am1 - (1.0 - p * p) * a0 / p);
    return InequalityReport::upper("thm1", lhs, 1.0, p)
        .flag_range(p <= kGoldenThreshold, "p > (sqrt(5)-1)/2");
}

/// Tail recurrence bound for n >= 3:
/// |a_{n-2} - (1-p^2) a_{n-1}/p|
///   <= p/((1-p^4)(1-p)^{n-1}) [1 - ((1-p^4)/p^4)^2 |a_-1 + p^2/(1-p^4)|^2].
/// Both sides vanish on the rotation family.
inline InequalityReport check_thm2(const CoefficientVector& laurent, int n, double p) {
    if (n < 3) throw std::invalid_argument("check_thm2: n must be >= 3");
    const double p4 = std::pow(p, 4);
    const double lhs = std::abs(laurent.at(n - 2) - (1.0 - p * p) * laurent.at(n - 1) / p);
    const double dev = std::abs(laurent.at(-1) + Complex(p * p / (1.0 - p4)));
    const double scaled = (1.0 - p4) / p4 * dev;
    const double rhs = p / ((1.0 - p4) * std::pow(1.0 - p, n - 1)) * (1.0 - scaled * scaled);
    return InequalityReport::upper("thm2", lhs, rhs, p).with_n(n);
}

/// Admissible starlike centers: the disk
/// |w0 + p(1+p^2)/(1-p^2)^2| <= 2p^2/(1-p^2)^2 together with the modulus
/// band p/(1+p)^2 <= |w0| <= p/(1-p)^2.
struct W0DiskReport {
    InequalityReport disk;
    InequalityReport modulus_lower;
    InequalityReport modulus_upper;
};

inline W0DiskReport check_w0_disk(Complex w0, double p) {
    if (w0 == Complex(0.0)) throw std::invalid_argument("check_w0_disk: w0 must be nonzero");
    const double t = 1.0 - p * p;
    const double disk_lhs = std::abs(w0 + Complex(p * (1.0 + p * p) / (t * t)));
    return W0DiskReport{
        InequalityReport::upper("w0_disk", disk_lhs, 2.0 * p * p / (t * t), p),
        InequalityReport::lower("w0_mod_lower", std::abs(w0), p / ((1.0 + p) * (1.0 + p)), p),
        InequalityReport::upper("w0_mod_upper", std::abs(w0), p / ((1.0 - p) * (1.0 - p)), p),
    };
}

/// The Schwarz-Pick contraction of |omega(p)| used by the residue bound:
/// K = (s + 2p^2)/(2 + s), s = |p/w0 + p^2 + 1|; K <= p for admissible w0.
inline double thm6_contraction(Complex w0, double p) {
    const double s = std::abs(p / w0 + Complex(p * p + 1.0));
    return (s + 2.0 * p * p) / (2.0 + s);
}

struct Thm6iReport {
    InequalityReport main;       // |a_-1 - p w0/(1-p^2)| <= (p|w0|/(1-p^2)) K (K+2)
    InequalityReport weakened;   // same lhs, bound (p^2/(1-p^2))(p+2)|w0| via K <= p
    InequalityReport k_bound;    // K <= p
};

inline Thm6iReport check_thm6_i(Complex am1, Complex w0, double p) {
    const double t = 1.0 - p * p;
    const double lhs = std::abs(am1 - p * w0 / t);
    const double k = thm6_contraction(w0, p);
    return Thm6iReport{
        InequalityReport::upper("thm6_i", lhs, p * std::abs(w0) / t * k * (k + 2.0), p),
        InequalityReport::upper("thm6_i_weak", lhs, p * p / t * (p + 2.0) * std::abs(w0), p),
        InequalityReport::upper("k_le_p", k, p, p),
    };
}

/// |a_0 - (1-p^2+p^4) w0/(1-p^2)^2| <= p(2+2p-p^3)|w0|/(1-p^2)^2,
/// stated for p <= (sqrt 5 - 1)/2.
inline InequalityReport check_thm6_ii(Complex a0, Complex w0, double p) {
    const double p2 = p * p;
    const double t = 1.0 - p2;
    const double lhs = std::abs(a0 - (1.0 - p2 + p2 * p2) * w0 / (t * t));
    const double rhs = p * (2.0 + 2.0 * p - p * p2) * std::abs(w0) / (t * t);
    return InequalityReport::upper("thm6_ii", lhs, rhs, p)
        .flag_range(p <= kGoldenThreshold, "p > (sqrt(5)-1)/2");
}

struct DerivedBoundsReport {
    InequalityReport residue;  // |a_-1| <= p(1+p)|w0|/(1-p), all p
    InequalityReport a0;       // |a_0| <= |w0|/(1-p)^2, p <= (sqrt 5 - 1)/2
};

inline DerivedBoundsReport check_derived_bounds(Complex am1, Complex a0, Complex w0, double p) {
    return DerivedBoundsReport{
        InequalityReport::upper("derived_am1", std::abs(am1), p * (1.0 + p) * std::abs(w0) / (1.0 - p), p),
        InequalityReport::upper("derived_a0", std::abs(a0),
                                std::abs(w0) / ((1.0 - p) * (1.0 - p)), p)
            .flag_range(p <= kGoldenThreshold, "p > (sqrt(5)-1)/2"),
    };
}

/// Corrected residue lower bound: |a_-1| >= p(1-p)|w0|/(1+p).
/// Reversed orientation: margin = lhs - rhs.
inline InequalityReport check_thm7_lower(Complex am1, Complex w0, double p) {
    return InequalityReport::lower("thm7_lower", std::abs(am1),
                                   p * (1.0 - p) * std::abs(w0) / (1.0 + p), p);
}

/// The superseded version of the residue lower bound, kept only to
/// reproduce its failure: the erratum reverses an inequality in its
/// derivation, which flips the factor to (1+p)/(1-p). It is wrong; the
/// pair (g, w0 = -p/(1+p^2)) gives a negative margin for every p.
/// @deprecated Use check_thm7_lower; this checker exists as a regression
/// witness for the correction.
inline InequalityReport check_livingston_original(Complex am1, Complex w0, double p) {
    return InequalityReport::lower("livingston_original", std::abs(am1),
                                   p * (1.0 + p) * std::abs(w0) / (1.0 - p), p);
}

struct ScalarMax {
    double x_m;        // interior stationary point (may exceed 1)
    double max_value;  // max over [0,1]
};

/// R_p(x) = p(1-x^2) + 2(1-p^2)x on [0,1]; stationary at x_m = (1-p^2)/p.
/// For p <= (sqrt 5 - 1)/2 the maximum sits at the endpoint, R_p(1) = 2(1-p^2).
inline ScalarMax rp_max(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("rp_max: p must lie in (0,1)");
    const double xm = (1.0 - p * p) / p;
    const double x = std::min(xm, 1.0);
    return ScalarMax{xm, p * (1.0 - x * x) + 2.0 * (1.0 - p * p) * x};
}

/// Q_p(x) = 2p + 2x + 2p^2 x - 2p^2 x^3 - p^3 x^2 on [0,1]; stationary at
/// x_m = (-p^2 + sqrt(p^4 + 12(1+p^2)))/(6p). For p <= (sqrt 5 - 1)/2 the
/// maximum is Q_p(1) = 2 + 2p - p^3.
inline ScalarMax qp_max(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("qp_max: p must lie in (0,1)");
    const double p2 = p * p;
    const double xm = (-p2 + std::sqrt(p2 * p2 + 12.0 * (1.0 + p2))) / (6.0 * p);
    const double x = std::min(xm, 1.0);
    return ScalarMax{xm, 2.0 * p + 2.0 * x + 2.0 * p2 * x - 2.0 * p2 * x * x * x - p * p2 * x * x};
}

}  // namespace mero
