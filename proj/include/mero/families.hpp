#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mero/jet.hpp"
#include "mero/schur.hpp"
#include "mero/series.hpp"

namespace mero {

enum class Family { concave, starlike };

/// Polar evaluation grid over the disk. The small puncture around the
/// pole is evaluated through the analytic continuation of the membership
/// field instead of the raw quotient, which is 0/inf there.
struct GridSpec {
    int radii = 48;
    int angles = 96;
    double max_radius = 0.995;
    double puncture_factor = 0.02;  // puncture radius = factor * (1 - p)
};

struct MembershipReport {
    double min_re = 0.0;
    Complex argmin{0.0};
    bool member = false;
    bool hard_failure = false;
    std::string note;
    int evaluated = 0;
    int through_series = 0;
};

/// The value omega must take at the origin so that f'(0) = 1 holds in
/// the starlike representation.
inline Complex pinned_value(double p, Complex w0) {
    return -0.5 * (1.0 / w0 + p + 1.0 / p);
}

/// Inverse of pinned_value: the omitted point that pins omega(0) = a.
inline Complex w0_from_omega0(double p, Complex a) {
    return -p / (2.0 * a * p + p * p + 1.0);
}

inline Complex w0_lower(double p) { return -p / ((1.0 + p) * (1.0 + p)); }
inline Complex w0_upper(double p) { return -p / ((1.0 - p) * (1.0 - p)); }
inline Complex w0_counter(double p) { return -p / (1.0 + p * p); }

/// A constructed member of Co(p) or Sigma^s(p, w0): the generator, both
/// cached expansions, and (when requested at build time) the membership
/// grid report.
struct MemberFunction {
    Family family;
    double p;
    Complex w0;  // starlike only
    SchurGenerator generator;
    LaurentExpansion laurent;
    TruncatedSeries taylor;
    std::optional<MembershipReport> membership;
};

namespace detail {

inline void require_p(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
}

inline TruncatedSeries padded(Complex center, std::vector<Complex> low, int order) {
    low.resize(static_cast<std::size_t>(order) + 1, Complex(0.0));
    return TruncatedSeries(center, std::move(low));
}

/// 1 / (1 - q w) about the pole, q = p/(1-p^2).
inline TruncatedSeries pole_factor_inverse(double p, int order) {
    const Complex center(p);
    const double q = p / (1.0 - p * p);
    return series_div(TruncatedSeries::constant(center, 1.0, order),
                      padded(center, {1.0, -q}, order));
}

/// Taylor kernel of 1/((1 - z/p)(1 - zp)) about 0 by exact partial
/// fractions: r_k = (p^{-k} - p^{k+2})/(1 - p^2).
inline TruncatedSeries reciprocal_pair_kernel(double p, int order) {
    std::vector<Complex> r(static_cast<std::size_t>(order) + 1);
    const double denom = 1.0 - p * p;
    double p_pow = 1.0;     // p^k
    double p_inv_pow = 1.0; // p^-k
    for (int k = 0; k <= order; ++k) {
        r[static_cast<std::size_t>(k)] = (p_inv_pow - p_pow * p * p) / denom;
        p_pow *= p;
        p_inv_pow /= p;
    }
    return TruncatedSeries(Complex(0.0), std::move(r));
}

inline LaurentExpansion concave_laurent(double p, const SchurGenerator& gen, int order) {
    const Complex center(p);
    const int work = order + 1;
    const double beta = p / (1.0 + p * p);
    const TruncatedSeries omega = gen.expand(center, work);
    const TruncatedSeries z2 = recenter_polynomial(std::vector<Complex>{0.0, 0.0, 1.0}, center, work);
    const TruncatedSeries numer =
        recenter_polynomial(std::vector<Complex>{0.0, 1.0, -beta}, center, work) -
        Complex(beta) * (z2 * omega);
    const TruncatedSeries t =
        Complex(-p / (1.0 - p * p)) * (numer * pole_factor_inverse(p, work));
    return laurent_from_over_w(t);
}

inline TruncatedSeries concave_taylor(double p, const SchurGenerator& gen, int order) {
    const Complex origin(0.0);
    const double beta = p / (1.0 + p * p);
    const TruncatedSeries omega = gen.expand(origin, order);
    const TruncatedSeries z2 = padded(origin, {0.0, 0.0, 1.0}, order);
    const TruncatedSeries numer =
        padded(origin, {0.0, 1.0, -beta}, order) - Complex(beta) * (z2 * omega);
    return numer * reciprocal_pair_kernel(p, order);
}

inline LaurentExpansion starlike_laurent(double p, Complex w0, const SchurGenerator& gen, int order) {
    const Complex center(p);
    const int work = order + 1;
    const TruncatedSeries omega = gen.expand(center, work);
    const TruncatedSeries bracket =
        TruncatedSeries::constant(center, 1.0, work) + TruncatedSeries::identity(center, work) * omega;
    const TruncatedSeries t =
        (p * w0 / (1.0 - p * p)) * ((bracket * bracket) * pole_factor_inverse(p, work));
    LaurentExpansion base = laurent_from_over_w(t);
    std::vector<Complex> tail(base.tail().coeffs().begin(), base.tail().coeffs().end());
    tail[0] += w0;
    return LaurentExpansion(p, base.principal(), TruncatedSeries(center, std::move(tail)));
}

inline TruncatedSeries starlike_taylor(double p, Complex w0, const SchurGenerator& gen, int order) {
    const Complex origin(0.0);
    const TruncatedSeries omega = gen.expand(origin, order);
    const TruncatedSeries bracket =
        TruncatedSeries::constant(origin, 1.0, order) + TruncatedSeries::identity(origin, order) * omega;
    // 1/((z-p)(1-zp)) = -(1/p) * reciprocal-pair kernel.
    const TruncatedSeries t =
        TruncatedSeries::constant(origin, w0, order) -
        Complex(w0) * ((bracket * bracket) * reciprocal_pair_kernel(p, order));
    return t;
}

inline void check_normalization(const TruncatedSeries& taylor) {
    if (std::abs(taylor.coeff(0)) > 1e-10 || std::abs(taylor.coeff(1) - 1.0) > 1e-10)
        throw std::logic_error("member normalization f(0)=0, f'(0)=1 violated");
}

}  // namespace detail

/// Pointwise value of a member through the closed-form representation.
inline Complex evaluate(const MemberFunction& f, Complex z) {
    const double p = f.p;
    const Complex w = f.generator.eval(z);
    if (f.family == Family::concave) {
        const double beta = p / (1.0 + p * p);
        return (z - beta * (1.0 + w) * z * z) / ((1.0 - z / p) * (1.0 - z * p));
    }
    const Complex bracket = 1.0 + z * w;
    return f.w0 + p * f.w0 * bracket * bracket / ((z - p) * (1.0 - z * p));
}

/// (f, f', f'') of a member at z. Unusable at the pole; grid code routes
/// the puncture through the series continuation instead.
inline Jet evaluate_jet(const MemberFunction& f, Complex z) {
    const double p = f.p;
    const Jet zj = Jet::seed(z);
    const Jet omega = f.generator.eval_jet(z);
    if (f.family == Family::concave) {
        const double beta = p / (1.0 + p * p);
        const Jet numer = zj - Complex(beta) * ((Jet::constant(1.0) + omega) * (zj * zj));
        const Jet denom = (Jet::constant(1.0) - Complex(1.0 / p) * zj) * (Jet::constant(1.0) - Complex(p) * zj);
        return numer / denom;
    }
    const Jet bracket = Jet::constant(1.0) + zj * omega;
    const Jet denom = (zj - Jet::constant(p)) * (Jet::constant(1.0) - Complex(p) * zj);
    return Jet::constant(f.w0) + Complex(p * f.w0) * ((bracket * bracket) / denom);
}

/// Taylor series in (z - p) of the concave membership field
///   phi(z) = -(1+p^2) + 2pz - (z-p)(1-pz) f''/f',
/// which extends analytically across the pole with phi(p) = 1 - p^2.
inline TruncatedSeries phi_series(const LaurentExpansion& laurent, int order = 12) {
    const double p = laurent.pole();
    const Complex center(p);
    order = std::min(order, laurent.order());
    std::vector<Complex> num(static_cast<std::size_t>(order) + 1, Complex(0.0));
    std::vector<Complex> den(static_cast<std::size_t>(order) + 1, Complex(0.0));
    num[0] = 2.0 * laurent.principal();
    den[0] = -laurent.principal();
    for (int j = 2; j <= order; ++j) {
        const Complex a = laurent.coeff(j - 1);
        num[static_cast<std::size_t>(j)] = static_cast<double>((j - 1) * (j - 2)) * a;
        den[static_cast<std::size_t>(j)] = static_cast<double>(j - 1) * a;
    }
    const TruncatedSeries ratio = series_div(TruncatedSeries(center, std::move(num)),
                                             TruncatedSeries(center, std::move(den)));
    const TruncatedSeries lin = detail::padded(center, {1.0 - p * p, -p}, order);
    return detail::padded(center, {p * p - 1.0, 2.0 * p}, order) - lin * ratio;
}

/// Same continuation for the starlike field
///   psi(z) = -(z-p)(1-pz) f' / (f - w0),  psi(p) = 1 - p^2.
inline TruncatedSeries psi_series(const LaurentExpansion& laurent, Complex w0, int order = 12) {
    const double p = laurent.pole();
    const Complex center(p);
    order = std::min(order, laurent.order());
    std::vector<Complex> num(static_cast<std::size_t>(order) + 1, Complex(0.0));
    std::vector<Complex> den(static_cast<std::size_t>(order) + 1, Complex(0.0));
    num[0] = -laurent.principal();
    den[0] = laurent.principal();
    den[1] = laurent.coeff(0) - w0;
    for (int j = 2; j <= order; ++j) {
        const Complex a = laurent.coeff(j - 1);
        num[static_cast<std::size_t>(j)] = static_cast<double>(j - 1) * a;
        den[static_cast<std::size_t>(j)] = a;
    }
    const TruncatedSeries ratio = series_div(TruncatedSeries(center, std::move(num)),
                                             TruncatedSeries(center, std::move(den)));
    const TruncatedSeries lin = detail::padded(center, {1.0 - p * p, -p}, order);
    return -(lin * ratio);
}

/// phi at a single point, switching to the series continuation inside
/// the pole puncture.
inline Complex phi_field(const MemberFunction& f, Complex z, double puncture_factor = 0.02) {
    if (f.family != Family::concave) throw std::invalid_argument("phi_field needs a concave member");
    const double p = f.p;
    if (std::abs(z - Complex(p)) < puncture_factor * (1.0 - p))
        return phi_series(f.laurent).evaluate(z);
    const Jet fj = evaluate_jet(f, z);
    return -(1.0 + p * p) + 2.0 * p * z - (z - p) * (1.0 - p * z) * (fj.d2 / fj.d1);
}

inline Complex psi_field(const MemberFunction& f, Complex z, double puncture_factor = 0.02) {
    if (f.family != Family::starlike) throw std::invalid_argument("psi_field needs a starlike member");
    const double p = f.p;
    if (std::abs(z - Complex(p)) < puncture_factor * (1.0 - p))
        return psi_series(f.laurent, f.w0).evaluate(z);
    const Jet fj = evaluate_jet(f, z);
    return -(z - p) * (1.0 - p * z) * fj.d1 / (fj.v - f.w0);
}

namespace detail {

template <typename PointField>
MembershipReport grid_minimum(const MemberFunction& f, const GridSpec& grid, PointField&& field) {
    MembershipReport report;
    report.min_re = std::numeric_limits<double>::infinity();
    const double puncture = grid.puncture_factor * (1.0 - f.p);
    const TruncatedSeries continuation =
        (f.family == Family::concave) ? phi_series(f.laurent) : psi_series(f.laurent, f.w0);
    for (int i = 0; i < grid.radii; ++i) {
        const double r = grid.max_radius * static_cast<double>(i + 1) / grid.radii;
        for (int j = 0; j < grid.angles; ++j) {
            const double a = 2.0 * std::numbers::pi * j / grid.angles;
            const Complex z = std::polar(r, a);
            Complex value;
            if (std::abs(z - Complex(f.p)) < puncture) {
                value = continuation.evaluate(z);
                ++report.through_series;
            } else {
                value = field(z, report);
                if (report.hard_failure) {
                    report.argmin = z;
                    report.member = false;
                    return report;
                }
            }
            ++report.evaluated;
            if (value.real() < report.min_re) {
                report.min_re = value.real();
                report.argmin = z;
            }
        }
    }
    report.member = report.min_re > -1e-8;
    return report;
}

}  // namespace detail

/// Minimum of Re phi over the grid; membership iff it clears -1e-8.
inline MembershipReport verify_concave(const MemberFunction& f, const GridSpec& grid = {}) {
    if (f.family != Family::concave) throw std::invalid_argument("verify_concave needs a concave member");
    const double p = f.p;
    return detail::grid_minimum(f, grid, [&](Complex z, MembershipReport& rep) -> Complex {
        const Jet fj = evaluate_jet(f, z);
        if (std::abs(fj.d1) < 1e-12) {
            rep.hard_failure = true;
            rep.note = "f' vanishes on the grid (univalence violated)";
            return Complex(0.0);
        }
        return -(1.0 + p * p) + 2.0 * p * z - (z - p) * (1.0 - p * z) * (fj.d2 / fj.d1);
    });
}

/// Minimum of Re psi over the grid.
inline MembershipReport verify_starlike(const MemberFunction& f, const GridSpec& grid = {}) {
    if (f.family != Family::starlike) throw std::invalid_argument("verify_starlike needs a starlike member");
    const double p = f.p;
    return detail::grid_minimum(f, grid, [&](Complex z, MembershipReport& rep) -> Complex {
        const Jet fj = evaluate_jet(f, z);
        if (std::abs(fj.v - f.w0) < 1e-12 * std::max(1.0, std::abs(f.w0))) {
            rep.hard_failure = true;
            rep.note = "f(z) = w0 on the grid (singular denominator)";
            return Complex(0.0);
        }
        return -(z - p) * (1.0 - p * z) * fj.d1 / (fj.v - f.w0);
    });
}

/// Member of Co(p) from a generator. Membership is verified on the grid
/// and flagged, never rejected: the representation is necessary, and
/// whether every generator yields a member is left to measurement.
inline MemberFunction build_concave(double p, SchurGenerator gen, int order = kDefaultOrder,
                                    bool verify = true, const GridSpec& grid = {}) {
    detail::require_p(p);
    LaurentExpansion laurent = detail::concave_laurent(p, gen, order);
    TruncatedSeries taylor = detail::concave_taylor(p, gen, order);
    detail::check_normalization(taylor);
    MemberFunction f{Family::concave, p,           Complex(0.0), std::move(gen),
                     std::move(laurent), std::move(taylor), std::nullopt};
    if (verify) f.membership = verify_concave(f, grid);
    return f;
}

/// Member of Sigma^s(p, w0). The generator is the pinned composite of
/// the supplied inner map, so omega(0) carries exactly the value the
/// normalization requires. w0 outside its disk of admissible centers is
/// rejected with the violated inequality in the message.
inline MemberFunction build_starlike(double p, Complex w0, SchurGenerator inner,
                                     int order = kDefaultOrder, bool verify = true,
                                     const GridSpec& grid = {}) {
    detail::require_p(p);
    if (w0 == Complex(0.0)) throw std::invalid_argument("starlike center w0 must be nonzero");
    const Complex a = pinned_value(p, w0);
    if (std::abs(a) > 1.0 + 1e-12) {
        const double t = 1.0 - p * p;
        const double lhs = std::abs(w0 + p * (1.0 + p * p) / (t * t));
        const double rhs = 2.0 * p * p / (t * t);
        throw std::invalid_argument(
            "w0 outside the admissible disk: |w0 + p(1+p^2)/(1-p^2)^2| = " + std::to_string(lhs) +
            " > " + std::to_string(rhs) + " (|omega(0)| = " + std::to_string(std::abs(a)) + ")");
    }
    SchurGenerator gen = SchurGenerator::make_pinned(a, std::move(inner));
    LaurentExpansion laurent = detail::starlike_laurent(p, w0, gen, order);
    TruncatedSeries taylor = detail::starlike_taylor(p, w0, gen, order);
    detail::check_normalization(taylor);
    MemberFunction f{Family::starlike, p,           w0,          std::move(gen),
                     std::move(laurent),  std::move(taylor), std::nullopt};
    if (verify) f.membership = verify_starlike(f, grid);
    return f;
}

/// The rotation family attaining equality in the Taylor-coefficient
/// disk: the concave member with constant generator e^{i theta}.
inline MemberFunction extremal_ftheta(double p, double theta, int order = kDefaultOrder,
                                      bool verify = true, const GridSpec& grid = {}) {
    return build_concave(p, SchurGenerator::make_constant(std::polar(1.0, theta)), order, verify, grid);
}

}  // namespace mero
