#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mero/jet.hpp"
#include "mero/random.hpp"
#include "mero/report.hpp"
#include "mero/series.hpp"

namespace mero {

/// Holomorphic map of the unit disk into the closed unit disk.
///
/// Three shapes cover everything the representation formulas need:
/// a constant, a scaled Blaschke product, and the value-pinned composite
/// z -> mu_a(z * inner(z)) with mu_a(w) = (a + w)/(1 + conj(a) w), which
/// hits omega(0) = a exactly.
class SchurGenerator {
public:
    enum class Kind { constant, blaschke, pinned };

    static SchurGenerator make_constant(Complex lambda) {
        if (std::abs(lambda) > 1.0 + 1e-12)
            throw std::invalid_argument("constant generator needs |lambda| <= 1");
        return unchecked_constant(lambda);
    }

    static SchurGenerator make_blaschke(std::vector<Complex> zeros, double angle, double scale) {
        for (const Complex& z : zeros)
            if (std::abs(z) >= 1.0)
                throw std::invalid_argument("Blaschke zeros must lie in the open unit disk");
        if (scale < 0.0 || scale > 1.0)
            throw std::invalid_argument("Blaschke scale must lie in [0,1]");
        SchurGenerator g = unchecked_blaschke(std::move(zeros), angle, scale);
        g.check_boundary_guard();
        return g;
    }

    /// Composite with prescribed value at the origin. |a| = 1 collapses
    /// to the constant a by the maximum principle.
    static SchurGenerator make_pinned(Complex a, SchurGenerator inner) {
        const double mod = std::abs(a);
        if (mod > 1.0 + 1e-12)
            throw std::invalid_argument("pinned value needs |a| <= 1");
        if (mod >= 1.0 - 1e-12) return unchecked_constant(a / mod);
        SchurGenerator g;
        g.kind_ = Kind::pinned;
        g.pinned_a_ = a;
        g.inner_ = std::make_shared<SchurGenerator>(std::move(inner));
        g.check_boundary_guard();
        return g;
    }

    /// Escape hatches for deliberately invalid generators (adversarial
    /// membership tests, lenient CLI input). No range checks.
    static SchurGenerator unchecked_constant(Complex lambda) {
        SchurGenerator g;
        g.kind_ = Kind::constant;
        g.lambda_ = lambda;
        return g;
    }

    static SchurGenerator unchecked_blaschke(std::vector<Complex> zeros, double angle, double scale) {
        SchurGenerator g;
        g.kind_ = Kind::blaschke;
        g.zeros_ = std::move(zeros);
        g.angle_ = angle;
        g.scale_ = scale;
        return g;
    }

    Kind kind() const { return kind_; }
    Complex constant_value() const { return lambda_; }
    const std::vector<Complex>& zeros() const { return zeros_; }
    double angle() const { return angle_; }
    double scale() const { return scale_; }
    Complex pinned_value() const { return pinned_a_; }
    const SchurGenerator& inner() const { return *inner_; }

    Complex eval(Complex z) const {
        if (std::abs(z) >= 1.0)
            throw std::invalid_argument("generator evaluation requires |z| < 1");
        return eval_unchecked(z);
    }

    /// Value, first and second derivative at z.
    Jet eval_jet(Complex z) const {
        switch (kind_) {
            case Kind::constant:
                return Jet::constant(lambda_);
            case Kind::blaschke: {
                Jet acc = Jet::constant(std::polar(scale_, angle_));
                const Jet zj = Jet::seed(z);
                for (const Complex& zero : zeros_)
                    acc = acc * ((zj - Jet::constant(zero)) / (Jet::constant(1.0) - Jet::constant(std::conj(zero)) * zj));
                return acc;
            }
            case Kind::pinned: {
                const Jet h = Jet::seed(z) * inner_->eval_jet(z);
                return (Jet::constant(pinned_a_) + h) / (Jet::constant(1.0) + Jet::constant(std::conj(pinned_a_)) * h);
            }
        }
        throw std::logic_error("unreachable generator kind");
    }

    /// Taylor expansion about any interior center. Blaschke factors and
    /// the pinned Moebius map expand through series division.
    TruncatedSeries expand(Complex center, int order) const {
        switch (kind_) {
            case Kind::constant:
                return TruncatedSeries::constant(center, lambda_, order);
            case Kind::blaschke: {
                TruncatedSeries acc = TruncatedSeries::constant(center, std::polar(scale_, angle_), order);
                for (const Complex& zero : zeros_) {
                    const std::vector<Complex> numer{-zero, 1.0};               // z - zero
                    const std::vector<Complex> denom{1.0, -std::conj(zero)};    // 1 - conj(zero) z
                    acc = acc * series_div(recenter_polynomial(numer, center, order),
                                           recenter_polynomial(denom, center, order));
                }
                return acc;
            }
            case Kind::pinned: {
                const TruncatedSeries h = TruncatedSeries::identity(center, order) * inner_->expand(center, order);
                const TruncatedSeries one = TruncatedSeries::constant(center, 1.0, order);
                return series_div(TruncatedSeries::constant(center, pinned_a_, order) + h,
                                  one + std::conj(pinned_a_) * h);
            }
        }
        throw std::logic_error("unreachable generator kind");
    }

private:
    SchurGenerator() = default;

    Complex eval_unchecked(Complex z) const {
        switch (kind_) {
            case Kind::constant:
                return lambda_;
            case Kind::blaschke: {
                Complex acc = std::polar(scale_, angle_);
                for (const Complex& zero : zeros_) acc *= (z - zero) / (1.0 - std::conj(zero) * z);
                return acc;
            }
            case Kind::pinned: {
                const Complex h = z * inner_->eval_unchecked(z);
                return (pinned_a_ + h) / (1.0 + std::conj(pinned_a_) * h);
            }
        }
        throw std::logic_error("unreachable generator kind");
    }

    // 64-point sample near the boundary; a validated generator must stay
    // inside the closed disk up to rounding.
    void check_boundary_guard() const {
        for (int k = 0; k < 64; ++k) {
            const Complex z = std::polar(0.999, 2.0 * std::numbers::pi * k / 64.0);
            if (std::abs(eval_unchecked(z)) > 1.0 + 1e-12)
                throw std::invalid_argument("generator exceeds the closed unit disk on the boundary sample");
        }
    }

    Kind kind_ = Kind::constant;
    Complex lambda_{0.0};
    std::vector<Complex> zeros_;
    double angle_ = 0.0;
    double scale_ = 0.0;
    Complex pinned_a_{0.0};
    std::shared_ptr<const SchurGenerator> inner_;
};

/// Taylor coefficients c_0..c_N of a Schur-class generator about p.
struct SchurExpansion {
    double p = 0.0;
    std::vector<Complex> coeffs;

    Complex c(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs.size()))
            throw std::out_of_range("SchurExpansion: index outside expansion order");
        return coeffs[static_cast<std::size_t>(k)];
    }
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

inline SchurExpansion taylor_about_p(const SchurGenerator& gen, double p, int order) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("taylor_about_p: p must lie in (0,1)");
    TruncatedSeries s = gen.expand(Complex(p), order);
    SchurExpansion e{p, std::vector<Complex>(s.coeffs().begin(), s.coeffs().end())};
    if (std::abs(e.c(0)) > 1.0 + 1e-12)
        throw std::logic_error("Schur expansion has |c0| > 1; generator is not in the class");
    return e;
}

/// |omega'(p)| <= (1 - |omega(p)|^2)/(1 - p^2) for Schur-class omega.
inline InequalityReport schwarz_pick_check(const SchurExpansion& e) {
    if (e.order() < 1) throw std::invalid_argument("schwarz_pick_check: need order >= 1");
    const double c0 = std::abs(e.c(0));
    return InequalityReport::upper("schwarz_pick", std::abs(e.c(1)),
                                   (1.0 - c0 * c0) / (1.0 - e.p * e.p), e.p)
        .with_n(1);
}

/// (1-p)^n (1+p) |c_n| <= 1 - |c_0|^2; equality for unimodular constants.
inline InequalityReport ruscheweyh_check(const SchurExpansion& e, int n) {
    if (n < 1 || n > e.order())
        throw std::invalid_argument("ruscheweyh_check: n must lie in [1, order]");
    const double c0 = std::abs(e.c(0));
    const double lhs = std::pow(1.0 - e.p, n) * (1.0 + e.p) * std::abs(e.c(n));
    return InequalityReport::upper("ruscheweyh", lhs, 1.0 - c0 * c0, e.p).with_n(n);
}

/// Sampling distribution for property tests and region probes: Blaschke
/// degree uniform in {0..4}, zeros area-uniform in the 0.95 disk, scale
/// uniform in [0,1], unimodular factor uniform on the circle.
inline SchurGenerator sample_generator(Rng& rng) {
    const int degree = rng.uniform_int(0, 4);
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) zeros.push_back(rng.unit_disk(0.95));
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double scale = rng.uniform();
    return SchurGenerator::make_blaschke(std::move(zeros), angle, scale);
}

}  // namespace mero
