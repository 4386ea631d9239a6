#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mero {

using Complex = std::complex<double>;

/// Modulus below which a series leading coefficient is treated as a
/// division singularity.
inline constexpr double kDivisionGuard = 1e-14;

/// Default truncation order for member expansions. Coefficients of
/// interest reach index ~10; the headroom keeps product truncation
/// error below the report tolerances.
inline constexpr int kDefaultOrder = 32;

/// Finite power series sum_{k=0}^{order} c_k (z - center)^k.
///
/// Values are immutable after construction. Arithmetic between two
/// series requires equal centers and truncates to the smaller order:
/// missing high-order coefficients are never extrapolated.
class TruncatedSeries {
public:
    TruncatedSeries(Complex center, std::vector<Complex> coeffs)
        : center_(center), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("TruncatedSeries: need at least the constant coefficient");
    }

    static TruncatedSeries constant(Complex center, Complex value, int order) {
        std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex(0.0));
        c[0] = value;
        return TruncatedSeries(center, std::move(c));
    }

    /// The series of z itself about `center`: center + (z - center).
    static TruncatedSeries identity(Complex center, int order) {
        auto s = constant(center, center, order);
        if (order >= 1) s.coeffs_[1] = 1.0;
        return s;
    }

    Complex center() const { return center_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Complex coeff(int k) const {
        if (k < 0 || k > order())
            throw std::out_of_range("TruncatedSeries: coefficient index " + std::to_string(k) +
                                    " outside order " + std::to_string(order()));
        return coeffs_[static_cast<std::size_t>(k)];
    }
    std::span<const Complex> coeffs() const { return coeffs_; }

    /// Horner evaluation in (z - center).
    Complex evaluate(Complex z) const {
        const Complex w = z - center_;
        Complex acc = coeffs_.back();
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;)
            acc = acc * w + coeffs_[k];
        return acc;
    }

    TruncatedSeries truncated(int order) const {
        if (order >= this->order()) return *this;
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative truncation order");
        std::vector<Complex> c(coeffs_.begin(), coeffs_.begin() + order + 1);
        return TruncatedSeries(center_, std::move(c));
    }

private:
    Complex center_;
    std::vector<Complex> coeffs_;

    friend TruncatedSeries operator+(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator-(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator*(const TruncatedSeries&, const TruncatedSeries&);
};

namespace detail {
inline void require_same_center(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.center() != b.center())
        throw std::invalid_argument("series arithmetic requires equal centers");
}
}  // namespace detail

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_center(a, b);
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Complex> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
    return TruncatedSeries(a.center(), std::move(c));
}

inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_center(a, b);
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Complex> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = a.coeffs_[k] - b.coeffs_[k];
    return TruncatedSeries(a.center(), std::move(c));
}

/// Cauchy product truncated to min(a.order, b.order).
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_center(a, b);
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Complex> c(n, Complex(0.0));
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) acc += a.coeffs_[j] * b.coeffs_[k - j];
        c[k] = acc;
    }
    return TruncatedSeries(a.center(), std::move(c));
}

inline TruncatedSeries operator*(Complex scalar, const TruncatedSeries& a) {
    std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& v : c) v *= scalar;
    return TruncatedSeries(a.center(), std::move(c));
}

inline TruncatedSeries operator-(const TruncatedSeries& a) { return Complex(-1.0) * a; }

/// Series quotient q with q * b = a up to the truncation order.
/// Requires |b_0| above the division guard.
inline TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_center(a, b);
    const Complex lead = b.coeff(0);
    if (std::abs(lead) <= kDivisionGuard)
        throw std::domain_error("series division singularity: leading coefficient modulus " +
                                std::to_string(std::abs(lead)));
    const std::size_t n = std::min(a.coeffs().size(), b.coeffs().size());
    std::vector<Complex> q(n, Complex(0.0));
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc = a.coeff(static_cast<int>(k));
        for (std::size_t j = 1; j <= k; ++j) acc -= b.coeff(static_cast<int>(j)) * q[k - j];
        q[k] = acc / lead;
    }
    return TruncatedSeries(a.center(), std::move(q));
}

/// Term-wise derivative; result order drops by one.
inline TruncatedSeries series_derivative(const TruncatedSeries& a) {
    if (a.order() < 1)
        throw std::domain_error("series derivative: degenerate order-0 input");
    std::vector<Complex> c(static_cast<std::size_t>(a.order()));
    for (int k = 1; k <= a.order(); ++k)
        c[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * a.coeff(k);
    return TruncatedSeries(a.center(), std::move(c));
}

/// Exact binomial recentering of a polynomial given by its coefficients
/// about 0 (index = power of z) to the new center.
inline TruncatedSeries recenter_polynomial(std::span<const Complex> poly, Complex center, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex(0.0));
    const int degree = static_cast<int>(poly.size()) - 1;
    std::vector<Complex> powers(static_cast<std::size_t>(degree) + 1, Complex(1.0));
    for (int i = 1; i <= degree; ++i) powers[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i - 1)] * center;
    for (int m = 0; m <= degree; ++m) {
        // a_m (w + center)^m expanded with binomial coefficients.
        double binom = 1.0;
        for (int j = 0; j <= m; ++j) {
            if (j <= order)
                c[static_cast<std::size_t>(j)] +=
                    poly[static_cast<std::size_t>(m)] * binom * powers[static_cast<std::size_t>(m - j)];
            binom = binom * static_cast<double>(m - j) / static_cast<double>(j + 1);
        }
    }
    return TruncatedSeries(center, std::move(c));
}

/// Principal coefficient plus Taylor tail of a function with a simple
/// pole at `pole`, valid on |z - pole| < 1 - pole.
class LaurentExpansion {
public:
    LaurentExpansion(double pole, Complex principal, TruncatedSeries tail)
        : pole_(pole), principal_(principal), tail_(std::move(tail)) {
        if (!(pole > 0.0 && pole < 1.0))
            throw std::invalid_argument("LaurentExpansion: pole must lie in (0,1)");
        if (tail_.center() != Complex(pole))
            throw std::invalid_argument("LaurentExpansion: tail must be centered at the pole");
    }

    double pole() const { return pole_; }
    Complex principal() const { return principal_; }
    const TruncatedSeries& tail() const { return tail_; }
    int order() const { return tail_.order(); }

    /// Coefficient a_n, n >= -1.
    Complex coeff(int n) const {
        if (n == -1) return principal_;
        return tail_.coeff(n);
    }

    Complex evaluate(Complex z) const {
        return principal_ / (z - pole_) + tail_.evaluate(z);
    }

private:
    double pole_;
    Complex principal_;
    TruncatedSeries tail_;
};

/// Interpret a Taylor series T about the pole as T(w)/w: the constant
/// term becomes the residue, the rest shift down one index.
inline LaurentExpansion laurent_from_over_w(const TruncatedSeries& t) {
    const double pole = t.center().real();
    std::vector<Complex> tail(t.coeffs().begin() + 1, t.coeffs().end());
    if (tail.empty()) tail.push_back(Complex(0.0));
    return LaurentExpansion(pole, t.coeff(0), TruncatedSeries(t.center(), std::move(tail)));
}

enum class DenominatorKind {
    reciprocal_pair,  // (1 - z/p)(1 - zp)
    pole_factored,    // (z - p)(1 - zp)
};

/// Laurent expansion about p of N(z) / D(z) where D has the declared
/// factored shape with its simple zero at p. The numerator polynomial is
/// recentered exactly; the nonvanishing factor is inverted by series
/// division.
inline LaurentExpansion expand_rational(std::span<const Complex> numer_poly, double p,
                                        DenominatorKind kind, int order) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("expand_rational: p must lie in (0,1)");
    const Complex center(p);
    const int work = order + 1;
    TruncatedSeries numer = recenter_polynomial(numer_poly, center, work);
    // Both kinds factor as  c * w * (1 - q w)  with q = p/(1-p^2).
    const double one_minus_p2 = 1.0 - p * p;
    const double q = p / one_minus_p2;
    std::vector<Complex> lin(static_cast<std::size_t>(work) + 1, Complex(0.0));
    lin[0] = 1.0;
    lin[1] = -q;
    TruncatedSeries inv = series_div(TruncatedSeries::constant(center, 1.0, work),
                                     TruncatedSeries(center, std::move(lin)));
    const double scale = (kind == DenominatorKind::reciprocal_pair)
                             ? -p / one_minus_p2
                             : 1.0 / one_minus_p2;
    TruncatedSeries t = Complex(scale) * (numer * inv);
    return laurent_from_over_w(t);
}

}  // namespace mero
