#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "mero/families.hpp"
#include "mero/series.hpp"

namespace mero {

/// Which of the three coefficient systems a vector holds. Starting
/// indices differ (1, -1, 0), so access goes through at(n) with the
/// absolute index, never through raw positions.
enum class CoeffKind { taylor_A, laurent_a, schur_c };

inline std::string to_string(CoeffKind kind) {
    switch (kind) {
        case CoeffKind::taylor_A: return "taylor_A";
        case CoeffKind::laurent_a: return "laurent_a";
        case CoeffKind::schur_c: return "schur_c";
    }
    return "?";
}

class CoefficientVector {
public:
    CoefficientVector(CoeffKind kind, double p, int start_index, std::vector<Complex> values)
        : kind_(kind), p_(p), start_(start_index), values_(std::move(values)) {}

    CoeffKind kind() const { return kind_; }
    double p() const { return p_; }
    int min_index() const { return start_; }
    int max_index() const { return start_ + static_cast<int>(values_.size()) - 1; }

    Complex at(int n) const {
        if (n < min_index() || n > max_index())
            throw std::out_of_range("coefficient index " + std::to_string(n) + " outside [" +
                                    std::to_string(min_index()) + "," + std::to_string(max_index()) + "]");
        return values_[static_cast<std::size_t>(n - start_)];
    }

    const std::vector<Complex>& values() const { return values_; }

private:
    CoeffKind kind_;
    double p_;
    int start_;
    std::vector<Complex> values_;
};

/// (a_-1, a_0, ..., a_N) read from the cached expansion about the pole.
inline CoefficientVector laurent_coeffs(const MemberFunction& f, int order) {
    if (order > f.laurent.order())
        throw std::invalid_argument("requested Laurent order exceeds the cached expansion");
    std::vector<Complex> v;
    v.reserve(static_cast<std::size_t>(order) + 2);
    for (int n = -1; n <= order; ++n) v.push_back(f.laurent.coeff(n));
    return CoefficientVector(CoeffKind::laurent_a, f.p, -1, std::move(v));
}

/// (A_1, ..., A_N) about the origin; A_1 = 1 by normalization.
inline CoefficientVector taylor_coeffs(const MemberFunction& f, int order) {
    if (order > f.taylor.order())
        throw std::invalid_argument("requested Taylor order exceeds the cached expansion");
    std::vector<Complex> v;
    v.reserve(static_cast<std::size_t>(order));
    for (int n = 1; n <= order; ++n) v.push_back(f.taylor.coeff(n));
    return CoefficientVector(CoeffKind::taylor_A, f.p, 1, std::move(v));
}

/// (c_0, ..., c_N) of a generator expansion about p.
inline CoefficientVector schur_coeffs(const SchurExpansion& e) {
    return CoefficientVector(CoeffKind::schur_c, e.p, 0, e.coeffs);
}

/// Generator value at the pole implied by the concave representation:
/// c_0 = (1-p^4) a_-1 / p^4 + 1/p^2.
inline Complex c0_from_am1(Complex am1, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("c0_from_am1: p must lie in (0,1)");
    const double p2 = p * p;
    const double p4 = p2 * p2;
    return (1.0 - p4) * am1 / p4 + 1.0 / p2;
}

}  // namespace mero
