#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mero/series.hpp"
#include "test_util.hpp"

using mero::Complex;
using mero::TruncatedSeries;
using testutil::cdist;

namespace {

TruncatedSeries make(Complex center, std::vector<Complex> low, int order) {
    low.resize(static_cast<std::size_t>(order) + 1, Complex(0.0));
    return TruncatedSeries(center, std::move(low));
}

// Direct rational evaluation of N(z)/D(z) with D in factored form; the
// independent route the Laurent expansions are checked against.
Complex rational_eval(std::span<const Complex> numer, double p, mero::DenominatorKind kind, Complex z) {
    Complex n(0.0);
    for (std::size_t i = numer.size(); i-- > 0;) n = n * z + numer[i];
    const Complex d = kind == mero::DenominatorKind::reciprocal_pair
                          ? (1.0 - z / p) * (1.0 - z * p)
                          : (z - p) * (1.0 - z * p);
    return n / d;
}

// Residue of N/D at the simple pole p: N(p)/D'(p).
Complex residue_oracle(std::span<const Complex> numer, double p, mero::DenominatorKind kind) {
    Complex n(0.0);
    for (std::size_t i = numer.size(); i-- > 0;) n = n * p + numer[i];
    const double dprime = kind == mero::DenominatorKind::reciprocal_pair
                              ? -(1.0 - p * p) / p
                              : (1.0 - p * p);
    return n / dprime;
}

}  // namespace

TEST_CASE("series addition") {
    const Complex c0(0.0);
    const auto one_plus = make(c0, {1.0, 1.0}, 8);
    const auto one_minus = make(c0, {1.0, -1.0}, 8);
    const auto sum = one_plus + one_minus;
    CHECK(cdist(sum.coeff(0), 2.0) == 0.0);
    for (int k = 1; k <= 8; ++k) CHECK(cdist(sum.coeff(k), 0.0) == 0.0);

    mero::Rng rng(11);
    const auto a = testutil::random_series(rng, c0, 12);
    const auto zero = TruncatedSeries::constant(c0, 0.0, 12);
    const auto same = a + zero;
    for (int k = 0; k <= 12; ++k) CHECK(cdist(same.coeff(k), a.coeff(k)) == 0.0);

    const auto cancel = a - a;
    for (int k = 0; k <= 12; ++k) CHECK(cdist(cancel.coeff(k), 0.0) == 0.0);

    const auto other_center = TruncatedSeries::constant(Complex(0.5), 1.0, 12);
    CHECK_THROWS_AS(a + other_center, std::invalid_argument);
}

TEST_CASE("series multiplication") {
    const Complex c0(0.0);
    const auto prod = make(c0, {1.0, 1.0}, 6) * make(c0, {1.0, -1.0}, 6);
    CHECK(cdist(prod.coeff(0), 1.0) == 0.0);
    CHECK(cdist(prod.coeff(1), 0.0) == 0.0);
    CHECK(cdist(prod.coeff(2), -1.0) == 0.0);

    const Complex rot = std::polar(1.0, 0.77);
    const auto crot = TruncatedSeries::constant(c0, rot, 4);
    CHECK(cdist((crot * crot).coeff(0), rot * rot) < 1e-15);

    // omega(z) = z about p: (p + w)^2 has constant coefficient p^2.
    const double p = 0.37;
    const auto zid = TruncatedSeries::identity(Complex(p), 6);
    CHECK(cdist((zid * zid).coeff(0), p * p) < 1e-15);
    CHECK(cdist((zid * zid).coeff(1), 2 * p) < 1e-15);
    CHECK(cdist((zid * zid).coeff(2), 1.0) < 1e-15);

    SUBCASE("result order is the smaller operand order") {
        const auto small = make(c0, {1.0, 2.0}, 3);
        const auto large = make(c0, {1.0}, 9);
        CHECK((small * large).order() == 3);
    }
}

TEST_CASE("series division") {
    const Complex c0(0.0);
    const auto one = TruncatedSeries::constant(c0, 1.0, 10);
    const auto geom = mero::series_div(one, make(c0, {1.0, -1.0}, 10));
    for (int k = 0; k <= 10; ++k) CHECK(cdist(geom.coeff(k), 1.0) < 1e-15);

    mero::Rng rng(5);
    const auto a = testutil::random_series(rng, c0, 10, 0.2);
    const auto self = mero::series_div(a, a);
    CHECK(cdist(self.coeff(0), 1.0) < 1e-14);
    for (int k = 1; k <= 10; ++k) CHECK(cdist(self.coeff(k), 0.0) < 1e-13);

    // 1/(1 - p w/(1-p^2)): coefficient k is (p/(1-p^2))^k.
    const double p = 0.45;
    const double q = p / (1.0 - p * p);
    const auto inv = mero::series_div(one, make(c0, {1.0, -q}, 10));
    for (int k = 0; k <= 10; ++k) CHECK(testutil::rel_err(inv.coeff(k), std::pow(q, k)) < 1e-14);

    SUBCASE("near-zero leading coefficient is a singularity") {
        const auto tiny = make(c0, {Complex(1e-15), 1.0}, 4);
        CHECK_THROWS_WITH_AS(mero::series_div(one.truncated(4), tiny),
                             doctest::Contains("singularity"), std::domain_error);
    }
}

TEST_CASE("series division round trip") {
    // mul(div(a,b), b) recovers a coefficient-wise. A small |b_0| lets the
    // quotient coefficients grow like (1/|b_0|)^k, and the multiplication
    // cancels back down through that magnitude, so the honest error scale
    // for a draw is the size of the intermediate quotient.
    mero::Rng rng(42);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testutil::random_series(rng, Complex(0.0), 16);
        const auto b = testutil::random_series(rng, Complex(0.0), 16, 0.1);
        const auto quotient = mero::series_div(a, b);
        double scale = 1.0;
        for (int k = 0; k <= 16; ++k) scale = std::max(scale, std::abs(quotient.coeff(k)));
        const auto back = quotient * b;
        for (int k = 0; k <= 16; ++k)
            worst = std::max(worst, cdist(back.coeff(k), a.coeff(k)) / scale);
    }
    CHECK(worst < 1e-12);

    // Away from the ill-conditioned corner the plain coefficient-wise
    // comparison holds at the same tolerance.
    double worst_plain = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testutil::random_series(rng, Complex(0.0), 8);
        const auto b = testutil::random_series(rng, Complex(0.0), 8, 0.5);
        const auto back = mero::series_div(a, b) * b;
        for (int k = 0; k <= 8; ++k)
            worst_plain = std::max(worst_plain, cdist(back.coeff(k), a.coeff(k)) / std::max(1.0, std::abs(a.coeff(k))));
    }
    CHECK(worst_plain < 1e-12);
}

TEST_CASE("series derivative") {
    const Complex c0(0.0);
    const auto d = mero::series_derivative(make(c0, {1.0, 1.0, 1.0}, 2));
    CHECK(d.order() == 1);
    CHECK(cdist(d.coeff(0), 1.0) == 0.0);
    CHECK(cdist(d.coeff(1), 2.0) == 0.0);

    const auto dconst = mero::series_derivative(TruncatedSeries::constant(c0, 3.0, 5));
    for (int k = 0; k <= 4; ++k) CHECK(cdist(dconst.coeff(k), 0.0) == 0.0);

    CHECK_THROWS_AS(mero::series_derivative(TruncatedSeries::constant(c0, 1.0, 0)), std::domain_error);
}

TEST_CASE("tail derivative matches a finite difference of the function") {
    // a_1 of g(z) = -zp/((z-p)(1-pz)) two ways: term-wise derivative of
    // the expanded tail at p, and a central difference of g minus its
    // principal part.
    const double p = 0.3;
    const std::vector<Complex> numer{0.0, -p};
    const auto g = mero::expand_rational(numer, p, mero::DenominatorKind::pole_factored, 16);
    const Complex a1_series = mero::series_derivative(g.tail()).evaluate(Complex(p));

    // The finite difference subtracts two O(1/h) quantities, so its
    // accuracy floor is eps*|a_-1|/h^2 ~ 1e-5; the series value is the
    // one trusted to full precision.
    const double h = 1e-6 * (1.0 - p);
    auto tail_fn = [&](Complex z) {
        return rational_eval(numer, p, mero::DenominatorKind::pole_factored, z) -
               g.principal() / (z - p);
    };
    const Complex a1_fd = (tail_fn(Complex(p + h)) - tail_fn(Complex(p - h))) / (2.0 * h);
    CHECK(testutil::rel_err(a1_series, a1_fd) < 1e-4);
}

TEST_CASE("expand_rational reproduces the residue and low coefficients of g") {
    for (const double p : {0.2, 0.5, 0.7}) {
        const std::vector<Complex> numer{0.0, -p};
        const auto g = mero::expand_rational(numer, p, mero::DenominatorKind::pole_factored, 24);
        const double t = 1.0 - p * p;
        CHECK(testutil::rel_err(g.principal(), -p * p / t) < 1e-14);
        // Geometric oracle: tail of -p(p+w)/((1-p^2) w (1 - qw)), q = p/(1-p^2).
        const double q = p / t;
        const Complex a0_oracle = (-p / t) * (p * q + 1.0);
        CHECK(testutil::rel_err(g.coeff(0), a0_oracle) < 1e-14);
        CHECK(testutil::rel_err(g.coeff(0), -p / (t * t)) < 1e-14);
    }
}

TEST_CASE("expand_rational principal part equals the residue oracle") {
    mero::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const double p = rng.uniform(0.1, 0.9);
        const std::vector<Complex> numer{rng.unit_disk(1.0), rng.unit_disk(1.0), rng.unit_disk(1.0)};
        for (const auto kind : {mero::DenominatorKind::reciprocal_pair, mero::DenominatorKind::pole_factored}) {
            const auto exp = mero::expand_rational(numer, p, kind, 8);
            const Complex want = residue_oracle(numer, p, kind);
            CHECK(testutil::rel_err(exp.principal(), want) < 1e-12);
        }
    }
    SUBCASE("the reciprocal-pair residue is N(p) * (-p/(1-p^2))") {
        const double p = 0.4;
        const std::vector<Complex> numer{Complex(0.3, 0.1), Complex(-0.2, 0.0), Complex(0.05, -0.4)};
        Complex np(0.0);
        for (std::size_t i = numer.size(); i-- > 0;) np = np * p + numer[i];
        const auto exp = mero::expand_rational(numer, p, mero::DenominatorKind::reciprocal_pair, 8);
        CHECK(testutil::rel_err(exp.principal(), np * (-p / (1.0 - p * p))) < 1e-13);
    }
    CHECK_THROWS_AS(mero::expand_rational(std::vector<Complex>{1.0}, 1.2,
                                          mero::DenominatorKind::pole_factored, 8),
                    std::invalid_argument);
}

TEST_CASE("Laurent evaluation matches direct rational evaluation") {
    // f_theta numerators at several angles, order 32, points within half
    // the validity radius.
    mero::Rng rng(19);
    for (const double p : {0.25, 0.5}) {
        for (const double theta : {0.0, std::numbers::pi / 3, std::numbers::pi}) {
            const double beta = p / (1.0 + p * p);
            const Complex s = 1.0 + std::polar(1.0, theta);
            const std::vector<Complex> numer{0.0, 1.0, -beta * s};
            const auto exp = mero::expand_rational(numer, p, mero::DenominatorKind::reciprocal_pair, 32);
            for (int i = 0; i < 20; ++i) {
                const Complex z = Complex(p) + rng.unit_disk(0.5 * (1.0 - p));
                const Complex direct = rational_eval(numer, p, mero::DenominatorKind::reciprocal_pair, z);
                CHECK(std::abs(exp.evaluate(z) - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
            }
        }
    }
}

TEST_CASE("f_theta residue") {
    // a_-1 = -p^2 (1 - p^2 e^{i theta}) / (1 - p^4), cross-checked against
    // the residue oracle N(p)/D'(p).
    for (const double p : {0.2, 0.5, 0.7}) {
        for (const double theta : {0.0, 1.0, std::numbers::pi, 4.0}) {
            const double beta = p / (1.0 + p * p);
            const Complex eio = std::polar(1.0, theta);
            const std::vector<Complex> numer{0.0, 1.0, -beta * (1.0 + eio)};
            const auto exp = mero::expand_rational(numer, p, mero::DenominatorKind::reciprocal_pair, 8);
            const Complex closed = -p * p * (1.0 - p * p * eio) / (1.0 - std::pow(p, 4));
            CHECK(testutil::rel_err(exp.principal(), closed) < 1e-13);
            CHECK(testutil::rel_err(exp.principal(), residue_oracle(numer, p, mero::DenominatorKind::reciprocal_pair)) < 1e-13);
        }
    }
}

TEST_CASE("recenter_polynomial is exact for quadratics") {
    const Complex center(0.6, -0.2);
    const std::vector<Complex> poly{Complex(1.0, 2.0), Complex(-0.5), Complex(0.25, 0.1)};
    const auto re = mero::recenter_polynomial(poly, center, 5);
    mero::Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        const Complex z = rng.unit_disk(1.0);
        Complex direct(0.0);
        for (std::size_t k = poly.size(); k-- > 0;) direct = direct * z + poly[k];
        CHECK(cdist(re.evaluate(z), direct) < 1e-14);
    }
}
