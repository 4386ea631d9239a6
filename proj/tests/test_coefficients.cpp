#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "mero/coefficients.hpp"
#include "test_util.hpp"

using mero::Complex;
using mero::SchurGenerator;
using testutil::cdist;

TEST_CASE("laurent_coeffs of g") {
    for (const double p : {0.2, 0.5, 0.7}) {
        const auto g = mero::extremal_ftheta(p, std::numbers::pi, 16, false);
        const auto a = mero::laurent_coeffs(g, 10);
        const double t = 1.0 - p * p;
        CHECK(a.min_index() == -1);
        CHECK(cdist(a.at(-1), -p * p / t) < 1e-13);
        CHECK(cdist(a.at(0), -p / (t * t)) < 1e-13);
    }
    SUBCASE("requesting beyond the cached order throws") {
        const auto g = mero::extremal_ftheta(0.3, 0.0, 8, false);
        CHECK_THROWS_AS(mero::laurent_coeffs(g, 9), std::invalid_argument);
    }
}

TEST_CASE("f_theta residue from the cached expansion") {
    for (const double p : {0.2, 0.6}) {
        for (const double theta : {0.7, 2.9}) {
            const auto f = mero::extremal_ftheta(p, theta, 12, false);
            const auto a = mero::laurent_coeffs(f, 4);
            const Complex want = -p * p * (1.0 - p * p * std::polar(1.0, theta)) / (1.0 - std::pow(p, 4));
            CHECK(cdist(a.at(-1), want) < 1e-13);
        }
    }
}

TEST_CASE("taylor_coeffs starts at A_1 = 1") {
    mero::Rng rng(12);
    const auto f = mero::build_concave(0.45, mero::sample_generator(rng), 12, false);
    const auto A = mero::taylor_coeffs(f, 10);
    CHECK(A.min_index() == 1);
    CHECK(cdist(A.at(1), 1.0) < 1e-12);
    CHECK_THROWS_AS(A.at(0), std::out_of_range);
    CHECK_THROWS_AS(A.at(11), std::out_of_range);
}

TEST_CASE("rotation family sits on the Taylor-coefficient circle") {
    // theta = 0 lands at center - radius, theta = pi at center + radius,
    // every theta at distance exactly the radius.
    const double p = 0.5;
    const double center2 = (1.0 - std::pow(p, 6)) / (p * (1.0 - std::pow(p, 4)));
    const double radius2 = p * p * (1.0 - p * p) / (p * (1.0 - std::pow(p, 4)));
    CHECK(center2 == doctest::Approx(2.1).epsilon(1e-14));
    CHECK(radius2 == doctest::Approx(0.4).epsilon(1e-14));

    const auto f0 = mero::extremal_ftheta(p, 0.0, 12, false);
    CHECK(cdist(mero::taylor_coeffs(f0, 4).at(2), center2 - radius2) < 1e-13);
    const auto fpi = mero::extremal_ftheta(p, std::numbers::pi, 12, false);
    CHECK(cdist(mero::taylor_coeffs(fpi, 4).at(2), center2 + radius2) < 1e-13);

    for (const double theta : {0.3, 1.8, 5.0}) {
        const auto f = mero::extremal_ftheta(p, theta, 14, false);
        const auto A = mero::taylor_coeffs(f, 12);
        for (int n = 2; n <= 10; ++n) {
            const double c = (1.0 - std::pow(p, 2 * n + 2)) / (std::pow(p, n - 1) * (1.0 - std::pow(p, 4)));
            const double r = p * p * (1.0 - std::pow(p, 2 * n - 2)) / (std::pow(p, n - 1) * (1.0 - std::pow(p, 4)));
            CHECK(std::abs(std::abs(A.at(n) - Complex(c)) - r) < 1e-9 * std::max(1.0, r));
        }
    }
}

TEST_CASE("c0_from_am1") {
    SUBCASE("recovers the rotation") {
        for (const double p : {0.25, 0.55}) {
            for (const double theta : {0.0, 1.1, std::numbers::pi}) {
                const Complex am1 = -p * p * (1.0 - p * p * std::polar(1.0, theta)) / (1.0 - std::pow(p, 4));
                CHECK(cdist(mero::c0_from_am1(am1, p), std::polar(1.0, theta)) < 1e-12);
            }
        }
    }
    SUBCASE("disk center corresponds to omega(p) = 0") {
        const double p = 0.6;
        CHECK(cdist(mero::c0_from_am1(Complex(-p * p / (1.0 - std::pow(p, 4))), p), 0.0) < 1e-13);
    }
    SUBCASE("round trip through random members") {
        mero::Rng rng(23);
        for (int trial = 0; trial < 100; ++trial) {
            const double p = rng.uniform(0.15, 0.75);
            const auto gen = mero::sample_generator(rng);
            const auto f = mero::build_concave(p, gen, 8, false);
            const Complex got = mero::c0_from_am1(mero::laurent_coeffs(f, 1).at(-1), p);
            CHECK(cdist(got, gen.eval(Complex(p))) < 1e-10);
        }
    }
}

TEST_CASE("Taylor and Laurent expansions agree where both disks overlap") {
    // z = p/2 lies in both disks when p < 2/3.
    mero::Rng rng(29);
    for (const double p : {0.2, 0.4, 0.6}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = mero::build_concave(p, mero::sample_generator(rng), 64, false);
            const Complex z(p / 2.0);
            CHECK(std::abs(f.taylor.evaluate(z) - f.laurent.evaluate(z)) < 1e-8);
        }
    }
}

TEST_CASE("rotation members have a geometric Laurent tail") {
    // a_{n-2} = (1-p^2) a_{n-1} / p for 3 <= n <= 10.
    for (const double p : {0.3, 0.5}) {
        for (const double theta : {0.0, 2.2}) {
            const auto f = mero::extremal_ftheta(p, theta, 16, false);
            const auto a = mero::laurent_coeffs(f, 12);
            for (int n = 3; n <= 10; ++n) {
                const Complex lhs = a.at(n - 2) - (1.0 - p * p) * a.at(n - 1) / p;
                CHECK(std::abs(lhs) < 1e-10 * std::max(1.0, std::abs(a.at(n - 2))));
            }
        }
    }
}
