#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "korenblum/quadrature.hpp"

using korenblum::integrate_finite;
using korenblum::integrate_gaussian_tail;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

double fock_denominator_oracle(double c) {
    return 0.5 * c * std::exp(-c * c) + 0.25 * kSqrtPi * (1.0 - 2.0 * c * c) * std::erfc(c);
}

}  // namespace

TEST(IntegrateFinite, Linear) {
    const auto q = integrate_finite([](double x) { return x; }, 0.0, 1.0);
    EXPECT_NEAR(q.value, 0.5, 1e-12);
    EXPECT_TRUE(q.converged);
    EXPECT_GE(q.evaluations, 15);
}

TEST(IntegrateFinite, Sine) {
    const auto q = integrate_finite([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    EXPECT_NEAR(q.value, 2.0, 1e-10);
    EXPECT_TRUE(q.converged);
}

TEST(IntegrateFinite, ClampedIntegrand) {
    const auto q = integrate_finite([](double x) { return x < 0.5 ? 0.0 : x * (1.0 / x); }, 0.0, 1.0);
    EXPECT_NEAR(q.value, 0.5, 1e-9);
    EXPECT_LE(std::abs(q.value - 0.5), q.abs_error_estimate + 1e-15);
}

TEST(IntegrateFinite, Errors) {
    auto f = [](double x) { return x; };
    EXPECT_THROW(integrate_finite(f, 1.0, 0.0), korenblum::domain_error);
    EXPECT_THROW(integrate_finite(f, 0.0, 1.0, 0.0), korenblum::domain_error);
    EXPECT_THROW(integrate_finite([](double) { return std::nan(""); }, 0.0, 1.0), korenblum::domain_error);
}

TEST(IntegrateFinite, SubdivisionCapReportsNonconvergence) {
    const auto q = integrate_finite([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, 1e-14, 5);
    EXPECT_FALSE(q.converged);
    EXPECT_TRUE(std::isfinite(q.value));
    EXPECT_GT(q.abs_error_estimate, 1e-14);
}

TEST(IntegrateFinite, Additivity) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x) + std::sqrt(x); };
    for (int i = 0; i < 50; ++i) {
        const double a = 2.0 * unit(rng);
        const double b = a + 0.1 + 3.0 * unit(rng);
        const double m = a + (b - a) * unit(rng);
        const auto whole = integrate_finite(f, a, b);
        const auto left = integrate_finite(f, a, m);
        const auto right = integrate_finite(f, m, b);
        ASSERT_LE(std::abs(whole.value - left.value - right.value),
                  whole.abs_error_estimate + left.abs_error_estimate + right.abs_error_estimate + 1e-15);
    }
}

TEST(IntegrateFinite, ErrorEstimateHonesty) {
    struct Case {
        std::string name;
        std::function<double(double)> f;
        double a, b, exact;
    };
    const double pi = std::numbers::pi;
    const std::vector<Case> battery = {
        {"poly", [](double x) { return x * x * x - 2.0 * x; }, -1.0, 2.0, 0.75},
        {"exp", [](double x) { return std::exp(x); }, 0.0, 3.0, std::exp(3.0) - 1.0},
        {"sqrt", [](double x) { return std::sqrt(x); }, 0.0, 1.0, 2.0 / 3.0},
        {"log", [](double x) { return std::log(x); }, 1e-12, 1.0, -1.0 + 1e-12 - 1e-12 * std::log(1e-12)},
        {"runge", [](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, -1.0, 1.0, 0.4 * std::atan(5.0)},
        {"osc", [](double x) { return std::cos(20.0 * x); }, 0.0, pi, 0.0},
        {"abs", [](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, 0.29},
        {"gauss", [](double x) { return std::exp(-x * x); }, 0.0, 2.0, 0.5 * kSqrtPi * std::erf(2.0)},
        {"inv_sqrt", [](double x) { return 1.0 / std::sqrt(x); }, 1e-10, 1.0, 2.0 - 2e-5},
        {"peak", [](double x) { return 1e-2 / (1e-4 + (x - 0.5) * (x - 0.5)); }, 0.0, 1.0, 2.0 * std::atan(50.0)},
    };
    for (const auto& tc : battery) {
        const auto q = integrate_finite(tc.f, tc.a, tc.b, 1e-10);
        const double err = std::abs(q.value - tc.exact);
        EXPECT_TRUE(q.converged) << tc.name;
        EXPECT_LE(err, 10.0 * q.abs_error_estimate + 1e-15) << tc.name << " err=" << err << " est=" << q.abs_error_estimate;
    }
}

TEST(GaussianTail, HalfLineGaussian) {
    const auto q = integrate_gaussian_tail([](double x) { return std::exp(-x * x); }, 0.0, 1e-10, 1.0);
    EXPECT_NEAR(q.value, 0.5 * kSqrtPi, 1e-10);
    EXPECT_TRUE(q.converged);
}

TEST(GaussianTail, SecondMoment) {
    const auto q = integrate_gaussian_tail([](double x) { return x * x * std::exp(-x * x); }, 0.0, 1e-10, 1.0);
    EXPECT_NEAR(q.value, 0.25 * kSqrtPi, 1e-10);
}

TEST(GaussianTail, FockDenominatorAtC054) {
    const double c = 0.54;
    const auto q = integrate_gaussian_tail([c](double r) { return std::exp(-r * r) * (r * r - c * c); }, c, 1e-10, 1.0);
    EXPECT_NEAR(q.value, fock_denominator_oracle(c), 1e-10);
    EXPECT_NEAR(q.value, 0.283906304274134, 1e-10);
}

TEST(GaussianTail, DoublingCutoffStaysWithinRemainder) {
    auto f = [](double r) { return std::exp(-r * r) * (r * r - 0.04); };
    for (double T : {2.0, 3.0, 4.0}) {
        const auto q = integrate_gaussian_tail(f, 0.2, 1e-12, 1.0, T);
        const auto q2 = integrate_gaussian_tail(f, 0.2, 1e-12, 1.0, 2.0 * T);
        const double remainder = korenblum::gaussian_moment_tail(T);
        EXPECT_LE(std::abs(q2.value - q.value), remainder + 1e-12) << "T=" << T;
        EXPECT_GE(q.abs_error_estimate, remainder);
    }
}

TEST(GaussianTail, MomentTailFormula) {
    // integral_T^inf r^2 e^{-r^2} dr, checked against finite quadrature.
    const double T = 1.5;
    const auto q = integrate_finite([](double r) { return r * r * std::exp(-r * r); }, T, 12.0, 1e-13);
    EXPECT_NEAR(korenblum::gaussian_moment_tail(T), q.value, 1e-12);
}
