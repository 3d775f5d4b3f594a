#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "korenblum/metrics.hpp"
#include "korenblum/property_suites.hpp"

using korenblum::Complex;
using korenblum::DiskPoint;

TEST(PseudoDistance, OriginToPointIsModulus) {
    EXPECT_DOUBLE_EQ(korenblum::pseudo_distance(0.0, Complex(0.3, 0.0)), 0.3);
}

TEST(PseudoDistance, IdenticalPointsAreAtZero) {
    const Complex a(0.31, -0.57);
    EXPECT_EQ(korenblum::pseudo_distance(a, a), 0.0);
}

TEST(PseudoDistance, OppositeRealPoints) {
    // |1| / |1 + 0.25|
    EXPECT_NEAR(korenblum::pseudo_distance(0.5, -0.5), 0.8, 1e-15);
}

TEST(PseudoDistance, RejectsPointsOffTheDisk) {
    EXPECT_THROW(korenblum::pseudo_distance(1.0, 0.0), korenblum::domain_error);
    EXPECT_THROW(korenblum::pseudo_distance(0.0, Complex(0.8, 0.6000001)), korenblum::domain_error);
    EXPECT_THROW(DiskPoint(Complex(std::nan(""), 0.0)), korenblum::domain_error);
}

TEST(PseudoDistance, NearBoundaryInputsAreAccepted) {
    const double d = korenblum::pseudo_distance(0.995, -0.995);
    EXPECT_GT(d, 0.99);
    EXPECT_LT(d, 1.0);
}

TEST(RatioIdentity, TrivialCasesVanish) {
    EXPECT_EQ(korenblum::ratio_identity_residual(0.0, 0.0), 0.0);
    const Complex b(-0.4, 0.7);
    EXPECT_EQ(korenblum::ratio_identity_residual(b, b), 0.0);
}

TEST(RatioIdentity, GenericPair) {
    EXPECT_LE(korenblum::ratio_identity_residual(Complex(0.3, 0.1), Complex(-0.2, 0.4)), 1e-12);
}

TEST(SquareDifferenceGap, HandValues) {
    EXPECT_EQ(korenblum::square_difference_gap(1.0, 1.0), 0.0);
    EXPECT_EQ(korenblum::square_difference_gap(1.0, 0.0), 1.0);
    EXPECT_EQ(korenblum::square_difference_gap(0.0, 1.0), 1.0);
}

TEST(QuotientIdentity, TrivialCasesVanish) {
    EXPECT_EQ(korenblum::quotient_identity_residual(0.0, Complex(0.7, 0.2), Complex(0.3, 0.0)), 0.0);
    const Complex f(0.2, -0.1);
    const Complex g(0.9, 0.3);
    EXPECT_LE(korenblum::quotient_identity_residual(f, g, f / g), 1e-16);
}

TEST(QuotientIdentity, GenericTriple) {
    EXPECT_LE(korenblum::quotient_identity_residual(Complex(0.2, 0.1), 1.0, 0.5), 1e-12);
}

TEST(QuotientIdentity, DomainErrors) {
    EXPECT_THROW(korenblum::quotient_identity_residual(0.1, 0.0, 0.0), korenblum::domain_error);
    EXPECT_THROW(korenblum::quotient_identity_residual(1.0, Complex(0.0, 1.0), 0.0), korenblum::domain_error);
}

TEST(CircleMean, MatchesEquispacedSampling) {
    const std::vector<Complex> coeffs = {{1.0, 0.5}, {-0.3, 0.2}, {0.0, 0.0}, {2.0, -1.0}};
    for (double r : {0.0, 0.3, 0.77, 1.0}) {
        // The equispaced mean of |p|^2 is exact once the sample count exceeds twice the degree.
        const int samples = 16;
        double sampled = 0.0;
        for (int j = 0; j < samples; ++j) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / samples);
            Complex p = 0.0;
            for (std::size_t k = coeffs.size(); k-- > 0;) p = p * z + coeffs[k];
            sampled += std::norm(p);
        }
        EXPECT_NEAR(korenblum::circle_mean_modulus_sq(coeffs, r), sampled / samples, 1e-13);
    }
}

// Property suites: the same runs the verify command reports.
class MetricSuites : public ::testing::TestWithParam<korenblum::MetricSuite> {};

TEST_P(MetricSuites, PassAtConfiguredTolerance) {
    const auto report = korenblum::run_metric_suite(GetParam(), 0);
    EXPECT_TRUE(report.pass) << report.claim_id << " max_violation=" << report.max_violation;
    EXPECT_GT(report.points_checked, 0);
}

TEST_P(MetricSuites, IndependentOfSeed) {
    EXPECT_TRUE(korenblum::run_metric_suite(GetParam(), 12345).pass);
}

INSTANTIATE_TEST_SUITE_P(All, MetricSuites, ::testing::ValuesIn(korenblum::kAllMetricSuites),
                         [](const auto& info) {
                             std::string name = korenblum::metric_suite_id(info.param);
                             for (char& ch : name) {
                                 if (ch == '-') ch = '_';
                             }
                             return name;
                         });

TEST(MetricSuites, SampleCounts) {
    EXPECT_EQ(korenblum::run_metric_suite(korenblum::MetricSuite::symmetry).points_checked, 10000);
    EXPECT_EQ(korenblum::run_metric_suite(korenblum::MetricSuite::square_gap).points_checked, 100000);
    EXPECT_EQ(korenblum::run_metric_suite(korenblum::MetricSuite::circle_mean).points_checked, 1000);
}
