#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "korenblum/annulus_distance.hpp"
#include "korenblum/bound_engine.hpp"

using korenblum::Claim;
using korenblum::GridSpec;

namespace {

GridSpec single_point(double c, double rho, int n_min, int n_max) {
    GridSpec g;
    g.c_values = {c};
    g.rho_values = {rho};
    g.n_min = n_min;
    g.n_max = n_max;
    return g;
}

}  // namespace

TEST(Factors, FnAtSymmetryPoint) {
    const double c = 0.21;
    for (int n = 1; n <= 4; ++n) {
        const double expected = std::pow((1.0 + std::pow(c, 2 * n)) / (1.0 + std::pow(c, 2 * n - 1)), 2);
        EXPECT_NEAR(korenblum::f_n_factor(std::sqrt(c), c, n), expected, 1e-15);
    }
}

TEST(Factors, SmallCLimitIsOne) {
    EXPECT_NEAR(korenblum::f_n_factor(0.5, 1e-9, 1), 1.0, 1e-8);
    EXPECT_NEAR(korenblum::g_n_factor(0.5, 1e-9, 1.1, 2), 1.0, 1e-12);
}

TEST(Factors, FnBelowClosedBound) {
    const double c = 0.21;
    EXPECT_LE(korenblum::f_n_factor(0.5, c, 1), (1.0 + c * c * c) / (1.0 + c));
}

TEST(Factors, GnAtThetaZero) {
    const double c = 0.21;
    const double rho = 0.5;
    const double expected = (1.0 - c * c) * (1.0 - c * c) / ((1.0 - rho * rho) * (1.0 - c * c / (rho * rho)));
    EXPECT_NEAR(korenblum::g_n_factor(rho, c, 0.0, 1), expected, 1e-14);
    EXPECT_LE(korenblum::g_n_factor(rho, c, std::numbers::pi / 2, 1), korenblum::g_n_factor(rho, c, 0.0, 1));
}

TEST(Factors, DomainErrors) {
    EXPECT_THROW(korenblum::f_n_factor(0.2, 0.21, 1), korenblum::domain_error);
    EXPECT_THROW(korenblum::f_n_factor(0.5, 0.21, 0), korenblum::domain_error);
    EXPECT_THROW(korenblum::g_n_factor(1.0, 0.21, 0.0, 1), korenblum::domain_error);
    EXPECT_THROW(korenblum::g_n_factor(0.5, 0.21, std::nan(""), 1), korenblum::domain_error);
}

TEST(CircleSupBound, DominatesExactDistanceOnGrid) {
    for (double c : {0.1, 0.21, 0.24}) {
        const korenblum::AnnulusDomain dom(c);
        double worst = -1.0;
        for (int i = 1; i <= 100; ++i) {
            const double rho = c + (1.0 - c) * i / 101.0;
            double sup = 0.0;
            for (int j = 0; j < 720; ++j) {
                sup = std::max(sup, korenblum::cstar_circle(rho, 2.0 * std::numbers::pi * j / 720.0, dom).value);
            }
            worst = std::max(worst, sup - 1e-8 - korenblum::circle_sup_bound(rho, c));
        }
        EXPECT_LE(worst, 0.0) << "c=" << c;
    }
}

TEST(CircleSupBound, PointValues) {
    const korenblum::AnnulusDomain dom(0.21);
    const double F = korenblum::circle_sup_bound(0.5, 0.21);
    EXPECT_GT(F, 0.0);
    EXPECT_TRUE(std::isfinite(F));
    EXPECT_GE(korenblum::circle_sup_bound(0.3, 0.21), korenblum::cstar_circle(0.3, std::numbers::pi, dom).value);
    EXPECT_GE(korenblum::circle_sup_bound(0.999, 0.21), 1.0);
    EXPECT_THROW(korenblum::circle_sup_bound(0.1, 0.21), korenblum::domain_error);
}

TEST(GammaUpperBound, FiniteExactlyWhenFBelowOne) {
    EXPECT_EQ(korenblum::gamma_upper_bound(0.5, 0.21).has_value(), korenblum::circle_sup_bound(0.5, 0.21) < 1.0);
    EXPECT_FALSE(korenblum::gamma_upper_bound(0.999, 0.21).has_value());
    const double F = korenblum::circle_sup_bound(0.5, 0.21);
    ASSERT_TRUE(korenblum::gamma_upper_bound(0.5, 0.21));
    EXPECT_NEAR(*korenblum::gamma_upper_bound(0.5, 0.21), F / std::sqrt(1.0 - F * F), 1e-13);
}

TEST(GammaUpperBound, MonotoneInF) {
    std::vector<std::pair<double, double>> samples;
    for (double c : {0.1, 0.21}) {
        for (int i = 1; i < 400; ++i) {
            const double rho = c + (1.0 - c) * i / 400.0;
            if (auto g = korenblum::gamma_upper_bound(rho, c)) samples.emplace_back(korenblum::circle_sup_bound(rho, c), *g);
        }
    }
    ASSERT_GT(samples.size(), 100u);
    std::sort(samples.begin(), samples.end());
    for (std::size_t i = 1; i < samples.size(); ++i) ASSERT_LE(samples[i - 1].second, samples[i].second);
}

TEST(ClaimIds, RoundTrip) {
    for (Claim claim : korenblum::kAllClaims) EXPECT_EQ(korenblum::parse_claim(korenblum::claim_id(claim)), claim);
    EXPECT_FALSE(korenblum::parse_claim("no-such-claim"));
}

class DefaultGrids : public ::testing::TestWithParam<Claim> {};

TEST_P(DefaultGrids, Pass) {
    const auto report = korenblum::verify_claim(GetParam(), korenblum::default_grid(GetParam()), 4);
    EXPECT_TRUE(report.pass) << report.claim_id << " max_violation=" << report.max_violation;
    EXPECT_FALSE(report.low_density);
    EXPECT_GT(report.points_checked, 0);
    EXPECT_EQ(report.tolerance, korenblum::claim_tolerance(GetParam()));
}

INSTANTIATE_TEST_SUITE_P(AllClaims, DefaultGrids, ::testing::ValuesIn(korenblum::kAllClaims), [](const auto& info) {
    std::string name = korenblum::claim_id(info.param);
    std::replace(name.begin(), name.end(), '-', '_');
    return name;
});

TEST(Verifiers, ThreadCountDoesNotChangeReport) {
    const GridSpec grid = korenblum::default_grid(Claim::gn_theta_max);
    EXPECT_EQ(korenblum::verify_gn_theta_max(grid, 1), korenblum::verify_gn_theta_max(grid, 7));
}

TEST(Verifiers, FnSymmetryPointHasNoViolation) {
    const auto report = korenblum::verify_fn_bound(single_point(0.21, std::sqrt(0.21), 1, 10));
    EXPECT_LE(report.max_violation, 0.0);
    EXPECT_EQ(report.points_checked, 10);
}

TEST(Verifiers, EmptyNRangePasses) {
    for (Claim claim : korenblum::kAllClaims) {
        const auto report = korenblum::verify_claim(claim, single_point(0.21, 0.5, 3, 2));
        EXPECT_EQ(report.max_violation, 0.0) << korenblum::claim_id(claim);
        EXPECT_TRUE(report.pass);
    }
}

TEST(Verifiers, GnThetaZeroIsEquality) {
    GridSpec g = single_point(0.21, 0.5, 1, 1);
    g.theta_values = {0.0};
    EXPECT_EQ(korenblum::verify_gn_theta_max(g).max_violation, 0.0);
}

TEST(Verifiers, GnRandomSpotGrid) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    GridSpec g;
    g.c_values = {0.03, 0.12, 0.2, 0.2499};
    for (int i = 0; i < 50; ++i) g.rho_values.push_back(0.2499 + 0.75 * unit(rng));
    for (int j = 0; j < 50; ++j) g.theta_values.push_back(std::numbers::pi * unit(rng));
    g.n_max = 1;
    const auto report = korenblum::verify_gn_theta_max(g);
    EXPECT_GE(report.points_checked, 10000);
    EXPECT_TRUE(report.pass) << report.max_violation;
}

TEST(FgProduct, RatioLimitAndRegime) {
    EXPECT_NEAR(korenblum::fg_product_ratio(1e-6, 1), 1.0, 1e-5);
    for (int n = 1; n <= 60; ++n) EXPECT_LE(korenblum::fg_product_ratio(0.24, n), 1.0 + 1e-14);
    EXPECT_THROW(korenblum::fg_product_ratio(0.3, 0), korenblum::domain_error);
}

TEST(FgProduct, C024GridPasses) {
    GridSpec g = korenblum::default_grid(Claim::fg_product);
    g.c_values = {0.24};
    EXPECT_TRUE(korenblum::verify_fg_product_bound(g).pass);
}

// The closed-form ratio at n = 1 equals (1 + c^2)(1 - c + c^2) and stays below 1
// until c is about 0.5698, so c = 0.3 still satisfies the bound.
TEST(FgProduct, RatioAtNOneHasClosedForm) {
    for (double c : {0.1, 0.3, 0.6}) {
        EXPECT_NEAR(korenblum::fg_product_ratio(c, 1), (1.0 + c * c) * (1.0 - c + c * c), 1e-15);
    }
}

TEST(FgProduct, C03HoldsAndC06Violates) {
    GridSpec g = korenblum::default_grid(Claim::fg_product);
    g.c_values = {0.3};
    EXPECT_TRUE(korenblum::verify_fg_product_bound(g).pass);

    g.c_values = {0.6};
    const auto report = korenblum::verify_fg_product_bound(g);
    EXPECT_FALSE(report.pass);
    EXPECT_GT(report.max_violation, 0.03);
    EXPECT_EQ(report.worst_point.n, 1);
}

TEST(TailBound, SinglePointAgainstLongProduct) {
    const double c = 0.21;
    const double rho = 0.5;
    double tail = 1.0;
    for (int n = 6; n <= 200; ++n) tail *= korenblum::f_n_factor(rho, c, n) * korenblum::g_n_factor(rho, c, 0.0, n);
    EXPECT_LE(tail, korenblum::tail_closed_bound(c) + 1e-12);
    EXPECT_TRUE(korenblum::verify_tail_bound(single_point(c, rho, 6, 69)).pass);
}

TEST(TailBound, SmallCLimit) { EXPECT_NEAR(korenblum::tail_closed_bound(1e-3), 1.0, 1e-15); }

TEST(Tedious, EqualityAtPi) {
    GridSpec g = single_point(0.21, 0.5, 1, 5);
    g.theta_values = {std::numbers::pi};
    const auto report = korenblum::verify_tedious_bound(g);
    EXPECT_LE(std::abs(report.max_violation), 1e-12);
}

TEST(Tedious, RandomizedDenseScan) {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = -1.0;
    for (int i = 0; i < 100000; ++i) {
        const double c = 0.01 + 0.2399 * unit(rng);
        const double rho = c + (1.0 - c) * (1e-6 + (1.0 - 2e-6) * unit(rng));
        const double theta = std::numbers::pi * unit(rng);
        double lhs = 2.0 * std::sin(0.5 * theta);
        double rhs = 2.0;
        for (int n = 1; n <= 5; ++n) {
            lhs *= korenblum::g_n_factor(rho, c, theta, n);
            rhs *= korenblum::g_n_factor(rho, c, std::numbers::pi, n);
        }
        worst = std::max(worst, lhs - rhs);
    }
    EXPECT_LE(worst, 1e-10);
}

TEST(Tedious, CoarseGridIsFlagged) {
    GridSpec g = korenblum::default_grid(Claim::tedious);
    g.theta_steps = 4;
    const auto report = korenblum::verify_tedious_bound(g);
    EXPECT_TRUE(report.pass);
    EXPECT_TRUE(report.low_density);
}
