#pragma once

// Randomized checks of the elementary identities in metrics.hpp, reported in
// the same ClaimReport form as the grid verifiers. Sample counts and
// tolerances are the ones the verify command runs with.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "korenblum/bound_engine.hpp"
#include "korenblum/metrics.hpp"

namespace korenblum {

enum class MetricSuite { symmetry, origin_distance, ratio_identity, square_gap, quotient_identity, circle_mean };

inline constexpr MetricSuite kAllMetricSuites[] = {MetricSuite::symmetry,       MetricSuite::origin_distance,
                                                   MetricSuite::ratio_identity, MetricSuite::square_gap,
                                                   MetricSuite::quotient_identity, MetricSuite::circle_mean};

inline std::string metric_suite_id(MetricSuite suite) {
    switch (suite) {
        case MetricSuite::symmetry: return "metrics-symmetry";
        case MetricSuite::origin_distance: return "metrics-origin-distance";
        case MetricSuite::ratio_identity: return "metrics-ratio-identity";
        case MetricSuite::square_gap: return "metrics-square-gap";
        case MetricSuite::quotient_identity: return "metrics-quotient-identity";
        case MetricSuite::circle_mean: return "metrics-circle-mean";
    }
    return "unknown";
}

namespace detail {

class DiskSampler {
public:
    explicit DiskSampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in area on {|z| <= radius}.
    Complex point(double radius) {
        const double r = radius * std::sqrt(unit_(rng_));
        return std::polar(r, 2.0 * std::numbers::pi * unit_(rng_));
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit_(rng_); }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

inline ClaimReport suite_report(MetricSuite suite, double max_violation, long samples, double tolerance) {
    ClaimReport report;
    report.claim_id = metric_suite_id(suite);
    report.max_violation = samples == 0 ? 0.0 : max_violation;
    report.tolerance = tolerance;
    report.points_checked = samples;
    report.pass = report.max_violation <= tolerance;
    return report;
}

}  // namespace detail

inline ClaimReport run_metric_suite(MetricSuite suite, std::uint64_t seed = 0) {
    detail::DiskSampler sampler(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(suite) + 1)));
    double worst = -std::numeric_limits<double>::infinity();
    long samples = 0;
    auto offer = [&](double v) {
        worst = std::max(worst, v);
        ++samples;
    };

    switch (suite) {
        case MetricSuite::symmetry:
            for (int i = 0; i < 10000; ++i) {
                const DiskPoint a = sampler.point(0.99);
                const DiskPoint b = sampler.point(0.99);
                offer(std::abs(pseudo_distance(a, b) - pseudo_distance(b, a)));
            }
            return detail::suite_report(suite, worst, samples, 0.0);
        case MetricSuite::origin_distance:
            for (int i = 0; i < 10000; ++i) {
                const DiskPoint b = sampler.point(0.99);
                offer(std::abs(pseudo_distance(0.0, b) - b.modulus()));
            }
            return detail::suite_report(suite, worst, samples, 1e-15);
        case MetricSuite::ratio_identity:
            for (int i = 0; i < 10000; ++i) offer(ratio_identity_residual(sampler.point(0.99), sampler.point(0.99)));
            return detail::suite_report(suite, worst, samples, 1e-12);
        case MetricSuite::square_gap:
            for (int i = 0; i < 100000; ++i) offer(-square_difference_gap(sampler.point(10.0), sampler.point(10.0)));
            return detail::suite_report(suite, worst, samples, 1e-15);
        case MetricSuite::quotient_identity:
            for (int i = 0; i < 10000; ++i) {
                const Complex g = sampler.point(2.0) + Complex(0.1, 0.0);
                const Complex f = g * sampler.point(0.99);
                if (g == Complex(0.0, 0.0) || !(std::abs(f) < std::abs(g))) continue;
                offer(quotient_identity_residual(f, g, sampler.point(0.99)));
            }
            return detail::suite_report(suite, worst, samples, 1e-10);
        case MetricSuite::circle_mean:
            for (int i = 0; i < 1000; ++i) {
                std::vector<Complex> coeffs(static_cast<std::size_t>(sampler.integer(0, 8) + 1));
                for (Complex& a : coeffs) a = sampler.point(3.0);
                double r1 = sampler.uniform(0.0, 1.0);
                double r2 = sampler.uniform(0.0, 1.0);
                if (r1 > r2) std::swap(r1, r2);
                offer(circle_mean_modulus_sq(coeffs, r1) - circle_mean_modulus_sq(coeffs, r2));
            }
            return detail::suite_report(suite, worst, samples, 0.0);
    }
    throw domain_error("run_metric_suite: unknown suite");
}

}  // namespace korenblum
