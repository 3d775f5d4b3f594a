#pragma once

// Globally adaptive 7/15-point Gauss-Kronrod integration.
//
// Each subinterval is integrated with the embedded Gauss and Kronrod rules and
// its error is taken as |K15 - G7| plus a roundoff floor. The interval with the
// largest error is bisected until the summed error falls below the tolerance
// or the subdivision cap is reached. |K15 - G7| is essentially the error of
// the 7-point rule, so for smooth integrands it overstates the error of the
// returned Kronrod value by a wide margin.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <queue>
#include <vector>

#include "korenblum/errors.hpp"

namespace korenblum {

struct QuadratureEstimate {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;

    friend bool operator==(const QuadratureEstimate&, const QuadratureEstimate&) = default;
};

inline constexpr double kDefaultQuadratureTol = 1e-9;
inline constexpr int kDefaultMaxIntervals = 10000;

namespace detail {

// Kronrod abscissae on [0,1]; odd indices are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
    double lo;
    double hi;
    double value;
    double error;
    long order;  // creation index; breaks ties so subdivision order is reproducible

    bool operator<(const Segment& other) const {
        if (error != other.error) return error < other.error;
        return order > other.order;
    }
};

template <typename Integrand>
double checked_eval(Integrand& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y)) throw domain_error("quadrature: integrand returned a non-finite value");
    return y;
}

template <typename Integrand>
Segment gauss_kronrod_15(Integrand& f, double lo, double hi, long order) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double f_center = checked_eval(f, center);
    double kronrod = f_center * kKronrodWeights[7];
    double gauss = f_center * kGaussWeights[3];
    double magnitude = std::abs(kronrod);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double f1 = checked_eval(f, center - dx);
        const double f2 = checked_eval(f, center + dx);
        kronrod += kKronrodWeights[i] * (f1 + f2);
        magnitude += kKronrodWeights[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
    }
    kronrod *= half;
    gauss *= half;
    magnitude *= std::abs(half);

    const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * magnitude;
    return {lo, hi, kronrod, std::abs(kronrod - gauss) + roundoff, order};
}

}  // namespace detail

/// Adaptive integral of `integrand` over [a, b].
template <typename Integrand>
QuadratureEstimate integrate_finite(Integrand&& integrand, double a, double b, double tol = kDefaultQuadratureTol,
                                    int max_intervals = kDefaultMaxIntervals) {
    detail::require(std::isfinite(a) && std::isfinite(b) && a < b, "integrate_finite: need finite a < b");
    detail::require(tol > 0.0, "integrate_finite: tol must be > 0");
    detail::require(max_intervals >= 1, "integrate_finite: max_intervals must be >= 1");

    long order = 0;
    std::priority_queue<detail::Segment> work;
    work.push(detail::gauss_kronrod_15(integrand, a, b, order++));
    long evaluations = 15;
    double total_error = work.top().error;

    // Segments too narrow to split are parked here with their final error.
    std::vector<detail::Segment> finished;
    while (total_error > tol && static_cast<int>(work.size() + finished.size()) < max_intervals && !work.empty()) {
        const detail::Segment worst = work.top();
        work.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            finished.push_back(worst);
            continue;
        }
        const detail::Segment left = detail::gauss_kronrod_15(integrand, worst.lo, mid, order++);
        const detail::Segment right = detail::gauss_kronrod_15(integrand, mid, worst.hi, order++);
        evaluations += 30;
        total_error += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
    }

    // Re-sum in interval order so the result does not depend on heap layout.
    while (!work.empty()) {
        finished.push_back(work.top());
        work.pop();
    }
    std::sort(finished.begin(), finished.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    QuadratureEstimate out;
    for (const auto& seg : finished) {
        out.value += seg.value;
        out.abs_error_estimate += seg.error;
    }
    out.evaluations = evaluations;
    out.converged = out.abs_error_estimate <= tol;
    return out;
}

/// Bound on integral_T^inf rho^2 e^{-rho^2} d rho = (T/2) e^{-T^2} + (sqrt(pi)/4) erfc(T).
inline double gaussian_moment_tail(double cutoff) {
    return 0.5 * cutoff * std::exp(-cutoff * cutoff) + 0.25 * std::sqrt(std::numbers::pi) * std::erfc(cutoff);
}

/// Integral over [a, inf) of an integrand with |f(rho)| <= decay_scale * rho^2 e^{-rho^2} for rho >= cutoff.
///
/// [a, cutoff] is integrated adaptively; the remainder beyond the cutoff is not
/// added to the value but its bound is folded into abs_error_estimate.
template <typename Integrand>
QuadratureEstimate integrate_gaussian_tail(Integrand&& integrand, double a, double tol, double decay_scale,
                                           std::optional<double> cutoff = std::nullopt,
                                           int max_intervals = kDefaultMaxIntervals) {
    detail::require(std::isfinite(a), "integrate_gaussian_tail: a must be finite");
    detail::require(tol > 0.0, "integrate_gaussian_tail: tol must be > 0");
    detail::require(decay_scale > 0.0 && std::isfinite(decay_scale), "integrate_gaussian_tail: decay_scale must be > 0");

    const double T = std::max(a, cutoff.value_or(8.0));
    detail::require(std::isfinite(T) && T >= 0.0, "integrate_gaussian_tail: cutoff must be finite and >= 0");
    const double remainder = decay_scale * gaussian_moment_tail(T);

    QuadratureEstimate out;
    if (T > a) out = integrate_finite(integrand, a, T, tol, max_intervals);
    out.abs_error_estimate += remainder;
    out.converged = out.abs_error_estimate <= tol;
    return out;
}

}  // namespace korenblum
