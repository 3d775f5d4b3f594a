#pragma once

// Numerical certification of the maximum-principle constant.
//
// Bergman:  criterion(c) = c^2 / integral_c^1 rho sqrt(1 - F^2) / F d rho
// Fock:     criterion(c) = 2c (1 - e^{-c^2}) / integral_c^inf e^{-rho^2} (rho^2 - c^2) d rho
//
// A constant c is certified numerically when criterion + error_budget < 1.
// The budget is built from quadrature error estimates; it is not a proof.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "korenblum/annulus_distance.hpp"
#include "korenblum/bound_engine.hpp"
#include "korenblum/errors.hpp"
#include "korenblum/quadrature.hpp"

namespace korenblum {

enum class Space { bergman, fock };

inline std::string space_name(Space space) { return space == Space::bergman ? "bergman" : "fock"; }

inline std::optional<Space> parse_space(const std::string& name) {
    if (name == "bergman") return Space::bergman;
    if (name == "fock") return Space::fock;
    return std::nullopt;
}

struct Certificate {
    Space space = Space::bergman;
    double c = 0.0;
    double numerator = 0.0;
    QuadratureEstimate denominator;
    double criterion = 0.0;
    double error_budget = 0.0;
    bool pass = false;
    TruncationPolicy truncation_policy;
    double clamped_fraction = 0.0;  // share of (c,1) where F >= 1; bergman only
    std::optional<double> closed_form_denominator;  // fock only

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Number of samples used to locate the set where F(rho,c) >= 1.
inline constexpr int kBoundaryScanPoints = 1000;

/// rho sqrt(1 - F^2) / F where F(rho,c) < 1, and 0 where F >= 1.
///
/// gamma^{-1} >= sqrt(1 - F^2)/F >= 0, and the criterion only needs a lower
/// bound on integral gamma^{-1} rho, so zero is the admissible value where F >= 1.
inline double bergman_integrand(double rho, double c) {
    const double F = circle_sup_bound(rho, c);
    if (F >= 1.0) return 0.0;
    return rho * std::sqrt((1.0 - F) * (1.0 + F)) / F;
}

/// Maximal subintervals of (c,1) on which F(rho,c) < 1, located by a sample
/// scan and refined by bisection at every sign change of F - 1.
inline std::vector<std::pair<double, double>> bergman_support(double c, int scan_points = kBoundaryScanPoints) {
    detail::require(c > 0.0 && c < 1.0, "bergman_support: c must lie in (0,1)");
    const double width = 1.0 - c;
    const double edge = width * 1e-12;

    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(scan_points) + 1);
    samples.push_back(c + edge);
    for (int i = 1; i < scan_points; ++i) samples.push_back(c + width * i / scan_points);
    samples.push_back(1.0 - edge);

    auto below = [c](double rho) { return circle_sup_bound(rho, c) < 1.0; };
    auto crossing = [&](double lo, double hi) {
        const bool lo_below = below(lo);
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (below(mid) == lo_below ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };

    std::vector<std::pair<double, double>> pieces;
    bool inside = below(samples.front());
    double start = c;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const bool now = below(samples[i]);
        if (now == inside) continue;
        const double root = crossing(samples[i - 1], samples[i]);
        if (inside) pieces.emplace_back(start, root);
        start = root;
        inside = now;
    }
    if (inside) pieces.emplace_back(start, 1.0);
    return pieces;
}

namespace detail {

inline void finish_certificate(Certificate& cert, double tol) {
    const double D = cert.denominator.value;
    const double err = cert.denominator.abs_error_estimate;
    if (!(D > tol) || !(D > err)) {
        throw degenerate_error(space_name(cert.space) + " criterion at c=" + std::to_string(cert.c) +
                               ": denominator integral vanishes, criterion is unbounded");
    }
    cert.criterion = cert.numerator / D;
    // First-order propagation of the denominator error through the quotient.
    cert.error_budget = cert.numerator * err / (D * D);
    cert.pass = cert.criterion + cert.error_budget < 1.0;
}

}  // namespace detail

/// c^2 / integral_c^1 bergman_integrand. The integral is split at the edges of
/// the F >= 1 set so the adaptive rule never straddles a kink.
///
/// F is a closed form with no truncated product inside, so the truncation
/// policy is only recorded in the certificate.
inline Certificate bergman_criterion(double c, double tol = kDefaultQuadratureTol, const TruncationPolicy& trunc = {}) {
    detail::require(std::isfinite(c) && c > 0.0 && c < 1.0, "bergman_criterion: c must lie in (0,1)");
    detail::require(tol > 0.0, "bergman_criterion: tol must be > 0");
    trunc.validate();

    Certificate cert;
    cert.space = Space::bergman;
    cert.c = c;
    cert.numerator = c * c;
    cert.truncation_policy = trunc;

    const auto pieces = bergman_support(c);
    double support = 0.0;
    for (const auto& [lo, hi] : pieces) support += hi - lo;

    QuadratureEstimate total;
    total.converged = true;
    for (const auto& [lo, hi] : pieces) {
        if (!(hi > lo)) continue;
        const double local_tol = tol * (hi - lo) / support;
        const QuadratureEstimate part =
            integrate_finite([c](double rho) { return bergman_integrand(rho, c); }, lo, hi, local_tol);
        total.value += part.value;
        total.abs_error_estimate += part.abs_error_estimate;
        total.evaluations += part.evaluations;
        total.converged = total.converged && part.converged;
    }
    cert.denominator = total;
    cert.clamped_fraction = std::clamp((1.0 - c - support) / (1.0 - c), 0.0, 1.0);
    detail::finish_certificate(cert, tol);
    return cert;
}

/// gamma(rho) <= 2 c rho / (rho^2 - c^2) on A(c, inf).
inline double fock_gamma_upper(double rho, double c) {
    detail::require(std::isfinite(rho) && std::isfinite(c) && c > 0.0, "fock_gamma_upper: c must be > 0");
    detail::require(rho > c, "fock_gamma_upper: rho must exceed c");
    return 2.0 * c * rho / ((rho - c) * (rho + c));
}

/// integral_c^inf e^{-rho^2}(rho^2 - c^2) d rho = (c/2) e^{-c^2} + (sqrt(pi)/4)(1 - 2c^2) erfc(c).
inline double fock_denominator_closed_form(double c) {
    return 0.5 * c * std::exp(-c * c) + 0.25 * std::sqrt(std::numbers::pi) * (1.0 - 2.0 * c * c) * std::erfc(c);
}

inline constexpr double kFockClosedFormAgreement = 1e-8;

inline Certificate fock_criterion(double c, double tol = kDefaultQuadratureTol) {
    detail::require(std::isfinite(c) && c > 0.0, "fock_criterion: c must be > 0");
    detail::require(tol > 0.0, "fock_criterion: tol must be > 0");

    Certificate cert;
    cert.space = Space::fock;
    cert.c = c;
    cert.numerator = -2.0 * c * std::expm1(-c * c);
    // |e^{-rho^2}(rho^2 - c^2)| <= rho^2 e^{-rho^2} on [c, inf).
    cert.denominator = integrate_gaussian_tail([c](double rho) { return std::exp(-rho * rho) * (rho * rho - c * c); },
                                               c, tol, 1.0);
    const double closed = fock_denominator_closed_form(c);
    cert.closed_form_denominator = closed;
    if (std::abs(closed - cert.denominator.value) > kFockClosedFormAgreement) {
        throw consistency_error("fock_criterion: quadrature and closed-form denominators disagree at c=" +
                                std::to_string(c));
    }
    detail::finish_certificate(cert, tol);
    return cert;
}

inline Certificate certify(Space space, double c, double tol = kDefaultQuadratureTol, const TruncationPolicy& trunc = {}) {
    if (space == Space::bergman) return bergman_criterion(c, tol, trunc);
    Certificate cert = fock_criterion(c, tol);
    cert.truncation_policy = trunc;
    return cert;
}

// ---------------------------------------------------------------------------
// Search for the largest certifiable constant
// ---------------------------------------------------------------------------

struct SearchResult {
    Space space = Space::bergman;
    double c_max = 0.0;
    std::pair<double, double> bracket;
    int iterations = 0;
    Certificate lo_certificate;
    std::optional<Certificate> hi_certificate;  // empty when the failing side is degenerate

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

struct SearchOptions {
    double width = 1e-4;  // bisection stops once hi - lo <= width
    double tol = kDefaultQuadratureTol;
    TruncationPolicy trunc;
    int scan_points = 17;  // coarse monotonicity scan over [lo, hi], endpoints included
};

namespace detail {

struct Probe {
    bool pass = false;
    std::optional<Certificate> cert;
};

inline Probe probe(Space space, double c, const SearchOptions& opts) {
    try {
        Certificate cert = certify(space, c, opts.tol, opts.trunc);
        return {cert.pass, std::move(cert)};
    } catch (const degenerate_error&) {
        return {false, std::nullopt};
    }
}

}  // namespace detail

/// Bisects for the pass/fail boundary of certify(space, .) in [lo, hi].
///
/// A coarse scan first checks that pass/fail is monotone along [lo, hi]
/// (passing below, failing above); a non-monotone scan raises
/// monotonicity_error. If lo does not pass or hi does not fail, the scan's
/// transition is used as the bracket; with no transition, bracket_error.
inline SearchResult search_max_constant(Space space, double lo, double hi, const SearchOptions& opts = {}) {
    detail::require(std::isfinite(lo) && std::isfinite(hi) && lo < hi, "search_max_constant: need lo < hi");
    detail::require(lo > 0.0 && (space == Space::fock || hi < 1.0), "search_max_constant: bracket outside the domain");
    detail::require(opts.width > 0.0 && opts.scan_points >= 2, "search_max_constant: invalid options");

    std::vector<double> cs;
    std::vector<detail::Probe> probes;
    for (int i = 0; i < opts.scan_points; ++i) {
        const double c = (i + 1 == opts.scan_points) ? hi : lo + (hi - lo) * i / (opts.scan_points - 1);
        cs.push_back(c);
        probes.push_back(detail::probe(space, c, opts));
    }

    std::size_t first_fail = probes.size();
    for (std::size_t i = 0; i < probes.size(); ++i) {
        if (!probes[i].pass) {
            first_fail = i;
            break;
        }
    }
    for (std::size_t i = first_fail; i < probes.size(); ++i) {
        if (probes[i].pass) {
            throw monotonicity_error("search_max_constant: certify passes at c=" + std::to_string(cs[i]) +
                                     " after failing at c=" + std::to_string(cs[first_fail]));
        }
    }
    if (first_fail == 0 || first_fail == probes.size()) {
        throw bracket_error("search_max_constant: no pass/fail transition in [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "] (" + (first_fail == 0 ? "lower end fails" : "upper end passes") +
                            ")");
    }

    double a = cs[first_fail - 1];
    double b = cs[first_fail];
    detail::Probe pass_side = probes[first_fail - 1];
    detail::Probe fail_side = probes[first_fail];
    int iterations = 0;
    while (b - a > opts.width) {
        const double mid = 0.5 * (a + b);
        detail::Probe p = detail::probe(space, mid, opts);
        ++iterations;
        if (p.pass) {
            a = mid;
            pass_side = std::move(p);
        } else {
            b = mid;
            fail_side = std::move(p);
        }
    }

    SearchResult result;
    result.space = space;
    result.c_max = a;
    result.bracket = {a, b};
    result.iterations = iterations;
    result.lo_certificate = *pass_side.cert;
    result.hi_certificate = fail_side.cert;
    return result;
}

}  // namespace korenblum
