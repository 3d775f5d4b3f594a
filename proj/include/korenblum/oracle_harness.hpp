#pragma once

// Ground truth that does not go through the product formula or F:
// closed-form Bergman and Fock norms, an end-to-end check of the maximum
// principle on concrete pairs, and a brute-force lower bound for the annulus
// pseudodistance over Laurent-polynomial candidate maps.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "korenblum/annulus_distance.hpp"
#include "korenblum/certification.hpp"
#include "korenblum/errors.hpp"
#include "korenblum/laurent.hpp"
#include "korenblum/metrics.hpp"
#include "korenblum/quadrature.hpp"

namespace korenblum {

/// Highest degree accepted by fock_norm_sq before k! leaves double range.
inline constexpr int kFockMaxDegree = 150;

/// (1/pi) integral_D |p|^2 dA = sum |a_k|^2 / (k + 1).
inline double bergman_norm_sq(const LaurentFunction& p) {
    detail::require(p.is_polynomial(), "bergman_norm_sq: negative powers are not square-integrable on the disk");
    double sum = 0.0;
    for (int k = p.min_degree(); k <= p.max_degree(); ++k) sum += std::norm(p.coefficient(k)) / (k + 1);
    return sum;
}

/// integral_C |p|^2 e^{-|z|^2} dA = pi sum |a_k|^2 k!.
inline double fock_norm_sq(const LaurentFunction& p) {
    detail::require(p.is_polynomial(), "fock_norm_sq: negative powers are not entire");
    detail::require(p.max_degree() <= kFockMaxDegree, "fock_norm_sq: degree too large for unscaled factorials");
    double sum = 0.0;
    double factorial = 1.0;
    for (int k = 0; k <= p.max_degree(); ++k) {
        if (k > 0) factorial *= k;
        sum += std::norm(p.coefficient(k)) * factorial;
    }
    return std::numbers::pi * sum;
}

namespace detail {

/// Mean of |p|^2 on |z| = r by the equispaced rule, exact for Laurent polynomials
/// once the sample count exceeds twice the degree span.
inline double sampled_circle_mean_sq(const LaurentFunction& p, double r) {
    const int span = p.max_degree() - p.min_degree();
    const int samples = 4 * (span + 1) + 4;
    double sum = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double t = 2.0 * std::numbers::pi * j / samples;
        sum += std::norm(p(std::polar(r, t)));
    }
    return sum / samples;
}

}  // namespace detail

/// Bergman norm by numerical area integration: 2 integral_0^1 mean|p|^2(r) r dr.
inline QuadratureEstimate bergman_norm_sq_numeric(const LaurentFunction& p, double tol = 1e-10) {
    detail::require(p.is_polynomial(), "bergman_norm_sq_numeric: polynomial required");
    auto radial = [&](double r) { return 2.0 * detail::sampled_circle_mean_sq(p, r) * r; };
    return integrate_finite(radial, 0.0, 1.0, tol);
}

/// Fock norm by numerical area integration, 2 pi integral_0^inf mean|p|^2(r) e^{-r^2} r dr,
/// computed in u = r / sqrt(2) so the integrand is dominated by K u^2 e^{-u^2} past the cutoff.
inline QuadratureEstimate fock_norm_sq_numeric(const LaurentFunction& p, double tol = 1e-10) {
    detail::require(p.is_polynomial(), "fock_norm_sq_numeric: polynomial required");
    const int d = p.max_degree();
    double coeff_mass = 0.0;
    for (const Complex& a : p.coeffs()) coeff_mass += std::norm(a);

    // integrand(u) = 4 pi u mean(sqrt2 u) e^{-2u^2} <= 4 pi M 2^d u^{2d+1} e^{-2u^2} for u >= 1,
    // and u^{2d-1} e^{-u^2} is decreasing once u^2 >= (2d-1)/2.
    const double cutoff = std::max(8.0, std::sqrt(static_cast<double>(d)) + 2.0);
    const double K = 4.0 * std::numbers::pi * coeff_mass * std::pow(2.0, d) * std::pow(cutoff, 2 * d - 1) *
                     std::exp(-cutoff * cutoff);
    auto radial = [&](double u) {
        const double r = std::numbers::sqrt2 * u;
        return 4.0 * std::numbers::pi * u * detail::sampled_circle_mean_sq(p, r) * std::exp(-r * r);
    };
    return integrate_gaussian_tail(radial, 0.0, tol, std::max(K, std::numeric_limits<double>::min()), cutoff);
}

// ---------------------------------------------------------------------------
// Pair checker
// ---------------------------------------------------------------------------

struct PairReport {
    Space space = Space::bergman;
    double c = 0.0;
    double hypothesis_margin = 0.0;  // min over samples of |g| - |f|
    bool hypothesis_holds = false;
    bool infinity_check = true;  // fock: |f| <= |g| near infinity from degrees / leading coefficients
    double outer_radius = 1.0;   // largest sampled radius
    double norm_f_sq = 0.0;
    double norm_g_sq = 0.0;
    bool conclusion_holds = false;
    long samples = 0;

    friend bool operator==(const PairReport&, const PairReport&) = default;
};

namespace detail {

/// |g| - |f| with differences at rounding level reported as exactly zero.
inline double modulus_gap(Complex fz, Complex gz) {
    const double af = std::abs(fz);
    const double ag = std::abs(gz);
    const double gap = ag - af;
    return std::abs(gap) <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(af, ag) ? 0.0 : gap;
}

/// Radius beyond which |g| >= |f| follows from coefficient bounds, or nullopt
/// when degrees and leading coefficients do not force it.
inline std::optional<double> dominance_radius(const LaurentFunction& f, const LaurentFunction& g) {
    if (g.is_zero()) return f.is_zero() ? std::optional<double>(1.0) : std::nullopt;
    const int m = g.max_degree();
    const int df = f.is_zero() ? -1 : f.max_degree();
    if (df > m) return std::nullopt;
    double lead_gap = std::abs(g.coefficient(m));
    if (df == m) lead_gap -= std::abs(f.coefficient(m));
    if (lead_gap < 0.0) return std::nullopt;
    double lower = 0.0;
    for (int k = 0; k < m; ++k) lower += std::abs(f.coefficient(k)) + std::abs(g.coefficient(k));
    if (lead_gap == 0.0) return lower == 0.0 ? std::optional<double>(1.0) : std::nullopt;
    return std::max(1.0, lower / lead_gap);
}

}  // namespace detail

/// Checks the maximum-principle statement on a concrete polynomial pair.
///
/// Bergman: |g| - |f| is sampled on grid_density circles spanning [c, 1] (both
/// boundary circles included) at grid_density angles each. Fock: radii span
/// [c, R] with R past the coefficient dominance radius, and an exact degree /
/// leading-coefficient test covers |z| -> infinity.
inline PairReport check_pair(const LaurentFunction& f, const LaurentFunction& g, double c, Space space,
                             int grid_density = 64) {
    detail::require(f.is_polynomial() && g.is_polynomial(), "check_pair: polynomial pair required");
    detail::require(grid_density >= 2, "check_pair: grid_density must be >= 2");
    if (space == Space::bergman) {
        detail::require(c > 0.0 && c < 1.0, "check_pair: bergman needs c in (0,1)");
    } else {
        detail::require(c > 0.0 && std::isfinite(c), "check_pair: fock needs c > 0");
    }

    PairReport report;
    report.space = space;
    report.c = c;

    double outer = 1.0;
    if (space == Space::fock) {
        const auto dominance = detail::dominance_radius(f, g);
        report.infinity_check = dominance.has_value();
        outer = std::max(2.0 * c, dominance.value_or(2.0 * c + 1.0)) * 1.25;
    }
    report.outer_radius = outer;

    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_density; ++i) {
        const double r = c + (outer - c) * i / (grid_density - 1);
        for (int j = 0; j < grid_density; ++j) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / grid_density);
            margin = std::min(margin, detail::modulus_gap(f(z), g(z)));
            ++report.samples;
        }
    }
    report.hypothesis_margin = margin;
    report.hypothesis_holds = margin >= 0.0 && report.infinity_check;

    if (space == Space::bergman) {
        report.norm_f_sq = bergman_norm_sq(f);
        report.norm_g_sq = bergman_norm_sq(g);
    } else {
        report.norm_f_sq = fock_norm_sq(f);
        report.norm_g_sq = fock_norm_sq(g);
    }
    report.conclusion_holds = report.norm_f_sq <= report.norm_g_sq;
    return report;
}

// ---------------------------------------------------------------------------
// Brute-force lower bound for c*_{A(c,1)}
// ---------------------------------------------------------------------------

inline constexpr int kBoundarySamples = 512;
inline constexpr double kBoundaryHeadroom = 1e-6;

namespace detail {

/// Candidate maps w -> sum_{k=-D}^{D} b_k w^k, scaled so a certified bound on
/// max |w| over both boundary circles equals 1 - kBoundaryHeadroom.
///
/// On |w| = r the candidate is a trigonometric polynomial of degree D, and
/// for N > 2D equispaced samples its sup is at most max_j |T(t_j)| / cos(pi D / N).
class CandidateFamily {
public:
    CandidateFamily(double a, Complex z, double c, int degree) : degree_(degree) {
        const int terms = 2 * degree + 1;
        powers_a_ = powers(Complex(a, 0.0), terms);
        powers_z_ = powers(z, terms);
        boundary_.reserve(static_cast<std::size_t>(2 * kBoundarySamples));
        for (double r : {c, 1.0}) {
            for (int j = 0; j < kBoundarySamples; ++j) {
                boundary_.push_back(powers(std::polar(r, 2.0 * std::numbers::pi * j / kBoundarySamples), terms));
            }
        }
        slack_ = 1.0 / std::cos(std::numbers::pi * degree / kBoundarySamples);
    }

    int parameter_count() const { return 2 * (2 * degree_ + 1); }

    double objective(const std::vector<double>& params) const {
        double boundary_max = 0.0;
        for (const auto& row : boundary_) boundary_max = std::max(boundary_max, std::abs(apply(params, row)));
        if (!(boundary_max > 0.0) || !std::isfinite(boundary_max)) return 0.0;
        const double scale = (1.0 - kBoundaryHeadroom) / (boundary_max * slack_);
        const Complex wa = scale * apply(params, powers_a_);
        const Complex wz = scale * apply(params, powers_z_);
        if (!(std::abs(wa) < 1.0) || !(std::abs(wz) < 1.0)) return 0.0;
        return pseudo_distance(wa, wz);
    }

private:
    std::vector<Complex> powers(Complex w, int terms) const {
        std::vector<Complex> out(static_cast<std::size_t>(terms));
        const Complex inv = 1.0 / w;
        out[static_cast<std::size_t>(degree_)] = 1.0;
        for (int k = 1; k <= degree_; ++k) {
            out[static_cast<std::size_t>(degree_ + k)] = out[static_cast<std::size_t>(degree_ + k - 1)] * w;
            out[static_cast<std::size_t>(degree_ - k)] = out[static_cast<std::size_t>(degree_ - k + 1)] * inv;
        }
        return out;
    }

    static Complex apply(const std::vector<double>& params, const std::vector<Complex>& row) {
        Complex acc(0.0, 0.0);
        for (std::size_t k = 0; k < row.size(); ++k) acc += Complex(params[2 * k], params[2 * k + 1]) * row[k];
        return acc;
    }

    int degree_;
    std::vector<Complex> powers_a_;
    std::vector<Complex> powers_z_;
    std::vector<std::vector<Complex>> boundary_;
    double slack_ = 1.0;
};

/// Compass search: try +-step along each coordinate, halve the step after a sweep with no gain.
inline double coordinate_search(const CandidateFamily& family, std::vector<double>& x, double step = 0.5,
                                 double min_step = 1e-7, int max_sweeps = 400) {
    double best = family.objective(x);
    for (int sweep = 0; sweep < max_sweeps && step >= min_step; ++sweep) {
        bool improved = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (double dir : {1.0, -1.0}) {
                const double saved = x[i];
                x[i] = saved + dir * step;
                const double value = family.objective(x);
                if (value > best) {
                    best = value;
                    improved = true;
                    break;
                }
                x[i] = saved;
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

}  // namespace detail

/// Best d(w(a), w(z)) found over Laurent candidates of degree 1..`degree`.
///
/// Runs `restarts` local searches per degree, each with its own generator
/// seeded from (seed, degree, restart); the first degree-1 run starts from the
/// identity map. The result is the max over all runs, so it is nondecreasing in
/// both degree and restarts.
inline double cstar_lower_bound(double a, Complex z, AnnulusDomain dom, int degree, int restarts, std::uint64_t seed = 0) {
    const double c = dom.c;
    detail::require(a > c && a < 1.0, "cstar_lower_bound: a must lie in (c,1)");
    detail::require(is_finite(z) && std::abs(z) > c && std::abs(z) < 1.0, "cstar_lower_bound: |z| must lie in (c,1)");
    detail::require(degree >= 1 && restarts >= 1, "cstar_lower_bound: degree and restarts must be >= 1");

    double best = 0.0;
    for (int d = 1; d <= degree; ++d) {
        const detail::CandidateFamily family(a, z, c, d);
        for (int r = 0; r < restarts; ++r) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                              static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(r)};
            std::mt19937_64 rng(seq);
            std::normal_distribution<double> normal(0.0, 1.0);
            std::vector<double> x(static_cast<std::size_t>(family.parameter_count()));
            if (d == 1 && r == 0) {
                x[2 * 2] = 1.0;  // w -> w
            } else {
                for (double& v : x) v = normal(rng);
            }
            best = std::max(best, detail::coordinate_search(family, x));
        }
    }
    return best;
}

}  // namespace korenblum
