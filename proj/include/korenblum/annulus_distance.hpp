#pragma once

// Moebius pseudodistance of a circular annulus from the classical infinite
// product. Three independent evaluation paths are provided:
//
//   * product_f / cstar_symmetric on A(1/R, R),
//   * cstar_annulus, the product written out directly in A(c, 1) coordinates,
//   * cstar_circle, the same-circle specialization as a product of f_n g_n.
//
// All products have factors of the form prod_i (1 - x_i q^n)^{+-1} with
// q = R^{-4} (= c^2 on A(c,1)), so the tail after N factors is bounded by
// |log tail| <= sum_i |C_i| q^{N+1} / ((1 - q)(1 - max_i |C_i| q^{N+1})).

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <limits>
#include <string>

#include "korenblum/errors.hpp"
#include "korenblum/factors.hpp"
#include "korenblum/metrics.hpp"

namespace korenblum {

/// The annulus {1/R < |z| < R}.
struct SymmetricAnnulus {
    double R;

    explicit SymmetricAnnulus(double outer_radius) : R(outer_radius) {
        detail::require(std::isfinite(R) && R > 1.0, "SymmetricAnnulus: R must be > 1");
    }
};

/// The annulus A(c,1) = {c < |z| < 1}.
struct AnnulusDomain {
    double c;

    explicit AnnulusDomain(double inner_radius) : c(inner_radius) {
        detail::require(std::isfinite(c) && c > 0.0 && c < 1.0, "AnnulusDomain: c must lie in (0,1)");
    }
};

struct TruncationPolicy {
    double epsilon = 1e-12;  // target relative truncation error
    int max_terms = 64;
    int min_terms = 1;  // never stop before this many factors

    void validate() const {
        detail::require(epsilon > 0.0 && std::isfinite(epsilon), "TruncationPolicy: epsilon must be > 0");
        detail::require(max_terms >= 1, "TruncationPolicy: max_terms must be >= 1");
        detail::require(min_terms >= 1 && min_terms <= max_terms, "TruncationPolicy: need 1 <= min_terms <= max_terms");
    }

    friend bool operator==(const TruncationPolicy&, const TruncationPolicy&) = default;
};

/// A truncated product. truncation_bound is relative: |true - value| <= truncation_bound * |value|.
struct ProductEvaluation {
    Complex value;
    double truncation_bound = 0.0;
    int terms_used = 0;
};

/// A pseudodistance value. truncation_bound is absolute.
struct CstarEvaluation {
    double value = 0.0;
    double truncation_bound = 0.0;
    int terms_used = 0;
    bool clamped = false;  // rounding pushed the value above 1 and it was reset to 1
};

namespace detail {

/// Geometric tail of a product whose n-th factor is prod_i (1 - x_i)^{+-1}, |x_i| = C_i q^n.
class GeometricTail {
public:
    GeometricTail(double ratio, std::initializer_list<double> coefficients) : ratio_(ratio) {
        for (double coeff : coefficients) {
            coeff_sum_ += std::abs(coeff);
            coeff_max_ = std::max(coeff_max_, std::abs(coeff));
        }
    }

    /// Bound on |log prod_{n > terms} factor_n|; +inf when the bound is not yet usable.
    double log_bound_after(int terms) const {
        const double qn = std::pow(ratio_, terms + 1);
        const double largest = coeff_max_ * qn;
        if (largest >= 1.0 || ratio_ >= 1.0) return std::numeric_limits<double>::infinity();
        return coeff_sum_ * qn / ((1.0 - ratio_) * (1.0 - largest));
    }

private:
    double ratio_;
    double coeff_sum_ = 0.0;
    double coeff_max_ = 0.0;
};

template <typename Factor>
ProductEvaluation truncated_product(Complex prefix, Factor&& factor, const GeometricTail& tail,
                                    const TruncationPolicy& policy, const char* who) {
    policy.validate();
    Complex acc = prefix;
    for (int n = 1; n <= policy.max_terms; ++n) {
        const Complex term = factor(n);
        acc *= term;
        if (n < policy.min_terms) continue;
        const double current = std::abs(std::log(term));
        const double remainder = std::expm1(tail.log_bound_after(n));
        if (current < policy.epsilon / 4.0 && remainder <= policy.epsilon / 2.0) {
            return {acc, remainder, n};
        }
    }
    throw nonconvergence_error(std::string(who) + ": truncation target not reached within max_terms");
}

inline Complex checked_ratio(Complex num, Complex den, const char* who) {
    if (den == Complex(0.0, 0.0)) throw singularity_error(std::string(who) + ": vanishing denominator factor");
    return num / den;
}

inline CstarEvaluation finish_cstar(double value, double relative_bound, int terms) {
    CstarEvaluation out{value, value * relative_bound, terms, false};
    if (out.value > 1.0) {
        out.value = 1.0;
        out.clamped = true;
    }
    return out;
}

}  // namespace detail

/// f(a,z) = (1 - z/a) prod_n [(1 - (z/a)R^{-4n})(1 - (a/z)R^{-4n})] / [(1 - az R^{2-4n})(1 - (az)^{-1} R^{2-4n})].
inline ProductEvaluation product_f(double a, Complex z, SymmetricAnnulus ann, const TruncationPolicy& trunc = {}) {
    const double R = ann.R;
    detail::require(std::isfinite(a) && a > 1.0 / R && a < R, "product_f: a must lie in (1/R, R)");
    detail::require(is_finite(z) && z != Complex(0.0, 0.0), "product_f: z must be finite and nonzero");

    const double q = 1.0 / (R * R * R * R);
    const double R2 = R * R;
    const Complex za = z / a;
    const Complex az_ = a / z;
    const Complex prod = a * z;
    const Complex inv_prod = 1.0 / prod;

    const detail::GeometricTail tail(q, {std::abs(za), std::abs(az_), std::abs(prod) * R2, R2 * std::abs(inv_prod)});
    auto factor = [&](int n) {
        const double qn = std::pow(q, n);
        const Complex num = (1.0 - za * qn) * (1.0 - az_ * qn);
        const Complex den = (1.0 - prod * R2 * qn) * (1.0 - inv_prod * R2 * qn);
        return detail::checked_ratio(num, den, "product_f");
    };
    return detail::truncated_product(1.0 - za, factor, tail, trunc, "product_f");
}

/// c*_P(a,z) = f(1/a, -|z|) |f(a,z)| / (R|z|) on P = A(1/R, R), real base point a > 0.
inline CstarEvaluation cstar_symmetric(double a, Complex z, SymmetricAnnulus ann, const TruncationPolicy& trunc = {}) {
    const double R = ann.R;
    const double r = std::abs(z);
    detail::require(std::isfinite(a) && a > 1.0 / R && a < R, "cstar_symmetric: a must lie in (1/R, R)");
    detail::require(is_finite(z) && r > 1.0 / R && r < R, "cstar_symmetric: |z| must lie in (1/R, R)");

    const ProductEvaluation radial = product_f(1.0 / a, Complex(-r, 0.0), ann, trunc);
    const ProductEvaluation at_z = product_f(a, z, ann, trunc);
    const double value = radial.value.real() * std::abs(at_z.value) / (R * r);
    const double rel = (1.0 + radial.truncation_bound) * (1.0 + at_z.truncation_bound) - 1.0;
    return detail::finish_cstar(value, rel, std::max(radial.terms_used, at_z.terms_used));
}

/// General base point: c* is invariant under rotations of the annulus.
inline CstarEvaluation cstar_symmetric(Complex a, Complex z, SymmetricAnnulus ann, const TruncationPolicy& trunc = {}) {
    detail::require(is_finite(a) && a != Complex(0.0, 0.0), "cstar_symmetric: a must be finite and nonzero");
    const double modulus = std::abs(a);
    return cstar_symmetric(modulus, z * std::conj(a) / modulus, ann, trunc);
}

/// c*_{A(c,1)}(rho, z), the product written out in A(c,1) coordinates.
inline CstarEvaluation cstar_annulus(double rho, Complex z, AnnulusDomain dom, const TruncationPolicy& trunc = {}) {
    const double c = dom.c;
    const double r = std::abs(z);
    detail::require(std::isfinite(rho) && rho > c && rho < 1.0, "cstar_annulus: rho must lie in (c,1)");
    detail::require(is_finite(z) && r > c && r < 1.0, "cstar_annulus: |z| must lie in (c,1)");

    const double q = c * c;
    const double pr = rho * r;
    const Complex z_over_rho = z / rho;
    const Complex rho_over_z = rho / z;
    const Complex rho_z = rho * z;
    const Complex inv_rho_z = 1.0 / rho_z;

    // |term| = C * q^n for each of the eight factor terms.
    const detail::GeometricTail tail(q, {pr / c, c / pr, r / rho, rho / r, r / (rho * c), rho / (r * c), pr / q, 1.0 / pr});
    auto factor = [&](int n) {
        const double qn = std::pow(q, n);
        const double c_odd = qn / c;  // c^{2n-1}
        const Complex num = (1.0 + pr * c_odd) * (1.0 + c * qn / pr) * (1.0 - z_over_rho * qn) * (1.0 - rho_over_z * qn);
        const Complex den = (1.0 + (r / rho) * c_odd) * (1.0 + (rho / r) * c_odd) * (1.0 - rho_z * (qn / q)) *
                            (1.0 - inv_rho_z * qn);
        return detail::checked_ratio(num, den, "cstar_annulus");
    };
    const double prefix = (c / r) * (1.0 + pr / c) * std::abs(1.0 - z_over_rho);
    const ProductEvaluation prod = detail::truncated_product(Complex(prefix, 0.0), factor, tail, trunc, "cstar_annulus");
    return detail::finish_cstar(std::abs(prod.value), prod.truncation_bound, prod.terms_used);
}

/// General base point on a circle |a| in (c,1), reduced to a real one by rotation.
inline CstarEvaluation cstar_annulus(Complex a, Complex z, AnnulusDomain dom, const TruncationPolicy& trunc = {}) {
    detail::require(is_finite(a) && a != Complex(0.0, 0.0), "cstar_annulus: base point must be finite and nonzero");
    const double modulus = std::abs(a);
    return cstar_annulus(modulus, z * std::conj(a) / modulus, dom, trunc);
}

/// c*_{A(c,1)}(rho, rho e^{i theta}) = (c/rho)(1 + rho^2/c) sqrt(2(1 - cos theta)) prod f_n g_n.
inline CstarEvaluation cstar_circle(double rho, double theta, AnnulusDomain dom, const TruncationPolicy& trunc = {}) {
    const double c = dom.c;
    detail::require(std::isfinite(rho) && rho > c && rho < 1.0, "cstar_circle: rho must lie in (c,1)");
    detail::require(std::isfinite(theta), "cstar_circle: non-finite theta");

    const double q = c * c;
    const double rho2 = rho * rho;
    const double cos_theta = std::cos(theta);
    const detail::GeometricTail tail(q, {rho2 / c, c / rho2, 1.0 / c, 1.0 / c, 1.0, 1.0, rho2 / q, 1.0 / rho2});
    auto factor = [&](int n) {
        return Complex(detail::f_n_unchecked(rho, c, n) * detail::g_n_unchecked(rho, c, cos_theta, n), 0.0);
    };
    // sqrt(2(1 - cos t)) = 2|sin(t/2)|, without the cancellation near t = 0.
    const double prefix = (c / rho) * (1.0 + rho2 / c) * 2.0 * std::abs(std::sin(0.5 * theta));
    const ProductEvaluation prod = detail::truncated_product(Complex(prefix, 0.0), factor, tail, trunc, "cstar_circle");
    return detail::finish_cstar(prod.value.real(), prod.truncation_bound, prod.terms_used);
}

}  // namespace korenblum
