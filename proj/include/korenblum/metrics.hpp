#pragma once

// Pseudohyperbolic distance on the unit disk and the elementary identities
// the Bergman-space estimates are built from. Every residual function returns
// the raw |lhs - rhs| so that tolerance policy lives with the caller.

#include <cmath>
#include <complex>
#include <span>
#include <string>

#include "korenblum/errors.hpp"

namespace korenblum {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// A point of the open unit disk. Construction rejects |z| >= 1 and non-finite input.
class DiskPoint {
public:
    DiskPoint(Complex value) : value_(value) {  // NOLINT(google-explicit-constructor)
        detail::require(is_finite(value), "DiskPoint: non-finite coordinate");
        detail::require(std::abs(value) < 1.0, "DiskPoint: modulus must be < 1");
    }
    DiskPoint(double re) : DiskPoint(Complex(re, 0.0)) {}  // NOLINT(google-explicit-constructor)

    Complex value() const { return value_; }
    double modulus() const { return std::abs(value_); }

    /// 1 - |z|^2 without forming |z|^2 first.
    double one_minus_modulus_sq() const {
        const double r = std::abs(value_);
        return (1.0 - r) * (1.0 + r);
    }

private:
    Complex value_;
};

namespace detail {

// 1 - conj(a) * b, written out so that swapping a and b yields the exact conjugate.
inline Complex one_minus_conj_product(Complex a, Complex b) {
    const double re = a.real() * b.real() + a.imag() * b.imag();
    const double im = a.real() * b.imag() - a.imag() * b.real();
    return {1.0 - re, -im};
}

}  // namespace detail

/// d(a, b) = |a - b| / |1 - conj(a) b|.
inline double pseudo_distance(DiskPoint alpha, DiskPoint beta) {
    const Complex a = alpha.value();
    const Complex b = beta.value();
    const Complex diff(a.real() - b.real(), a.imag() - b.imag());
    const double num = std::hypot(diff.real(), diff.imag());
    if (num == 0.0) return 0.0;
    const Complex den = detail::one_minus_conj_product(a, b);
    const double d = num / std::hypot(den.real(), den.imag());
    return d < 1.0 ? d : std::nextafter(1.0, 0.0);
}

/// Residual of |a-b|/(1-|a|^2) = d/sqrt(1-d^2) * sqrt(1-|b|^2)/sqrt(1-|a|^2).
///
/// 1 - d^2 is evaluated as (1-|a|^2)(1-|b|^2)/|1-conj(a)b|^2; the direct
/// form loses about four digits when both points sit near the circle.
inline double ratio_identity_residual(DiskPoint alpha, DiskPoint beta) {
    const double d = pseudo_distance(alpha, beta);
    const double ma = alpha.one_minus_modulus_sq();
    const double mb = beta.one_minus_modulus_sq();
    const double lhs = std::abs(alpha.value() - beta.value()) / ma;

    const double den = std::abs(detail::one_minus_conj_product(alpha.value(), beta.value()));
    const double one_minus_d_sq = ma * mb / (den * den);
    const double rhs = d / std::sqrt(one_minus_d_sq) * std::sqrt(mb) / std::sqrt(ma);
    return std::abs(lhs - rhs);
}

/// 2|a^2 - ab| - (|a|^2 - |b|^2); nonnegative for every pair.
inline double square_difference_gap(Complex alpha, Complex beta) {
    return 2.0 * std::abs(alpha * alpha - alpha * beta) - (std::norm(alpha) - std::norm(beta));
}

/// Residual of |f^2 - w_rho f g| = |w| |w - w_rho| / (1 - |w|^2) * (|g|^2 - |f|^2), w = f/g.
inline double quotient_identity_residual(Complex f, Complex g, DiskPoint omega_rho) {
    detail::require(is_finite(f) && is_finite(g), "quotient_identity_residual: non-finite input");
    detail::require(g != Complex(0.0, 0.0), "quotient_identity_residual: g must be nonzero");
    detail::require(std::abs(f) < std::abs(g), "quotient_identity_residual: need |f| < |g|");

    const Complex wr = omega_rho.value();
    const Complex w = f / g;
    const double lhs = std::abs(f * f - wr * f * g);
    const double rhs = std::abs(w) * std::abs(w - wr) / (1.0 - std::norm(w)) * (std::norm(g) - std::norm(f));
    return std::abs(lhs - rhs);
}

/// Mean of |p|^2 over the circle |z| = r for p(z) = sum a_k z^k: sum |a_k|^2 r^{2k}.
inline double circle_mean_modulus_sq(std::span<const Complex> coeffs, double r) {
    detail::require(r >= 0.0, "circle_mean_modulus_sq: negative radius");
    double sum = 0.0;
    double r2k = 1.0;
    for (const Complex& a : coeffs) {
        sum += std::norm(a) * r2k;
        r2k *= r * r;
    }
    return sum;
}

}  // namespace korenblum
