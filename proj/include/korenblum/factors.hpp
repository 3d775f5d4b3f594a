#pragma once

// The per-index factors of the same-circle product for c*_{A(c,1)}(rho, rho e^{i theta}):
//
//   f_n(rho,c)       = (1 + rho^2 c^{2n-1})(1 + rho^{-2} c^{2n+1}) / (1 + c^{2n-1})^2
//   g_n(rho,c,theta) = (1 - 2c^{2n} cos t + c^{4n})
//                      / ( sqrt(1 - 2 rho^2 c^{2n-2} cos t + rho^4 c^{4n-4})
//                        * sqrt(1 - 2 rho^{-2} c^{2n} cos t + rho^{-4} c^{4n}) )

#include <cmath>
#include <string>

#include "korenblum/errors.hpp"

namespace korenblum {

namespace detail {

inline void require_annulus_radius(double rho, double c, const char* who) {
    require(std::isfinite(rho) && std::isfinite(c), std::string(who) + ": non-finite argument");
    require(c > 0.0 && c < 1.0, std::string(who) + ": c must lie in (0,1)");
    require(rho > c && rho < 1.0, std::string(who) + ": rho must lie in (c,1)");
}

inline double f_n_unchecked(double rho, double c, int n) {
    const double rho2 = rho * rho;
    const double c_odd = std::pow(c, 2 * n - 1);
    const double num = (1.0 + rho2 * c_odd) * (1.0 + c_odd * c * c / rho2);
    const double den = (1.0 + c_odd) * (1.0 + c_odd);
    return num / den;
}

inline double g_n_unchecked(double rho, double c, double cos_theta, int n) {
    const double rho2 = rho * rho;
    const double c2n = std::pow(c, 2 * n);
    const double c2n_2 = std::pow(c, 2 * n - 2);
    const double num = 1.0 - 2.0 * c2n * cos_theta + c2n * c2n;
    const double inner = rho2 * c2n_2;
    const double outer = c2n / rho2;
    const double rad1 = 1.0 - 2.0 * inner * cos_theta + inner * inner;
    const double rad2 = 1.0 - 2.0 * outer * cos_theta + outer * outer;
    if (!(rad1 > 0.0) || !(rad2 > 0.0)) throw singularity_error("g_n_factor: nonpositive radicand");
    return num / (std::sqrt(rad1) * std::sqrt(rad2));
}

}  // namespace detail

inline double f_n_factor(double rho, double c, int n) {
    detail::require_annulus_radius(rho, c, "f_n_factor");
    detail::require(n >= 1, "f_n_factor: n must be >= 1");
    return detail::f_n_unchecked(rho, c, n);
}

inline double g_n_factor(double rho, double c, double theta, int n) {
    detail::require_annulus_radius(rho, c, "g_n_factor");
    detail::require(std::isfinite(theta), "g_n_factor: non-finite theta");
    detail::require(n >= 1, "g_n_factor: n must be >= 1");
    return detail::g_n_unchecked(rho, c, std::cos(theta), n);
}

}  // namespace korenblum
