#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "korenblum/errors.hpp"
#include "korenblum/metrics.hpp"

namespace korenblum {

/// Finite Laurent sum  sum_k coeffs[k] z^{min_degree + k}.
///
/// Construction normalizes: zero coefficients are stripped from both ends
/// (adjusting min_degree), and the zero function is {min_degree 0, coeffs {0}}.
class LaurentFunction {
public:
    LaurentFunction() : coeffs_{Complex(0.0, 0.0)} {}

    LaurentFunction(int min_degree, std::vector<Complex> coeffs) : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
        detail::require(!coeffs_.empty(), "LaurentFunction: coefficient list must be nonempty");
        for (const Complex& a : coeffs_) detail::require(is_finite(a), "LaurentFunction: non-finite coefficient");
        normalize();
    }

    static LaurentFunction constant(Complex value) { return {0, {value}}; }
    static LaurentFunction monomial(int degree, Complex coeff = 1.0) { return {degree, {coeff}}; }
    static LaurentFunction polynomial(std::vector<Complex> coeffs) { return {0, std::move(coeffs)}; }

    int min_degree() const { return min_degree_; }
    int max_degree() const { return min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex(0.0, 0.0); }
    bool is_polynomial() const { return min_degree_ >= 0; }

    /// Coefficient of z^degree (zero outside the stored range).
    Complex coefficient(int degree) const {
        const int k = degree - min_degree_;
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {0.0, 0.0};
        return coeffs_[static_cast<std::size_t>(k)];
    }

    Complex operator()(Complex z) const {
        detail::require(is_finite(z), "LaurentFunction: non-finite argument");
        if (min_degree_ < 0) detail::require(z != Complex(0.0, 0.0), "LaurentFunction: negative powers at z = 0");
        Complex acc(0.0, 0.0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc * integer_power(z, min_degree_);
    }

    friend LaurentFunction operator+(const LaurentFunction& f, const LaurentFunction& g) {
        const int lo = std::min(f.min_degree_, g.min_degree_);
        const int hi = std::max(f.max_degree(), g.max_degree());
        std::vector<Complex> sum;
        sum.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (int d = lo; d <= hi; ++d) sum.push_back(f.coefficient(d) + g.coefficient(d));
        return {lo, std::move(sum)};
    }

    friend LaurentFunction operator*(Complex t, const LaurentFunction& f) {
        std::vector<Complex> scaled = f.coeffs_;
        for (Complex& a : scaled) a *= t;
        return {f.min_degree_, std::move(scaled)};
    }

    friend bool operator==(const LaurentFunction&, const LaurentFunction&) = default;

private:
    static Complex integer_power(Complex z, int k) {
        Complex base = k < 0 ? 1.0 / z : z;
        unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
        Complex out(1.0, 0.0);
        while (e != 0) {
            if (e & 1U) out *= base;
            base *= base;
            e >>= 1U;
        }
        return out;
    }

    void normalize() {
        const Complex zero(0.0, 0.0);
        auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [&](const Complex& a) { return a != zero; });
        if (first == coeffs_.end()) {
            min_degree_ = 0;
            coeffs_.assign(1, zero);
            return;
        }
        min_degree_ += static_cast<int>(first - coeffs_.begin());
        coeffs_.erase(coeffs_.begin(), first);
        while (coeffs_.back() == zero) coeffs_.pop_back();
    }

    int min_degree_ = 0;
    std::vector<Complex> coeffs_;
};

inline Complex evaluate(const LaurentFunction& fn, Complex z) { return fn(z); }

}  // namespace korenblum
