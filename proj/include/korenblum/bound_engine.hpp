#pragma once

// The closed-form upper bound F(rho,c) for sup_{|z|=rho} c*_{A(c,1)}(rho,z),
// the gamma bound derived from it, and grid verifiers for each inequality in
// the chain that produces F.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "korenblum/errors.hpp"
#include "korenblum/factors.hpp"

namespace korenblum {

/// F(rho,c) = 2(c/rho)(1 + rho^2/c) (1-c^12)/(1-c^10)
///            * prod_{n=1}^5 (1+rho^2 c^{2n-1})(1+rho^-2 c^{2n+1})(1+c^{2n})^2
///                           / ((1+c^{2n-1})^2 (1+rho^2 c^{2n-2})(1+rho^-2 c^{2n})).
/// May exceed 1.
inline double circle_sup_bound(double rho, double c) {
    detail::require_annulus_radius(rho, c, "circle_sup_bound");
    const double rho2 = rho * rho;
    double value = 2.0 * (c / rho) * (1.0 + rho2 / c) * (1.0 - std::pow(c, 12)) / (1.0 - std::pow(c, 10));
    for (int n = 1; n <= 5; ++n) {
        const double c_odd = std::pow(c, 2 * n - 1);
        const double c_even = std::pow(c, 2 * n);
        const double c_prev = std::pow(c, 2 * n - 2);
        const double num = (1.0 + rho2 * c_odd) * (1.0 + c_odd * c * c / rho2) * (1.0 + c_even) * (1.0 + c_even);
        const double den = (1.0 + c_odd) * (1.0 + c_odd) * (1.0 + rho2 * c_prev) * (1.0 + c_even / rho2);
        value *= num / den;
    }
    return value;
}

/// F / sqrt(1 - F^2), or nullopt ("unbounded") when F >= 1.
inline std::optional<double> gamma_upper_bound(double rho, double c) {
    const double F = circle_sup_bound(rho, c);
    if (F >= 1.0) return std::nullopt;
    return F / std::sqrt((1.0 - F) * (1.0 + F));
}

// ---------------------------------------------------------------------------
// Claim verification
// ---------------------------------------------------------------------------

enum class Claim { fn_bound, gn_theta_max, fg_product, tail_bound, tedious };

inline constexpr Claim kAllClaims[] = {Claim::fn_bound, Claim::gn_theta_max, Claim::fg_product, Claim::tail_bound,
                                       Claim::tedious};

inline std::string claim_id(Claim claim) {
    switch (claim) {
        case Claim::fn_bound: return "fn-bound";
        case Claim::gn_theta_max: return "gn-theta-max";
        case Claim::fg_product: return "fg-product";
        case Claim::tail_bound: return "tail-bound";
        case Claim::tedious: return "tedious";
    }
    return "unknown";
}

inline std::optional<Claim> parse_claim(const std::string& id) {
    for (Claim claim : kAllClaims) {
        if (claim_id(claim) == id) return claim;
    }
    return std::nullopt;
}

/// Allowed violation before a claim is reported as failing.
inline double claim_tolerance(Claim claim) {
    switch (claim) {
        case Claim::fn_bound: return 1e-12;
        case Claim::gn_theta_max: return 1e-12;
        case Claim::fg_product: return 1e-14;
        case Claim::tail_bound: return 1e-12;
        case Claim::tedious: return 1e-10;
    }
    return 0.0;
}

struct EvaluationPoint {
    double rho = 0.0;
    double theta = 0.0;

    friend bool operator==(const EvaluationPoint&, const EvaluationPoint&) = default;
};

/// Scan grid. rho runs over rho_steps interior points of (c,1), theta over
/// theta_steps points of [0, pi] (cos theta is even, so [0, pi] covers the circle).
/// Explicit rho_values / theta_values replace the generated grids when nonempty.
/// An empty n range (n_min > n_max) is allowed and scans nothing.
struct GridSpec {
    std::vector<double> c_values;
    int rho_steps = 100;
    int theta_steps = 1;
    int n_min = 1;
    int n_max = 10;
    std::vector<double> rho_values;
    std::vector<double> theta_values;

    void validate() const {
        detail::require(!c_values.empty(), "GridSpec: c_values must be nonempty");
        for (double c : c_values) detail::require(c > 0.0 && c < 1.0, "GridSpec: every c must lie in (0,1)");
        detail::require(rho_steps >= 1 && theta_steps >= 1, "GridSpec: step counts must be >= 1");
        detail::require(n_min >= 1, "GridSpec: n_min must be >= 1");
        for (double t : theta_values) detail::require(std::isfinite(t), "GridSpec: non-finite theta");
    }

    std::vector<double> rho_grid(double c) const {
        std::vector<double> out;
        if (!rho_values.empty()) {
            for (double r : rho_values) {
                if (r > c && r < 1.0) out.push_back(r);
            }
            return out;
        }
        out.reserve(static_cast<std::size_t>(rho_steps));
        for (int i = 1; i <= rho_steps; ++i) out.push_back(c + (1.0 - c) * i / (rho_steps + 1));
        return out;
    }

    std::vector<double> theta_grid() const {
        if (!theta_values.empty()) return theta_values;
        if (theta_steps == 1) return {0.0};
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(theta_steps));
        for (int j = 0; j < theta_steps; ++j) out.push_back(std::numbers::pi * j / (theta_steps - 1));
        return out;
    }

    bool n_range_empty() const { return n_min > n_max; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline GridSpec default_grid(Claim claim) {
    GridSpec grid;
    switch (claim) {
        case Claim::fn_bound:
            grid.c_values = {0.05, 0.15, 0.21, 0.24};
            grid.rho_steps = 100;
            grid.theta_steps = 1;
            grid.n_max = 10;
            break;
        case Claim::gn_theta_max:
            grid.c_values = {0.05, 0.15, 0.21, 0.24};
            grid.rho_steps = 100;
            grid.theta_steps = 361;
            grid.n_max = 10;
            break;
        case Claim::fg_product:
            for (int k = 1; k <= 49; ++k) grid.c_values.push_back(0.005 * k);
            grid.c_values.push_back(0.2499);
            grid.rho_steps = 50;
            grid.theta_steps = 1;
            grid.n_max = 60;
            break;
        case Claim::tail_bound:
            grid.c_values = {0.05, 0.15, 0.21, 0.24};
            grid.rho_steps = 100;
            grid.theta_steps = 1;
            grid.n_min = 6;
            grid.n_max = 6 + 63;
            break;
        case Claim::tedious:
            grid.c_values = {0.1, 0.21, 0.24};
            grid.rho_steps = 400;
            grid.theta_steps = 720;
            grid.n_min = 1;
            grid.n_max = 5;
            break;
    }
    return grid;
}

struct WorstPoint {
    double c = 0.0;
    EvaluationPoint point;
    int n = 0;

    friend bool operator==(const WorstPoint&, const WorstPoint&) = default;
};

struct ClaimReport {
    std::string claim_id;
    GridSpec grid;
    double max_violation = 0.0;
    WorstPoint worst_point;
    double tolerance = 0.0;
    long points_checked = 0;
    bool low_density = false;  // grid coarser than the claim's default
    bool pass = false;

    friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

namespace detail {

struct ViolationTracker {
    double value = -std::numeric_limits<double>::infinity();
    WorstPoint at;
    long points = 0;

    void offer(double violation, double c, double rho, double theta, int n) {
        ++points;
        if (violation > value) {
            value = violation;
            at = {c, {rho, theta}, n};
        }
    }

    // Strict comparison keeps the earliest point on ties, independent of chunking.
    void merge(const ViolationTracker& later) {
        points += later.points;
        if (later.value > value) {
            value = later.value;
            at = later.at;
        }
    }
};

struct Row {
    double c;
    double rho;
};

/// Runs row_fn(row, tracker) over every (c, rho) row, split across `threads` workers.
template <typename RowFn>
ViolationTracker scan_rows(const GridSpec& grid, int threads, RowFn&& row_fn) {
    std::vector<Row> rows;
    for (double c : grid.c_values) {
        for (double rho : grid.rho_grid(c)) rows.push_back({c, rho});
    }
    const std::size_t workers =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, std::max<std::size_t>(rows.size(), 1));
    std::vector<ViolationTracker> partial(workers);
    auto run_chunk = [&](std::size_t w) {
        const std::size_t begin = rows.size() * w / workers;
        const std::size_t end = rows.size() * (w + 1) / workers;
        for (std::size_t i = begin; i < end; ++i) row_fn(rows[i], partial[w]);
    };
    if (workers == 1) {
        run_chunk(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
    }
    ViolationTracker total;
    for (const auto& p : partial) total.merge(p);
    return total;
}

inline bool coarser_than_default(const GridSpec& grid, Claim claim) {
    const GridSpec reference = default_grid(claim);
    const std::size_t rho_count = grid.rho_values.empty() ? static_cast<std::size_t>(grid.rho_steps) : grid.rho_values.size();
    const std::size_t theta_count =
        grid.theta_values.empty() ? static_cast<std::size_t>(grid.theta_steps) : grid.theta_values.size();
    return rho_count < static_cast<std::size_t>(reference.rho_steps) ||
           theta_count < static_cast<std::size_t>(reference.theta_steps);
}

inline ClaimReport finish_report(Claim claim, const GridSpec& grid, const ViolationTracker& tracker) {
    ClaimReport report;
    report.claim_id = claim_id(claim);
    report.grid = grid;
    report.tolerance = claim_tolerance(claim);
    report.points_checked = tracker.points;
    report.low_density = coarser_than_default(grid, claim);
    if (tracker.points == 0) {
        report.max_violation = 0.0;
    } else {
        report.max_violation = tracker.value;
        report.worst_point = tracker.at;
    }
    report.pass = report.max_violation <= report.tolerance;
    return report;
}

inline double fn_closed_bound(double c, int n) { return (1.0 + std::pow(c, 2 * n + 1)) / (1.0 + std::pow(c, 2 * n - 1)); }

inline double gn_closed_bound(double c, int n) { return (1.0 - std::pow(c, 2 * n)) / (1.0 - std::pow(c, 2 * n - 2)); }

}  // namespace detail

/// (1 + c^{2n+1})(1 - c^{2n+2}) / ((1 + c^{2n-1})(1 - c^{2n})), the bound on f_n g_{n+1}.
inline double fg_product_ratio(double c, int n) {
    detail::require(c > 0.0 && c < 1.0 && n >= 1, "fg_product_ratio: need c in (0,1), n >= 1");
    return detail::fn_closed_bound(c, n) * detail::gn_closed_bound(c, n + 1);
}

/// (1 - c^12) / (1 - c^10), the bound on prod_{n>=6} f_n g_n.
inline double tail_closed_bound(double c) { return (1.0 - std::pow(c, 12)) / (1.0 - std::pow(c, 10)); }

/// f_n(rho,c) <= (1 + c^{2n+1}) / (1 + c^{2n-1}).
inline ClaimReport verify_fn_bound(const GridSpec& grid, int threads = 1) {
    grid.validate();
    auto tracker = detail::scan_rows(grid, threads, [&](const detail::Row& row, detail::ViolationTracker& t) {
        for (int n = grid.n_min; n <= grid.n_max; ++n) {
            const double v = detail::f_n_unchecked(row.rho, row.c, n) - detail::fn_closed_bound(row.c, n);
            t.offer(v, row.c, row.rho, 0.0, n);
        }
    });
    return detail::finish_report(Claim::fn_bound, grid, tracker);
}

/// g_n(rho,c,theta) <= g_n(rho,c,0) <= (1 - c^{2n}) / (1 - c^{2n-2}).
/// The second bound is infinite for n = 1, so only the first is checked there.
inline ClaimReport verify_gn_theta_max(const GridSpec& grid, int threads = 1) {
    grid.validate();
    const std::vector<double> thetas = grid.theta_grid();
    auto tracker = detail::scan_rows(grid, threads, [&](const detail::Row& row, detail::ViolationTracker& t) {
        for (int n = grid.n_min; n <= grid.n_max; ++n) {
            const double at_zero = detail::g_n_unchecked(row.rho, row.c, 1.0, n);
            if (n >= 2) t.offer(at_zero - detail::gn_closed_bound(row.c, n), row.c, row.rho, 0.0, n);
            for (double theta : thetas) {
                const double v = detail::g_n_unchecked(row.rho, row.c, std::cos(theta), n) - at_zero;
                t.offer(v, row.c, row.rho, theta, n);
            }
        }
    });
    return detail::finish_report(Claim::gn_theta_max, grid, tracker);
}

/// f_n(rho,c) g_{n+1}(rho,c,0) <= ratio(c,n) <= 1. The ratio is independent of rho,
/// so the rho grid only exercises the first inequality.
inline ClaimReport verify_fg_product_bound(const GridSpec& grid, int threads = 1) {
    grid.validate();
    auto tracker = detail::scan_rows(grid, threads, [&](const detail::Row& row, detail::ViolationTracker& t) {
        for (int n = grid.n_min; n <= grid.n_max; ++n) {
            const double ratio = fg_product_ratio(row.c, n);
            const double chain =
                detail::f_n_unchecked(row.rho, row.c, n) * detail::g_n_unchecked(row.rho, row.c, 1.0, n + 1) - ratio;
            t.offer(std::max(chain, ratio - 1.0), row.c, row.rho, 0.0, n);
        }
    });
    return detail::finish_report(Claim::fg_product, grid, tracker);
}

/// prod_{n>=6} f_n g_n(theta=0) <= (1 - c^12)/(1 - c^10), the product truncated to
/// the grid's n range (64 factors by default).
inline ClaimReport verify_tail_bound(const GridSpec& grid, int threads = 1) {
    grid.validate();
    auto tracker = detail::scan_rows(grid, threads, [&](const detail::Row& row, detail::ViolationTracker& t) {
        if (grid.n_range_empty()) return;
        double tail = 1.0;
        for (int n = grid.n_min; n <= grid.n_max; ++n) {
            tail *= detail::f_n_unchecked(row.rho, row.c, n) * detail::g_n_unchecked(row.rho, row.c, 1.0, n);
        }
        t.offer(tail - tail_closed_bound(row.c), row.c, row.rho, 0.0, grid.n_min);
    });
    return detail::finish_report(Claim::tail_bound, grid, tracker);
}

/// sqrt(2(1 - cos theta)) prod_{n=1}^5 g_n(theta) <= 2 prod_{n=1}^5 g_n(pi).
/// The grid's n range selects the factors (1..5 by default).
inline ClaimReport verify_tedious_bound(const GridSpec& grid, int threads = 1) {
    grid.validate();
    const std::vector<double> thetas = grid.theta_grid();
    auto tracker = detail::scan_rows(grid, threads, [&](const detail::Row& row, detail::ViolationTracker& t) {
        if (grid.n_range_empty()) return;
        double at_pi = 2.0;
        for (int n = grid.n_min; n <= grid.n_max; ++n) at_pi *= detail::g_n_unchecked(row.rho, row.c, -1.0, n);
        for (double theta : thetas) {
            const double cos_theta = std::cos(theta);
            double lhs = 2.0 * std::abs(std::sin(0.5 * theta));
            for (int n = grid.n_min; n <= grid.n_max; ++n) lhs *= detail::g_n_unchecked(row.rho, row.c, cos_theta, n);
            t.offer(lhs - at_pi, row.c, row.rho, theta, grid.n_max);
        }
    });
    return detail::finish_report(Claim::tedious, grid, tracker);
}

inline ClaimReport verify_claim(Claim claim, const GridSpec& grid, int threads = 1) {
    switch (claim) {
        case Claim::fn_bound: return verify_fn_bound(grid, threads);
        case Claim::gn_theta_max: return verify_gn_theta_max(grid, threads);
        case Claim::fg_product: return verify_fg_product_bound(grid, threads);
        case Claim::tail_bound: return verify_tail_bound(grid, threads);
        case Claim::tedious: return verify_tedious_bound(grid, threads);
    }
    throw domain_error("verify_claim: unknown claim");
}

}  // namespace korenblum
