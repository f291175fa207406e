#include "avwc/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace avwc {

namespace {
constexpr double kPivotTol = 1e-10;
}

Phase1Result phase1_feasible(std::size_t num_vars,
                             const std::vector<std::vector<double>>& rows,
                             const std::vector<double>& rhs, double tol) {
    const std::size_t m = rows.size();
    if (rhs.size() != m) throw std::invalid_argument("phase1_feasible: rhs size mismatch");
    const std::size_t n = num_vars;
    const std::size_t total = n + m;  // structural + artificial

    // Tableau: m rows of [A | I | b], flipped so b >= 0.
    std::vector<std::vector<double>> t(m, std::vector<double>(total + 1, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n)
            throw std::invalid_argument("phase1_feasible: row width mismatch");
        const double sign = rhs[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * rows[i][j];
        t[i][n + i] = 1.0;
        t[i][total] = sign * rhs[i];
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced costs for minimizing the artificial sum: z_j - c_j, built by
    // pricing out the artificial basis.
    std::vector<double> cost(total + 1, 0.0);
    for (std::size_t j = 0; j <= total; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += t[i][j];
        cost[j] = s;
    }
    for (std::size_t j = n; j < total; ++j) cost[j] -= 1.0;

    const std::size_t max_pivots = 50 * (m + 1) * (total + 1);
    for (std::size_t pivot = 0; pivot < max_pivots; ++pivot) {
        // Bland: entering column = smallest index with positive reduced cost.
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j)
            if (cost[j] > kPivotTol) {
                enter = j;
                break;
            }
        if (enter == total) break;  // optimal

        // Ratio test, ties to the smallest basis index (Bland).
        std::size_t leave = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= kPivotTol) continue;
            const double ratio = t[i][total] / t[i][enter];
            if (ratio < best_ratio - kPivotTol ||
                (std::abs(ratio - best_ratio) <= kPivotTol &&
                 (leave == m || basis[i] < basis[leave]))) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave == m) break;  // unbounded cannot happen in phase 1; stop defensively

        const double piv = t[leave][enter];
        for (std::size_t j = 0; j <= total; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            const double f = t[i][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        {
            const double f = cost[enter];
            for (std::size_t j = 0; j <= total; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Phase1Result result;
    double objective = 0.0;
    std::vector<double> x(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n)
            x[basis[i]] = t[i][total];
        else
            objective += t[i][total];
    }
    result.artificial_sum = objective;
    result.feasible = objective <= tol;
    if (result.feasible) result.x = std::move(x);
    return result;
}

}  // namespace avwc
