#pragma once

#include "contextsim/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace contextsim {

/// Dense phase-1 simplex for the equality-form feasibility problem
///
///     find x >= 0 with A x = b
///
/// over doubles or exact rationals. Bland's rule, so termination is
/// guaranteed; the problems here are tiny (<= 21 rows, <= 16 columns).
/// Returns a basic feasible point, or nullopt when the system is
/// infeasible (phase-1 optimum stays above the lane's tolerance).
template <class T>
std::optional<std::vector<T>> solve_equality_feasibility(std::vector<std::vector<T>> a,
                                                         std::vector<T> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    const T zero(0);
    const T feas_tol = scalar_policy<T>::lp_tolerance;
    // Pivot-eligibility threshold; 0 on the exact lane.
    const T pivot_tol = scalar_policy<T>::exact ? T(0) : T(1e-11);

    for (std::size_t i = 0; i < rows; ++i) {
        if (b[i] < zero) {
            b[i] = -b[i];
            for (auto& v : a[i]) v = -v;
        }
    }

    // Tableau columns: structural | artificial | rhs.
    const std::size_t width = cols + rows + 1;
    std::vector<std::vector<T>> tab(rows, std::vector<T>(width, zero));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) tab[i][j] = a[i][j];
        tab[i][cols + i] = T(1);
        tab[i][width - 1] = b[i];
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

    // Reduced-cost row for minimizing the artificial sum, with the
    // artificials basic: cost_j = -sum_i a_ij.
    std::vector<T> cost(width - 1, zero);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) cost[j] -= tab[i][j];

    // Artificial sum under the current basis.
    const auto artificial_sum = [&]() {
        T w = zero;
        for (std::size_t i = 0; i < rows; ++i)
            if (basis[i] >= cols) w += tab[i][width - 1];
        return w;
    };

    while (true) {
        std::size_t entering = width; // Bland: first column with negative cost
        for (std::size_t j = 0; j < width - 1; ++j) {
            if (cost[j] < -pivot_tol) {
                entering = j;
                break;
            }
        }
        if (entering == width) break;

        std::size_t leaving = rows;
        for (std::size_t i = 0; i < rows; ++i) {
            if (tab[i][entering] <= pivot_tol) continue;
            if (leaving == rows) {
                leaving = i;
                continue;
            }
            const T lhs = tab[i][width - 1] * tab[leaving][entering];
            const T rhs = tab[leaving][width - 1] * tab[i][entering];
            if (lhs < rhs || (lhs == rhs && basis[i] < basis[leaving])) leaving = i;
        }
        if (leaving == rows) break; // unbounded cannot happen here; bail out

        const T pivot = tab[leaving][entering];
        for (auto& v : tab[leaving]) v /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leaving) continue;
            const T factor = tab[i][entering];
            if (factor == zero) continue;
            for (std::size_t j = 0; j < width; ++j)
                tab[i][j] -= factor * tab[leaving][j];
        }
        const T cfactor = cost[entering];
        if (cfactor != zero) {
            for (std::size_t j = 0; j < width - 1; ++j)
                cost[j] -= cfactor * tab[leaving][j];
        }
        basis[leaving] = entering;
    }

    if (artificial_sum() > feas_tol) return std::nullopt;

    std::vector<T> x(cols, zero);
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] < cols) {
            T v = tab[i][width - 1];
            if (!scalar_policy<T>::exact && v < zero) v = zero; // clip rounding dust
            x[basis[i]] = v;
        }
    }
    return x;
}

} // namespace contextsim
