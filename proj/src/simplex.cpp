#include "nscert/simplex.hpp"

#include <cstddef>

#include "nscert/errors.hpp"

namespace nscert {

EqFeasibility solve_equality_feasibility(const std::vector<std::vector<Rat>>& columns,
                                         const std::vector<Rat>& rhs) {
    const std::size_t m = rhs.size();
    const std::size_t n = columns.size();
    for (const auto& col : columns)
        if (col.size() != m)
            throw DimensionMismatch("simplex: column length mismatch");

    // Tableau over [real vars | artificials | rhs], rows sign-flipped so rhs >= 0.
    std::vector<bool> flipped(m, false);
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        flipped[i] = rhs[i] < 0;
        const Rat sign = flipped[i] ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = sign * columns[j][i];
        t[i][n + i] = 1;
        t[i][n + m] = sign * rhs[i];
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = n + i;

    // Phase-1 objective: minimize the sum of artificials. Reduced-cost row
    // starts at -sum of tableau rows over the real columns.
    std::vector<Rat> cost(n + m, Rat(0));
    Rat objective = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            cost[j] -= t[i][j];
        objective += t[i][n + m];
    }

    while (true) {
        // Bland: smallest-index improving column.
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n + m)
            break;

        std::size_t leave = m;
        Rat best_ratio = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] > 0) {
                const Rat ratio = t[i][n + m] / t[i][enter];
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == m)
            throw Error("simplex: phase-1 objective unbounded below, input is inconsistent");

        const Rat pivot = t[leave][enter];
        for (std::size_t j = 0; j <= n + m; ++j)
            t[leave][j] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            const Rat factor = t[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j)
                t[i][j] -= factor * t[leave][j];
        }
        const Rat cfactor = cost[enter];
        if (cfactor != 0) {
            for (std::size_t j = 0; j < n + m; ++j)
                cost[j] -= cfactor * t[leave][j];
            objective -= cfactor * t[leave][n + m];
        }
        basis[leave] = enter;
    }

    EqFeasibility result;
    if (objective == 0) {
        result.feasible = true;
        result.solution.assign(n, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n)
                result.solution[basis[i]] = t[i][n + m];
    } else {
        result.feasible = false;
        result.farkas.assign(m, Rat(0));
        for (std::size_t i = 0; i < m; ++i) {
            // Reduced cost of artificial i is 1 - y_i in the flipped frame.
            const Rat y = 1 - cost[n + i];
            result.farkas[i] = flipped[i] ? -y : y;
        }
    }
    return result;
}

} // namespace nscert
