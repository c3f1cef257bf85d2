#pragma once

#include <vector>

#include "nscert/rational.hpp"

namespace nscert {

/// Outcome of the exact phase-1 simplex on {A x = b, x >= 0}.
/// When infeasible, farkas holds y with y^T A <= 0 (componentwise over
/// columns) and y^T b > 0, i.e. an exact separation certificate.
struct EqFeasibility {
    bool feasible = false;
    std::vector<Rat> solution; // one weight per column, when feasible
    std::vector<Rat> farkas;   // one multiplier per row, when infeasible
};

/// Dense exact simplex with Bland's anti-cycling rule; columns[j] is the
/// j-th column of A.
EqFeasibility solve_equality_feasibility(const std::vector<std::vector<Rat>>& columns,
                                         const std::vector<Rat>& rhs);

} // namespace nscert
