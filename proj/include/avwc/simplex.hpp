#pragma once

#include <cstddef>
#include <vector>

namespace avwc {

/// Outcome of a phase-1 feasibility solve for { x >= 0 : A x = b }.
struct Phase1Result {
    bool feasible = false;
    std::vector<double> x;       // basic solution when feasible
    double artificial_sum = 0.0; // minimized infeasibility
};

/// Decides feasibility of A x = b, x >= 0 by minimizing the sum of
/// artificial variables with a dense primal simplex. Bland's rule, so no
/// cycling; pivot tolerance 1e-10. Feasible iff the optimum is <= tol.
Phase1Result phase1_feasible(std::size_t num_vars,
                             const std::vector<std::vector<double>>& rows,
                             const std::vector<double>& rhs, double tol = 1e-8);

}  // namespace avwc
