#pragma once

#include "radonsvm/numerics.hpp"

namespace radonsvm {

struct PhaseOneResult {
  bool feasible = false;
  Vec x;                    // a feasible point when feasible, size eq.cols()
  double infeasibility = 0; // optimal value of the artificial objective
};

/// Phase-one simplex for the feasibility problem {x >= 0 : eq x = rhs}.
/// One artificial variable per row; their sum is minimized with Bland's rule
/// (lowest-index entering column, lowest-basis-index ratio ties), which rules
/// out cycling. Feasible iff the residual objective drops below feas_tol
/// relative to the right-hand side scale.
PhaseOneResult phase_one_feasible(const Matrix& eq, const Vec& rhs,
                                  double feas_tol = 1e-9);

}  // namespace radonsvm
