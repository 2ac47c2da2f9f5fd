#pragma once

#include <vector>

namespace graphdep {

struct LpResult {
  bool optimal = false;
  double objective = 0.0;
  std::vector<double> solution;
};

/// Solves  min c.x  subject to  A x >= b,  x >= 0  with a dense two-phase
/// primal simplex (Bland's rule, hence deterministic and cycle-free).
/// Sized for small problems: tens of rows, a few thousand columns.
LpResult solve_covering_lp(const std::vector<std::vector<double>>& a,
                           const std::vector<double>& b,
                           const std::vector<double>& c);

}  // namespace graphdep
