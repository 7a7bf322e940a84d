#pragma once

#include <vector>

#include "edgering/numeric.hpp"

namespace edgering {

// Exact rational LP in equality form:  optimize c.x  s.t.  A x = b, x >= 0.
// Two-phase tableau simplex with Bland's anti-cycling rule, so termination
// is guaranteed. Problem sizes here are tiny (rows <= n+1, cols <= m+1).
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status;
  Rat objective;              // value of c.x at the optimum
  std::vector<Rat> solution;  // an optimal basic solution
};

// Maximizes c.x.
LpResult lp_maximize(const std::vector<std::vector<Rat>>& A,
                     const std::vector<Rat>& b, const std::vector<Rat>& c);

// Phase 1 only: is {x >= 0 : A x = b} nonempty?
bool lp_feasible(const std::vector<std::vector<Rat>>& A,
                 const std::vector<Rat>& b);

}  // namespace edgering
