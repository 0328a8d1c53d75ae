// infsup — small dense linear-programming solver.
//
// Two-phase primal simplex with Bland's rule, for the epigraph programs
// behind minimum 1-norm and max-norm solves. Problem sizes here are a few
// hundred rows at most, so a dense tableau is the simplest robust choice.

#pragma once

#include <Eigen/Core>

#include "infsup/types.hpp"

namespace infsup::detail {

/// min cost.x  s.t.  eq_a x = eq_b,  le_a x <= le_b,  x >= 0.
struct LinearProgram {
  RealMatrix eq_a;
  RealVector eq_b;
  RealMatrix le_a;
  RealVector le_b;
  RealVector cost;
};

enum class LpStatus { optimal, infeasible, unbounded, stalled };

struct LpResult {
  LpStatus status = LpStatus::stalled;
  RealVector x;
  double value = 0.0;
};

LpResult solve_lp(const LinearProgram& lp);

}  // namespace infsup::detail
