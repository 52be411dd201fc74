#pragma once

#include <vector>

#include "mostar/numeric.hpp"
#include "mostar/profile_lp.hpp"

namespace mostar {

enum class SolveStatus { kOptimal, kUnbounded, kInfeasible };

struct SimplexResult {
  SolveStatus status = SolveStatus::kInfeasible;
  Rational value;               // meaningful when optimal
  std::vector<Rational> point;  // meaningful when optimal
};

// Two-phase primal simplex over exact rationals with Bland's anti-cycling
// rule. Free variables are handled by the usual difference-of-nonnegatives
// split. Before returning an optimum the solver re-substitutes the point
// into every constraint and recomputes the objective, so a returned optimum
// is self-certified feasible.
SimplexResult solve_simplex(const LinearProgram& lp);

const char* to_string(SolveStatus status);

}  // namespace mostar
