#pragma once

#include <vector>

namespace qbg {

enum class LpRelation { LessEq, GreaterEq, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpConstraint {
  std::vector<double> coeffs;
  LpRelation rel = LpRelation::LessEq;
  double rhs = 0.0;
};

/// maximize objective·x  subject to the rows and x >= 0.
struct LpProblem {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<LpConstraint> rows;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  std::vector<double> x;
};

/// Dense two-phase primal simplex with Bland's anti-cycling rule.
/// Deterministic: identical input produces an identical solution vector.
LpSolution solve_lp(const LpProblem& problem);

/// Lexicographic variant: maximizes the main objective, then resolves ties on
/// the optimal face by maximizing each tiebreaker row in order. Implemented
/// as a vector-valued reduced-cost test, so no extra constraint rows are
/// introduced.
LpSolution solve_lp_lex(const LpProblem& problem,
                        const std::vector<std::vector<double>>& tiebreakers);

}  // namespace qbg
