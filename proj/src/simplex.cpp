#include "qbg/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qbg/constants.hpp"

namespace qbg {

namespace {

constexpr double kZeroEps = 1e-11;   // entries below this are noise
constexpr double kRatioTie = 1e-9;   // ratio-test tie window
constexpr int kRefactorEvery = 20;   // pivots between refactorizations

struct Tableau {
  // rows: m x (total + 1); last column is the rhs.
  std::vector<std::vector<double>> rows;
  std::vector<int> basis;         // basic variable per row
  int total = 0;                  // number of columns excluding rhs
  int first_artificial = 0;       // columns >= this are artificial
};

// Reduced-cost row for maximizing c over the current basis:
// r[j] = c_B·B^{-1}A_j − c_j, optimal when all r[j] >= −tol.
std::vector<double> reduced_costs(const Tableau& t, const std::vector<double>& c) {
  std::vector<double> r(t.total, 0.0);
  for (int j = 0; j < t.total; ++j) r[j] = -c[j];
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const double cb = c[t.basis[i]];
    if (cb == 0.0) continue;
    for (int j = 0; j < t.total; ++j) r[j] += cb * t.rows[i][j];
  }
  return r;
}

void pivot(Tableau& t, int row, int col) {
  auto& pr = t.rows[row];
  const double inv = 1.0 / pr[col];
  for (double& v : pr) v *= inv;
  pr[col] = 1.0;  // keep the unit exactly
  for (size_t i = 0; i < t.rows.size(); ++i) {
    if (static_cast<int>(i) == row) continue;
    const double f = t.rows[i][col];
    if (std::abs(f) < kZeroEps * 1e-3) continue;
    for (int j = 0; j <= t.total; ++j) t.rows[i][j] -= f * pr[j];
    t.rows[i][col] = 0.0;
    // Snap noise-negative basic values so a later degenerate pivot cannot
    // amplify them into genuine infeasibility.
    if (t.rows[i][t.total] < 0.0 && t.rows[i][t.total] > -kZeroEps) {
      t.rows[i][t.total] = 0.0;
    }
  }
  t.basis[row] = col;
}

// Rebuilds the tableau from the pristine constraint data for the current
// basis: Gauss-Jordan on [B | A b] with partial pivoting yields [I | B⁻¹A b].
// Row operations during pivoting accumulate roundoff; refactorizing from the
// original data bounds that drift regardless of the pivot path.
void refactorize(Tableau& t, const std::vector<std::vector<double>>& original) {
  const int m = static_cast<int>(original.size());
  const int width = m + t.total + 1;
  std::vector<std::vector<double>> aug(m, std::vector<double>(width, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) aug[i][k] = original[i][t.basis[k]];
    for (int j = 0; j <= t.total; ++j) aug[i][m + j] = original[i][j];
  }
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r) {
      if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
    }
    if (std::abs(aug[piv][col]) < 1e-12) {
      throw std::runtime_error("simplex: basis matrix is numerically singular");
    }
    std::swap(aug[col], aug[piv]);
    const double inv = 1.0 / aug[col][col];
    for (int j = col; j < width; ++j) aug[col][j] *= inv;
    aug[col][col] = 1.0;
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = aug[r][col];
      if (f == 0.0) continue;
      for (int j = col; j < width; ++j) aug[r][j] -= f * aug[col][j];
      aug[r][col] = 0.0;
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= t.total; ++j) t.rows[i][j] = aug[i][m + j];
    for (int k = 0; k < m; ++k) t.rows[i][t.basis[k]] = (k == i) ? 1.0 : 0.0;
    if (t.rows[i][t.total] < 0.0 && t.rows[i][t.total] > -kRatioTie) {
      t.rows[i][t.total] = 0.0;
    }
  }
}

// Simplex iterations maximizing the ordered objective list: the first
// objective strictly dominates, later ones only break ties (lexicographic
// composite; the entering scan reads the reduced-cost vector
// lexicographically). Returns false when the composite is unbounded.
//
// Leaving rule: among the minimum-ratio rows, prefer a clearly larger pivot
// element (tiny pivots amplify roundoff on degenerate tableaus); the basic
// variable index breaks remaining near-ties. Cycling is guarded by the
// iteration cap.
//
// When block_artificials is set (phase two), rows whose basic variable is an
// artificial participate in the ratio test whenever the entering column has
// a usable entry there, so a zero-valued artificial can never creep back to
// a positive value and silently relax its constraint.
bool optimize(Tableau& t, const std::vector<std::vector<double>>& original,
              const std::vector<std::vector<double>>& objectives,
              bool allow_artificial, bool block_artificials) {
  const int limit = allow_artificial ? t.total : t.first_artificial;
  bool just_refactorized = false;
  for (int iter = 0;; ++iter) {
    if (iter > 50000) throw std::runtime_error("simplex: iteration limit reached");
    if (iter > 0 && iter % kRefactorEvery == 0 && !just_refactorized) {
      refactorize(t, original);
      just_refactorized = true;
    }

    std::vector<std::vector<double>> reduced;
    reduced.reserve(objectives.size());
    for (const auto& c : objectives) reduced.push_back(reduced_costs(t, c));

    auto improving = [&](int j) {
      for (const auto& r : reduced) {
        if (std::abs(r[j]) <= kLpTol) continue;
        return r[j] < 0.0;
      }
      return false;
    };

    // Ratio test for a fixed entering column. Among the minimum-ratio rows
    // a clearly larger pivot element wins; the basic-variable index breaks
    // remaining near-ties.
    const int m = static_cast<int>(t.rows.size());
    auto select_leaving = [&](int enter, double& best_abs_out) {
      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      double best_abs = 0.0;
      for (int i = 0; i < m; ++i) {
        const double a = t.rows[i][enter];
        const bool artificial_row =
            block_artificials && t.basis[i] >= t.first_artificial;
        const double denom = artificial_row ? std::abs(a) : a;
        if (denom <= kZeroEps) continue;
        const double ratio = std::max(0.0, t.rows[i][t.total]) / denom;
        if (ratio < best_ratio - kRatioTie) {
          best_ratio = ratio;
          best_abs = denom;
          leave = i;
        } else if (ratio < best_ratio + kRatioTie) {
          const bool bigger_pivot = denom > 4.0 * best_abs;
          const bool comparable = denom > 0.25 * best_abs;
          if (bigger_pivot || (comparable && t.basis[i] < t.basis[leave])) {
            best_ratio = std::min(best_ratio, ratio);
            best_abs = denom;
            leave = i;
          }
        }
      }
      best_abs_out = best_abs;
      return leave;
    };

    // Entering scan in Bland order over improving columns. Pivots below
    // 1e-9 are never taken: a column offering only noise-sized pivots is a
    // dependent column whose reduced cost is itself noise, and pivoting on
    // it would make the basis singular.
    int enter = -1, leave = -1;
    bool any_improving = false;
    bool saw_unbounded_column = false;
    for (int j = 0; j < limit; ++j) {
      if (!improving(j)) continue;
      any_improving = true;
      double abs_pivot = 0.0;
      const int cand = select_leaving(j, abs_pivot);
      if (cand < 0) {
        saw_unbounded_column = true;
        continue;
      }
      if (abs_pivot >= 1e-7) {
        enter = j;
        leave = cand;
        break;
      }
    }
    if (enter < 0) {
      if (!any_improving) {
        refactorize(t, original);
        return true;
      }
      // Improving columns exist but none admits a well-sized pivot. Decide
      // on refreshed numbers: after a refactorization this means either a
      // genuinely unbounded ray or pure noise (treated as converged).
      if (!just_refactorized) {
        refactorize(t, original);
        just_refactorized = true;
        continue;
      }
      if (saw_unbounded_column) return false;
      return true;
    }
    pivot(t, leave, enter);
    just_refactorized = false;
  }
}

LpSolution solve(const LpProblem& problem,
                 const std::vector<std::vector<double>>& tiebreakers) {
  const int n = problem.num_vars;
  const int m = static_cast<int>(problem.rows.size());
  if (static_cast<int>(problem.objective.size()) != n) {
    throw std::invalid_argument("objective size does not match num_vars");
  }
  for (const auto& row : problem.rows) {
    if (static_cast<int>(row.coeffs.size()) != n) {
      throw std::invalid_argument("constraint size does not match num_vars");
    }
  }
  for (const auto& tb : tiebreakers) {
    if (static_cast<int>(tb.size()) != n) {
      throw std::invalid_argument("tiebreaker size does not match num_vars");
    }
  }

  int num_slack = 0;
  for (const auto& row : problem.rows) {
    if (row.rel != LpRelation::Equal) ++num_slack;
  }

  Tableau t;
  t.first_artificial = n + num_slack;
  t.total = t.first_artificial + m;  // at most one artificial per row
  t.basis.assign(m, -1);
  t.rows.assign(m, std::vector<double>(t.total + 1, 0.0));

  int slack_col = n;
  int art_col = t.first_artificial;
  int used_artificials = 0;
  for (int i = 0; i < m; ++i) {
    const auto& row = problem.rows[i];
    double sign = 1.0;
    double rhs = row.rhs;
    LpRelation rel = row.rel;
    if (rhs < 0) {  // normalize to nonnegative rhs
      sign = -1.0;
      rhs = -rhs;
      if (rel == LpRelation::LessEq) rel = LpRelation::GreaterEq;
      else if (rel == LpRelation::GreaterEq) rel = LpRelation::LessEq;
    }
    for (int j = 0; j < n; ++j) t.rows[i][j] = sign * row.coeffs[j];
    t.rows[i][t.total] = rhs;

    if (rel == LpRelation::LessEq) {
      t.rows[i][slack_col] = 1.0;
      t.basis[i] = slack_col++;
    } else if (rel == LpRelation::GreaterEq) {
      t.rows[i][slack_col++] = -1.0;
      t.rows[i][art_col] = 1.0;
      t.basis[i] = art_col++;
      ++used_artificials;
    } else {
      t.rows[i][art_col] = 1.0;
      t.basis[i] = art_col++;
      ++used_artificials;
    }
  }

  const std::vector<std::vector<double>> original = t.rows;

  LpSolution sol;
  if (used_artificials > 0) {
    std::vector<double> phase1(t.total, 0.0);
    for (int j = t.first_artificial; j < t.total; ++j) phase1[j] = -1.0;
    optimize(t, original, {phase1}, /*allow_artificial=*/true,
             /*block_artificials=*/false);
    double infeas = 0.0;
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] >= t.first_artificial) infeas += t.rows[i][t.total];
    }
    if (infeas > kLpTol) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Swap residual zero-valued artificials out where a well-sized pivot
    // exists; any that remain are fenced by the blocking ratio rule.
    bool swapped = false;
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < t.first_artificial) continue;
      int col = -1;
      double best_abs = 1e-7;
      for (int j = 0; j < t.first_artificial; ++j) {
        if (std::abs(t.rows[i][j]) > best_abs) {
          best_abs = std::abs(t.rows[i][j]);
          col = j;
        }
      }
      if (col >= 0) {
        pivot(t, i, col);
        swapped = true;
      }
    }
    if (swapped) refactorize(t, original);
  }

  std::vector<std::vector<double>> objectives;
  std::vector<double> c(t.total, 0.0);
  for (int j = 0; j < n; ++j) c[j] = problem.objective[j];
  objectives.push_back(std::move(c));
  for (const auto& tb : tiebreakers) {
    std::vector<double> ct(t.total, 0.0);
    for (int j = 0; j < n; ++j) ct[j] = tb[j];
    objectives.push_back(std::move(ct));
  }
  if (!optimize(t, original, objectives, /*allow_artificial=*/false,
                /*block_artificials=*/true)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.x.assign(n, 0.0);
  for (size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) sol.x[t.basis[i]] = t.rows[i][t.total];
  }
  sol.value = 0.0;
  for (int j = 0; j < n; ++j) sol.value += problem.objective[j] * sol.x[j];

  // Never hand back a silently infeasible point.
  for (int j = 0; j < n; ++j) {
    if (sol.x[j] < -1e-8) throw std::runtime_error("simplex lost feasibility");
  }
  for (const auto& row : problem.rows) {
    double v = 0.0;
    for (int j = 0; j < n; ++j) v += row.coeffs[j] * sol.x[j];
    const bool bad = (row.rel == LpRelation::LessEq && v > row.rhs + 1e-8) ||
                     (row.rel == LpRelation::GreaterEq && v < row.rhs - 1e-8) ||
                     (row.rel == LpRelation::Equal && std::abs(v - row.rhs) > 1e-8);
    if (bad) throw std::runtime_error("simplex lost feasibility");
  }
  return sol;
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem) { return solve(problem, {}); }

LpSolution solve_lp_lex(const LpProblem& problem,
                        const std::vector<std::vector<double>>& tiebreakers) {
  return solve(problem, tiebreakers);
}

}  // namespace qbg
