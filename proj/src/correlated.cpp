#include "qbg/correlated.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qbg {

CorrelatedStrategy::CorrelatedStrategy(
    const std::array<std::array<double, 4>, 4>& p)
    : p_(p) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (!(p_[i][j] >= -kNormTol)) {
        std::ostringstream msg;
        msg << "negative recommendation probability p[" << i << "][" << j
            << "] = " << p_[i][j];
        throw std::invalid_argument(msg.str());
      }
      sum += p_[i][j];
    }
  }
  if (std::abs(sum - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "correlated strategy not normalized: total mass = " << sum;
    throw std::invalid_argument(msg.str());
  }
}

CorrelatedStrategy CorrelatedStrategy::point_mass(PureProfile profile) {
  std::array<std::array<double, 4>, 4> p{};
  p[static_cast<int>(profile.alice)][static_cast<int>(profile.bob)] = 1.0;
  return CorrelatedStrategy(p);
}

std::array<double, 4> CorrelatedStrategy::alice_marginal() const {
  std::array<double, 4> mu{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mu[i] += p_[i][j];
  return mu;
}

std::array<double, 4> CorrelatedStrategy::bob_marginal() const {
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) lambda[j] += p_[i][j];
  return lambda;
}

Correlation induced_correlation(const CorrelatedStrategy& strategy) {
  std::array<std::array<double, 4>, 4> p{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double w = strategy.at(i, j);
      if (w == 0.0) continue;
      for (int xa = 0; xa < 2; ++xa) {
        for (int xb = 0; xb < 2; ++xb) {
          const int ya = apply_strategy(kAllPureStrategies[i], xa);
          const int yb = apply_strategy(kAllPureStrategies[j], xb);
          p[2 * xa + xb][2 * ya + yb] += w;
        }
      }
    }
  }
  return Correlation(p);
}

PayoffPair correlated_payoffs(const UtilityTable& game,
                              const CorrelatedStrategy& strategy) {
  return average_payoffs(game, induced_correlation(strategy));
}

CeBounds classical_payoff_bounds(Epsilon eps) {
  const double e = eps.value;
  CeBounds out;
  if (e <= 0.25) {
    out.regime = EpsRegime::Low;
    out.alice_bound = 0.75 * (1.0 - e);
    out.bob_bound = 0.75;
  } else if (e <= 0.5) {
    out.regime = EpsRegime::Mid;
    out.alice_bound = 11.0 / 16.0 - e / 2.0;
    out.bob_bound = 11.0 / 16.0 + e / 4.0;
  } else {
    out.regime = EpsRegime::High;
    out.alice_bound = 7.0 / 16.0;
    out.bob_bound = 7.0 / 16.0 + 0.75 * e;
  }
  return out;
}

double ObedienceRow::evaluate(const CorrelatedStrategy& p) const {
  double s = 0.0;
  for (int k = 0; k < 16; ++k) s += coeffs[k] * p.at(k / 4, k % 4);
  return s;
}

std::string ObedienceRow::label() const {
  std::string who = player == Player::Alice ? "alice" : "bob";
  return who + " " + strategy_name(recommended) + "->" + strategy_name(deviation);
}

CeSystem::CeSystem(const UtilityTable& game) : table_(profile_payoff_table(game)) {
  // Alice: conditioned on recommendation S_i, obeying beats switching to S_k:
  //   Σ_j p_ij (U_A(i,j) − U_A(k,j)) >= 0.
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      if (k == i) continue;
      ObedienceRow row;
      row.player = Player::Alice;
      row.recommended = kAllPureStrategies[i];
      row.deviation = kAllPureStrategies[k];
      for (int j = 0; j < 4; ++j) {
        row.coeffs[4 * i + j] = table_[i][j].alice - table_[k][j].alice;
      }
      rows_.push_back(row);
    }
  }
  // Bob: Σ_i p_ij (U_B(i,j) − U_B(i,l)) >= 0.
  for (int j = 0; j < 4; ++j) {
    for (int l = 0; l < 4; ++l) {
      if (l == j) continue;
      ObedienceRow row;
      row.player = Player::Bob;
      row.recommended = kAllPureStrategies[j];
      row.deviation = kAllPureStrategies[l];
      for (int i = 0; i < 4; ++i) {
        row.coeffs[4 * i + j] = table_[i][j].bob - table_[i][l].bob;
      }
      rows_.push_back(row);
    }
  }
}

std::vector<std::string> CeSystem::violations(const CorrelatedStrategy& p,
                                              double tol) const {
  std::vector<std::string> out;
  for (const auto& row : rows_) {
    if (row.evaluate(p) < -tol) out.push_back(row.label());
  }
  return out;
}

bool CeSystem::is_correlated_equilibrium(const CorrelatedStrategy& p,
                                         double tol) const {
  return violations(p, tol).empty();
}

LpProblem CeSystem::lp_skeleton() const {
  LpProblem lp;
  lp.num_vars = 16;
  lp.objective.assign(16, 0.0);
  for (const auto& row : rows_) {
    LpConstraint c;
    c.coeffs.assign(row.coeffs.begin(), row.coeffs.end());
    c.rel = LpRelation::GreaterEq;
    c.rhs = 0.0;
    lp.rows.push_back(std::move(c));
  }
  LpConstraint norm;
  norm.coeffs.assign(16, 1.0);
  norm.rel = LpRelation::Equal;
  norm.rhs = 1.0;
  lp.rows.push_back(std::move(norm));
  return lp;
}

CeSystem ce_constraints(const UtilityTable& game) { return CeSystem(game); }

namespace {

CorrelatedStrategy vector_to_strategy(const std::vector<double>& x) {
  std::array<std::array<double, 4>, 4> p{};
  double sum = 0.0;
  for (int k = 0; k < 16; ++k) {
    p[k / 4][k % 4] = std::max(0.0, x[k]);
    sum += p[k / 4][k % 4];
  }
  // Scrub solver roundoff so the value type's normalization check passes.
  for (auto& row : p)
    for (double& v : row) v /= sum;
  return CorrelatedStrategy(p);
}

// Maximizes the objective; ties on the optimal face resolve to the
// lexicographically smallest witness via the solver's tiebreaker rows. The
// tie-walk visits highly degenerate bases; when it runs into a numerically
// singular one, the plain Bland solve supplies the (still deterministic)
// witness instead.
CeOptimum solve_ce_lp(const CeSystem& system, const std::array<double, 16>& obj) {
  LpProblem lp = system.lp_skeleton();
  lp.objective.assign(obj.begin(), obj.end());

  std::vector<std::vector<double>> minimize_coords;
  for (int k = 0; k < 16; ++k) {
    std::vector<double> row(16, 0.0);
    row[k] = -1.0;
    minimize_coords.push_back(std::move(row));
  }

  LpSolution best;
  try {
    best = solve_lp_lex(lp, minimize_coords);
  } catch (const std::runtime_error&) {
    best = solve_lp(lp);
  }
  if (best.status != LpStatus::Optimal) {
    throw std::runtime_error("CE polytope LP did not solve; the polytope is "
                             "never empty so this indicates an internal error");
  }

  CeOptimum out;
  out.witness = vector_to_strategy(best.x);
  out.value = 0.0;
  for (int k = 0; k < 16; ++k) out.value += obj[k] * out.witness.at(k / 4, k % 4);
  if (std::abs(out.value - best.value) > 50 * kLpTol) {
    throw std::runtime_error("witness normalization drifted off the lp optimum");
  }
  out.value = best.value;
  return out;
}

}  // namespace

CeOptimum max_ce_objective(const UtilityTable& game,
                           const std::array<double, 16>& objective) {
  return solve_ce_lp(CeSystem(game), objective);
}

CeOptimum max_ce_payoff(const UtilityTable& game, Player player) {
  CeSystem system(game);
  std::array<double, 16> obj{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      obj[4 * i + j] = player == Player::Alice ? system.payoff_table()[i][j].alice
                                               : system.payoff_table()[i][j].bob;
    }
  }
  return solve_ce_lp(system, obj);
}

double max_bob_s3_weight(const UtilityTable& game) {
  std::array<double, 16> obj{};
  const int s3 = static_cast<int>(PureStrategy::Identity);
  for (int i = 0; i < 4; ++i) obj[4 * i + s3] = 1.0;
  return max_ce_objective(game, obj).value;
}

bool lemma1_check(Epsilon eps) {
  if (!(eps.value >= 0.25 && eps.value <= 0.5)) {
    std::ostringstream msg;
    msg << "epsilon = " << eps.value
        << " outside [0.25, 0.5], the range this check is defined for";
    throw std::domain_error(msg.str());
  }
  return max_bob_s3_weight(build_game(eps)) <= kLpTol;
}

bool classical_sum_bound_check(const CorrelatedStrategy& strategy, Epsilon eps) {
  const PayoffPair pay = correlated_payoffs(build_game(eps), strategy);
  return pay.sum() <= 9.0 / 8.0 + 1e-10;
}

}  // namespace qbg
