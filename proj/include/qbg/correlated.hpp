#pragma once

#include <array>
#include <string>
#include <vector>

#include "qbg/game.hpp"
#include "qbg/simplex.hpp"
#include "qbg/strategies.hpp"

namespace qbg {

/// Adviser distribution over pure-strategy recommendation pairs: p[i][j] is
/// the probability of recommending (S_{i+1} to Alice, S_{j+1} to Bob).
class CorrelatedStrategy {
 public:
  CorrelatedStrategy() : p_{} { p_[0][0] = 1.0; }
  explicit CorrelatedStrategy(const std::array<std::array<double, 4>, 4>& p);

  static CorrelatedStrategy point_mass(PureProfile profile);

  double at(int i, int j) const { return p_[i][j]; }
  const std::array<std::array<double, 4>, 4>& matrix() const { return p_; }

  /// Alice's marginal μ_i = Σ_j p_ij.
  std::array<double, 4> alice_marginal() const;
  /// Bob's marginal λ_j = Σ_i p_ij.
  std::array<double, 4> bob_marginal() const;

 private:
  std::array<std::array<double, 4>, 4> p_;
};

/// Convex mixture of the 16 deterministic correlations weighted by p_ij.
Correlation induced_correlation(const CorrelatedStrategy& strategy);

PayoffPair correlated_payoffs(const UtilityTable& game,
                              const CorrelatedStrategy& strategy);

enum class EpsRegime { Low, Mid, High };  // [0,1/4], (1/4,1/2], (1/2,3/4]

/// Closed-form per-player payoff ceilings over classically correlated play:
/// the maximum profile payoff of the 4×4 pure table, piecewise in epsilon.
struct CeBounds {
  double alice_bound = 0.0;
  double bob_bound = 0.0;
  EpsRegime regime = EpsRegime::Low;
};

CeBounds classical_payoff_bounds(Epsilon eps);

/// One obedience inequality: following the recommendation must weakly beat
/// one fixed deviation, conditioned on receiving that recommendation.
struct ObedienceRow {
  Player player = Player::Alice;
  PureStrategy recommended = PureStrategy::Const0;
  PureStrategy deviation = PureStrategy::Const0;
  std::array<double, 16> coeffs{};  // over p flattened as 4*i + j

  double evaluate(const CorrelatedStrategy& p) const;
  std::string label() const;
};

/// The correlated-equilibrium constraint system over p_ij: nonnegativity,
/// normalization, and 24 obedience inequalities (12 per player).
class CeSystem {
 public:
  explicit CeSystem(const UtilityTable& game);

  const std::vector<ObedienceRow>& rows() const { return rows_; }
  const PayoffTable& payoff_table() const { return table_; }

  /// Labels of obedience rows violated beyond tol by the given strategy.
  std::vector<std::string> violations(const CorrelatedStrategy& p,
                                      double tol = kLpTol) const;
  bool is_correlated_equilibrium(const CorrelatedStrategy& p,
                                 double tol = kLpTol) const;

  /// LP skeleton with the 24 obedience rows and the normalization equality;
  /// the caller supplies the objective.
  LpProblem lp_skeleton() const;

 private:
  PayoffTable table_;
  std::vector<ObedienceRow> rows_;
};

CeSystem ce_constraints(const UtilityTable& game);

struct CeOptimum {
  double value = 0.0;
  CorrelatedStrategy witness;
};

/// Maximizes the player's average payoff over the CE polytope. Ties in the
/// optimal face are resolved to the lexicographically smallest witness.
CeOptimum max_ce_payoff(const UtilityTable& game, Player player);

/// LP maximum of an arbitrary linear functional Σ c_ij p_ij over the CE
/// polytope of the given game.
CeOptimum max_ce_objective(const UtilityTable& game,
                           const std::array<double, 16>& objective);

/// Maximum probability that Bob is recommended (and obeys) S3 over the CE
/// polytope; the truthful verdict of the paper-range check.
/// Requires 1/4 <= eps <= 1/2 (throws std::domain_error otherwise).
bool lemma1_check(Epsilon eps);
double max_bob_s3_weight(const UtilityTable& game);

/// Payoff sum of the induced correlation stays within the local ceiling
/// 9/8 (+1e-10).
bool classical_sum_bound_check(const CorrelatedStrategy& strategy, Epsilon eps);

}  // namespace qbg
