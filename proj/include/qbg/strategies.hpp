#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qbg/game.hpp"

namespace qbg {

/// The four deterministic single-player strategies: output 0, output 1,
/// copy the input bit, flip the input bit.
enum class PureStrategy : int { Const0 = 0, Const1 = 1, Identity = 2, Flip = 3 };

inline constexpr std::array<PureStrategy, 4> kAllPureStrategies = {
    PureStrategy::Const0, PureStrategy::Const1, PureStrategy::Identity,
    PureStrategy::Flip};

int apply_strategy(PureStrategy s, int input_bit);

/// Short label S1..S4 (indexing follows the enum order).
std::string strategy_name(PureStrategy s);

struct PureProfile {
  PureStrategy alice = PureStrategy::Const0;
  PureStrategy bob = PureStrategy::Const0;

  bool operator==(const PureProfile&) const = default;
};

std::string profile_name(PureProfile p);

/// Equilibrium certificate: per-player best unilateral deviation gain and
/// the witnessing deviation when one exists.
struct EquilibriumReport {
  bool is_equilibrium = false;
  double alice_gain = 0.0;
  double bob_gain = 0.0;
  std::optional<std::string> best_alice_deviation;
  std::optional<std::string> best_bob_deviation;
};

/// Mixture over the four pure strategies; weights must sum to 1 within kNormTol.
using StrategyMix = std::array<double, 4>;

/// Deterministic conditional distribution induced by a pure profile:
/// P(y|x) = 1 exactly when y_A = s_A(x_A) and y_B = s_B(x_B).
Correlation profile_to_correlation(PureProfile profile);

/// 4×4 matrix of average payoffs, entry (i,j) for profile (S_{i+1}, S_{j+1}).
using PayoffTable = std::array<std::array<PayoffPair, 4>, 4>;

/// Profile payoff table for an arbitrary game.
PayoffTable profile_payoff_table(const UtilityTable& game);

/// Profile payoff table for the built-in family.
PayoffTable pure_payoff_table(Epsilon eps);

/// All profiles where neither player has a unilateral pure deviation gaining
/// more than kGainTol. At the family's breakpoints the payoff ties make this
/// the union of the adjacent equilibrium sets.
std::vector<PureProfile> enumerate_pure_nash(Epsilon eps);
std::vector<PureProfile> enumerate_pure_nash(const UtilityTable& game);

/// Deviation-gain certificate for a (possibly mixed) strategy pair. A best
/// response to a fixed opponent mixture is attained at a pure strategy, so
/// gains are computed by a 4-way max.
EquilibriumReport check_profile_nash(const UtilityTable& game,
                                     const StrategyMix& alice_mix,
                                     const StrategyMix& bob_mix);

EquilibriumReport check_profile_nash(const UtilityTable& game, PureProfile profile);

}  // namespace qbg
