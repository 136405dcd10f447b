#include "qbg/strategies.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qbg {

int apply_strategy(PureStrategy s, int input_bit) {
  switch (s) {
    case PureStrategy::Const0: return 0;
    case PureStrategy::Const1: return 1;
    case PureStrategy::Identity: return input_bit;
    case PureStrategy::Flip: return input_bit ^ 1;
  }
  throw std::logic_error("invalid PureStrategy");
}

std::string strategy_name(PureStrategy s) {
  return "S" + std::to_string(static_cast<int>(s) + 1);
}

std::string profile_name(PureProfile p) {
  return "(" + strategy_name(p.alice) + "," + strategy_name(p.bob) + ")";
}

Correlation profile_to_correlation(PureProfile profile) {
  std::array<std::array<double, 4>, 4> p{};
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      const int ya = apply_strategy(profile.alice, xa);
      const int yb = apply_strategy(profile.bob, xb);
      p[2 * xa + xb][2 * ya + yb] = 1.0;
    }
  }
  return Correlation(p);
}

PayoffTable profile_payoff_table(const UtilityTable& game) {
  PayoffTable table{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const PureProfile profile{kAllPureStrategies[i], kAllPureStrategies[j]};
      table[i][j] = average_payoffs(game, profile_to_correlation(profile));
    }
  }
  return table;
}

PayoffTable pure_payoff_table(Epsilon eps) {
  return profile_payoff_table(build_game(eps));
}

std::vector<PureProfile> enumerate_pure_nash(const UtilityTable& game) {
  const PayoffTable t = profile_payoff_table(game);
  std::vector<PureProfile> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double best_alice = t[i][j].alice;
      double best_bob = t[i][j].bob;
      for (int k = 0; k < 4; ++k) {
        best_alice = std::max(best_alice, t[k][j].alice);
        best_bob = std::max(best_bob, t[i][k].bob);
      }
      if (best_alice - t[i][j].alice <= kGainTol &&
          best_bob - t[i][j].bob <= kGainTol) {
        out.push_back({kAllPureStrategies[i], kAllPureStrategies[j]});
      }
    }
  }
  return out;
}

std::vector<PureProfile> enumerate_pure_nash(Epsilon eps) {
  return enumerate_pure_nash(build_game(eps));
}

namespace {

void validate_mix(const StrategyMix& mix, const char* who) {
  double sum = 0.0;
  for (double w : mix) {
    if (!(w >= -kNormTol)) {
      throw std::invalid_argument(std::string(who) + " mixture has a negative weight");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << who << " mixture not normalized: weight sum = " << sum;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

EquilibriumReport check_profile_nash(const UtilityTable& game,
                                     const StrategyMix& alice_mix,
                                     const StrategyMix& bob_mix) {
  validate_mix(alice_mix, "alice");
  validate_mix(bob_mix, "bob");
  const PayoffTable t = profile_payoff_table(game);

  double current_alice = 0.0, current_bob = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      current_alice += alice_mix[i] * bob_mix[j] * t[i][j].alice;
      current_bob += alice_mix[i] * bob_mix[j] * t[i][j].bob;
    }
  }

  // Best pure response against the opponent's fixed mixture.
  double best_alice = current_alice, best_bob = current_bob;
  int alice_arg = -1, bob_arg = -1;
  for (int k = 0; k < 4; ++k) {
    double va = 0.0, vb = 0.0;
    for (int j = 0; j < 4; ++j) va += bob_mix[j] * t[k][j].alice;
    for (int i = 0; i < 4; ++i) vb += alice_mix[i] * t[i][k].bob;
    if (va > best_alice) { best_alice = va; alice_arg = k; }
    if (vb > best_bob) { best_bob = vb; bob_arg = k; }
  }

  EquilibriumReport report;
  report.alice_gain = std::max(0.0, best_alice - current_alice);
  report.bob_gain = std::max(0.0, best_bob - current_bob);
  report.is_equilibrium = std::max(report.alice_gain, report.bob_gain) <= kGainTol;
  if (report.alice_gain > kGainTol && alice_arg >= 0) {
    report.best_alice_deviation = strategy_name(kAllPureStrategies[alice_arg]);
  }
  if (report.bob_gain > kGainTol && bob_arg >= 0) {
    report.best_bob_deviation = strategy_name(kAllPureStrategies[bob_arg]);
  }
  return report;
}

EquilibriumReport check_profile_nash(const UtilityTable& game, PureProfile profile) {
  StrategyMix a{}, b{};
  a[static_cast<int>(profile.alice)] = 1.0;
  b[static_cast<int>(profile.bob)] = 1.0;
  return check_profile_nash(game, a, b);
}

}  // namespace qbg
