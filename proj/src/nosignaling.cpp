#include "qbg/nosignaling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qbg {

std::string NsVertex::name() const {
  if (kind == Kind::LocalDeterministic) {
    const PureProfile profile{kAllPureStrategies[index / 4],
                              kAllPureStrategies[index % 4]};
    return "local" + std::to_string(index) + profile_name(profile);
  }
  return "pr" + std::to_string(index) + "(a=" + std::to_string((index >> 2) & 1) +
         ",b=" + std::to_string((index >> 1) & 1) +
         ",g=" + std::to_string(index & 1) + ")";
}

namespace {

Correlation pr_variant(int alpha, int beta, int gamma) {
  std::array<std::array<double, 4>, 4> p{};
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      const int parity = (xa & xb) ^ (alpha & xa) ^ (beta & xb) ^ gamma;
      for (int ya = 0; ya < 2; ++ya) {
        const int yb = ya ^ parity;
        p[2 * xa + xb][2 * ya + yb] = 0.5;
      }
    }
  }
  return Correlation(p);
}

std::vector<NsVertex> make_vertices() {
  std::vector<NsVertex> out;
  out.reserve(24);
  for (int f = 0; f < 4; ++f) {
    for (int g = 0; g < 4; ++g) {
      NsVertex v;
      v.kind = NsVertex::Kind::LocalDeterministic;
      v.index = 4 * f + g;
      v.correlation = profile_to_correlation(
          {kAllPureStrategies[f], kAllPureStrategies[g]});
      out.push_back(std::move(v));
    }
  }
  for (int idx = 0; idx < 8; ++idx) {
    NsVertex v;
    v.kind = NsVertex::Kind::PrBox;
    v.index = idx;
    v.correlation = pr_variant((idx >> 2) & 1, (idx >> 1) & 1, idx & 1);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

const std::vector<NsVertex>& ns_vertices() {
  static const std::vector<NsVertex> vertices = make_vertices();
  return vertices;
}

LinearFunctional payoff_functional(const UtilityTable& game, Player player) {
  LinearFunctional f{};
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      f[x][y] = 0.25 * (player == Player::Alice ? game.alice(x, y) : game.bob(x, y));
    }
  }
  return f;
}

LinearFunctional chsh_functional() {
  LinearFunctional f{};
  for (int x = 0; x < 4; ++x) {
    const double sign = (x == 3) ? -1.0 : 1.0;
    f[x][0] = sign;
    f[x][3] = sign;
    f[x][1] = -sign;
    f[x][2] = -sign;
  }
  return f;
}

double evaluate_functional(const LinearFunctional& f, const Correlation& corr) {
  double s = 0.0;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) s += f[x][y] * corr.at(x, y);
  return s;
}

NsMaximum maximize_over_ns(const LinearFunctional& objective) {
  const auto& vertices = ns_vertices();
  NsMaximum out;
  std::array<double, 24> values{};
  out.value = -std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < vertices.size(); ++k) {
    values[k] = evaluate_functional(objective, vertices[k].correlation);
    out.value = std::max(out.value, values[k]);
  }
  for (size_t k = 0; k < vertices.size(); ++k) {
    if (out.value - values[k] <= 1e-12) out.argmax.push_back(static_cast<int>(k));
  }
  return out;
}

PayoffPair pr_star_payoffs(Epsilon eps) {
  const PayoffPair closed{0.5 * (1.5 - eps.value), 0.5 * (1.5 + eps.value)};
  const PayoffPair direct =
      average_payoffs(build_game(eps), ns_vertices()[16].correlation);
  if (std::abs(closed.alice - direct.alice) > kNormTol ||
      std::abs(closed.bob - direct.bob) > kNormTol) {
    throw std::logic_error("PR-box payoff closed form disagrees with direct evaluation");
  }
  return closed;
}

EquilibriumReport verify_pr_nash(Epsilon eps) {
  const UtilityTable game = build_game(eps);
  const PayoffPair at_pr = pr_star_payoffs(eps);
  const NsMaximum max_a = maximize_over_ns(payoff_functional(game, Player::Alice));
  const NsMaximum max_b = maximize_over_ns(payoff_functional(game, Player::Bob));

  EquilibriumReport report;
  report.alice_gain = std::max(0.0, max_a.value - at_pr.alice);
  report.bob_gain = std::max(0.0, max_b.value - at_pr.bob);
  report.is_equilibrium = std::max(report.alice_gain, report.bob_gain) <= kGainTol;
  if (report.alice_gain > kGainTol) {
    report.best_alice_deviation = ns_vertices()[max_a.argmax.front()].name();
  }
  if (report.bob_gain > kGainTol) {
    report.best_bob_deviation = ns_vertices()[max_b.argmax.front()].name();
  }
  return report;
}

}  // namespace qbg
