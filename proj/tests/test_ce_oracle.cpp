#include <doctest.h>

#include <cmath>

#include "oracle/ce_vertices.hpp"
#include "qbg/correlated.hpp"

using namespace qbg;

namespace {

std::array<double, 16> payoff_objective(const CeSystem& system, Player player) {
  std::array<double, 16> obj{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      obj[4 * i + j] = player == Player::Alice ? system.payoff_table()[i][j].alice
                                               : system.payoff_table()[i][j].bob;
    }
  }
  return obj;
}

}  // namespace

TEST_CASE("vertex enumeration agrees with the lp on the landmark parameters") {
  for (double e : {0.0, 0.25, 0.4, 0.5, 0.75}) {
    const UtilityTable g = build_game(e);
    const CeSystem system = ce_constraints(g);
    const auto vertices = oracle::enumerate_ce_vertices(system);
    REQUIRE(!vertices.empty());

    // Every enumerated vertex is a correlated equilibrium.
    for (const auto& p : vertices) {
      std::array<std::array<double, 4>, 4> m{};
      double mass = 0.0;
      for (int k = 0; k < 16; ++k) {
        m[k / 4][k % 4] = std::max(0.0, p[k]);
        mass += m[k / 4][k % 4];
      }
      for (auto& row : m)
        for (double& v : row) v /= mass;
      CHECK(system.violations(CorrelatedStrategy(m), 1e-8).empty());
    }

    for (Player player : {Player::Alice, Player::Bob}) {
      const double via_lp = max_ce_payoff(g, player).value;
      const double via_vertices =
          oracle::max_over_vertices(payoff_objective(system, player), vertices);
      CHECK(std::abs(via_lp - via_vertices) <= 1e-8);
    }

    // The S3-weight objective agrees between the two routes as well.
    std::array<double, 16> lambda3{};
    for (int i = 0; i < 4; ++i) lambda3[4 * i + 2] = 1.0;
    CHECK(std::abs(max_bob_s3_weight(g) -
                   oracle::max_over_vertices(lambda3, vertices)) <= 1e-8);
  }
}

TEST_CASE("point masses on pure equilibria appear among the vertices") {
  const UtilityTable g = build_game(0.1);
  const auto vertices = oracle::enumerate_ce_vertices(ce_constraints(g));
  int point_masses = 0;
  for (const auto& p : vertices) {
    for (int k = 0; k < 16; ++k) {
      if (std::abs(p[k] - 1.0) <= 1e-10) ++point_masses;
    }
  }
  // The range has three pure equilibria: (S1,S3), (S3,S4), (S4,S2).
  CHECK(point_masses == 3);
}
