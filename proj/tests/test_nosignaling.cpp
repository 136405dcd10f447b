#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "qbg/correlated.hpp"
#include "qbg/nosignaling.hpp"
#include "qbg/simplex.hpp"

using namespace qbg;

namespace {

// Feasibility LP: is the target correlation a convex combination of the
// other 23 vertices?
bool is_convex_combination_of_others(int target) {
  const auto& vertices = ns_vertices();
  LpProblem lp;
  lp.num_vars = 23;
  lp.objective.assign(23, 0.0);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      LpConstraint row;
      row.rel = LpRelation::Equal;
      row.rhs = vertices[target].correlation.at(x, y);
      for (size_t k = 0, slot = 0; k < vertices.size(); ++k) {
        if (static_cast<int>(k) == target) continue;
        row.coeffs.push_back(vertices[k].correlation.at(x, y));
        ++slot;
      }
      lp.rows.push_back(std::move(row));
    }
  }
  LpConstraint norm;
  norm.coeffs.assign(23, 1.0);
  norm.rel = LpRelation::Equal;
  norm.rhs = 1.0;
  lp.rows.push_back(std::move(norm));
  return solve_lp(lp).status == LpStatus::Optimal;
}

}  // namespace

TEST_CASE("vertex list: count, order, distinctness") {
  const auto& vertices = ns_vertices();
  REQUIRE(vertices.size() == 24);

  std::set<std::array<double, 16>> seen;
  for (const NsVertex& v : vertices) {
    std::array<double, 16> flat{};
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) flat[4 * x + y] = v.correlation.at(x, y);
    seen.insert(flat);
    CHECK(v.correlation.is_no_signaling(1e-15));
  }
  CHECK(seen.size() == 24);

  // Local block mirrors the profile correlations in order.
  for (int f = 0; f < 4; ++f) {
    for (int g = 0; g < 4; ++g) {
      const auto& v = vertices[4 * f + g];
      CHECK(v.kind == NsVertex::Kind::LocalDeterministic);
      const Correlation expect = profile_to_correlation(
          {kAllPureStrategies[f], kAllPureStrategies[g]});
      for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
          CHECK(v.correlation.at(x, y) == expect.at(x, y));
    }
  }

  // The first nonlocal vertex is the canonical box: uniform on matching
  // parity, zero elsewhere.
  const auto& pr = vertices[16];
  CHECK(pr.kind == NsVertex::Kind::PrBox);
  CHECK(pr.index == 0);
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      for (int ya = 0; ya < 2; ++ya) {
        for (int yb = 0; yb < 2; ++yb) {
          const double expect = ((ya ^ yb) == (xa & xb)) ? 0.5 : 0.0;
          CHECK(pr.correlation.at(2 * xa + xb, 2 * ya + yb) == expect);
        }
      }
    }
  }
}

TEST_CASE("every vertex is extreme") {
  for (int k = 0; k < 24; ++k) {
    CHECK_MESSAGE(!is_convex_combination_of_others(k),
                  "vertex " << k << " is not extreme");
  }
}

TEST_CASE("vertex maximization of the payoff functionals") {
  const UtilityTable g = build_game(0.3);
  const NsMaximum max_a = maximize_over_ns(payoff_functional(g, Player::Alice));
  CHECK(max_a.value == doctest::Approx(0.6).epsilon(1e-13));
  CHECK(std::count(max_a.argmax.begin(), max_a.argmax.end(), 16) == 1);

  const NsMaximum max_b = maximize_over_ns(payoff_functional(g, Player::Bob));
  CHECK(max_b.value == doctest::Approx(0.9).epsilon(1e-13));
  CHECK(std::count(max_b.argmax.begin(), max_b.argmax.end(), 16) == 1);

  const NsMaximum max_chsh = maximize_over_ns(chsh_functional());
  CHECK(max_chsh.value == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(std::count(max_chsh.argmax.begin(), max_chsh.argmax.end(), 16) == 1);
  for (int pos : max_chsh.argmax) CHECK(pos >= 16);
}

TEST_CASE("pr payoffs closed form") {
  const PayoffPair p0 = pr_star_payoffs(Epsilon(0.0));
  CHECK(p0.alice == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(p0.bob == doctest::Approx(0.75).epsilon(1e-14));

  const PayoffPair p58 = pr_star_payoffs(Epsilon(0.625));
  CHECK(p58.alice == doctest::Approx(0.4375).epsilon(1e-14));
  CHECK(p58.bob == doctest::Approx(1.0625).epsilon(1e-14));

  const PayoffPair p04 = pr_star_payoffs(Epsilon(0.4));
  CHECK(p04.alice == doctest::Approx(0.55).epsilon(1e-14));
  CHECK(p04.bob == doctest::Approx(0.95).epsilon(1e-14));

  // The payoff sum is parameter independent.
  for (int k = 0; k <= 75; ++k) {
    CHECK(pr_star_payoffs(Epsilon(0.01 * k)).sum() ==
          doctest::Approx(1.5).epsilon(1e-12));
  }
}

TEST_CASE("pr equilibrium certificates") {
  CHECK(verify_pr_nash(Epsilon(0.0)).is_equilibrium);
  CHECK(verify_pr_nash(Epsilon(0.5)).is_equilibrium);
  CHECK(verify_pr_nash(Epsilon(0.625)).is_equilibrium);  // closed boundary

  const EquilibriumReport beyond = verify_pr_nash(Epsilon(0.7));
  CHECK(!beyond.is_equilibrium);
  CHECK(beyond.alice_gain == doctest::Approx(0.0375).epsilon(1e-12));
  CHECK(beyond.bob_gain == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(beyond.best_alice_deviation.has_value());

  for (int k = 0; k <= 62; ++k) {
    CHECK(verify_pr_nash(Epsilon(0.01 * k)).is_equilibrium);
  }
}

TEST_CASE("pr payoffs strictly dominate every correlated equilibrium") {
  for (int k = 0; k <= 63; ++k) {
    const Epsilon eps(std::min(0.01 * k, 0.625));
    const UtilityTable g = build_game(eps);
    const PayoffPair pr = pr_star_payoffs(eps);
    const CeBounds bounds = classical_payoff_bounds(eps);
    // Against the closed-form ceiling: no strictness promised at eps = 0.
    CHECK(pr.alice >= bounds.alice_bound - 1e-12);
    // Against the true CE maxima: strict for both players on the whole range.
    CHECK(pr.alice > max_ce_payoff(g, Player::Alice).value + kGainTol);
    CHECK(pr.bob > max_ce_payoff(g, Player::Bob).value + kGainTol);
  }
}
