#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qbg/game.hpp"
#include "qbg/game_io.hpp"
#include "qbg/nosignaling.hpp"
#include "qbg/rng.hpp"
#include "test_util.hpp"

using namespace qbg;

namespace {

Correlation deterministic_00() {
  std::array<std::array<double, 4>, 4> p{};
  for (int x = 0; x < 4; ++x) p[x][0] = 1.0;
  return Correlation(p);
}

}  // namespace

TEST_CASE("epsilon domain") {
  CHECK_NOTHROW(Epsilon(0.0));
  CHECK_NOTHROW(Epsilon(0.75));
  CHECK_THROWS_AS(Epsilon(-0.01), std::domain_error);
  CHECK_THROWS_AS(Epsilon(0.76), std::domain_error);
  CHECK_THROWS_WITH(Epsilon(1.5), doctest::Contains("[0, 0.75]"));
}

TEST_CASE("utility table entries") {
  const UtilityTable g0 = build_game(0.0);
  CHECK(g0.alice({0, 0}, {0, 0}) == 1.0);
  CHECK(g0.bob({0, 0}, {0, 0}) == 0.5);
  CHECK(g0.alice({1, 1}, {0, 1}) == 0.75);
  CHECK(g0.bob({1, 1}, {0, 1}) == 0.75);

  const UtilityTable g34 = build_game(0.75);
  CHECK(g34.alice({1, 1}, {1, 0}) == 0.0);
  CHECK(g34.bob({1, 1}, {1, 0}) == 1.5);
}

TEST_CASE("utility table corner constants") {
  // Hand-coded values at the four corner parameters.
  struct Corner {
    double e, a00, b00, a1110, b1110, a11, b11;
  };
  const Corner corners[] = {
      {0.0, 1.0, 0.5, 0.75, 0.75, 0.5, 1.0},
      {0.25, 0.75, 0.75, 0.5, 1.0, 0.5, 1.0},
      {0.5, 0.5, 1.0, 0.25, 1.25, 0.5, 1.0},
      {0.75, 0.25, 1.25, 0.0, 1.5, 0.5, 1.0},
  };
  for (const Corner& c : corners) {
    const UtilityTable g = build_game(c.e);
    CHECK(g.alice({0, 0}, {0, 0}) == c.a00);
    CHECK(g.bob({0, 0}, {0, 0}) == c.b00);
    CHECK(g.alice({1, 1}, {1, 0}) == c.a1110);
    CHECK(g.bob({1, 1}, {1, 0}) == c.b1110);
    CHECK(g.alice({0, 1}, {1, 1}) == c.a11);
    CHECK(g.bob({0, 1}, {1, 1}) == c.b11);
    // Zero cells stay zero for every parameter.
    CHECK(g.alice({0, 0}, {0, 1}) == 0.0);
    CHECK(g.bob({1, 1}, {0, 0}) == 0.0);
  }
}

TEST_CASE("average payoffs: uniform and deterministic correlations") {
  const UtilityTable g0 = build_game(0.0);
  const PayoffPair uniform = average_payoffs(g0, Correlation());
  CHECK(uniform.alice == doctest::Approx(0.375).epsilon(1e-14));
  CHECK(uniform.bob == doctest::Approx(0.375).epsilon(1e-14));

  const PayoffPair det = average_payoffs(g0, deterministic_00());
  CHECK(det.alice == doctest::Approx(0.75).epsilon(1e-14));

  // Canonical PR box.
  const PayoffPair pr = average_payoffs(g0, ns_vertices()[16].correlation);
  CHECK(pr.alice == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(pr.bob == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("correlation validation names the offending joint type") {
  std::array<std::array<double, 4>, 4> p{};
  for (auto& row : p) row = {0.25, 0.25, 0.25, 0.25};
  p[2][0] = 0.5;  // row (x_A=1, x_B=0) now sums to 1.25
  CHECK_THROWS_WITH(Correlation(p), doctest::Contains("x_A=1, x_B=0"));

  p[2][0] = -0.25;
  CHECK_THROWS_AS(Correlation(p), std::invalid_argument);
}

TEST_CASE("chsh values of landmark correlations") {
  CHECK(chsh_value(ns_vertices()[16].correlation) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(chsh_value(deterministic_00()) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("payoff sum from chsh") {
  CHECK(payoff_sum_from_chsh(2.0) == doctest::Approx(9.0 / 8.0).epsilon(1e-14));
  CHECK(payoff_sum_from_chsh(4.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(payoff_sum_from_chsh(2.0 * std::sqrt(2.0)) ==
        doctest::Approx(0.75 * (1.0 + 1.0 / std::sqrt(2.0))).epsilon(1e-14));
  CHECK(payoff_sum_from_chsh(2.0 * std::sqrt(2.0)) ==
        doctest::Approx(1.280330).epsilon(1e-6));
  CHECK_THROWS_AS(payoff_sum_from_chsh(4.5), std::domain_error);
}

TEST_CASE("payoff linearity in the correlation") {
  Xoshiro256 rng(101);
  const UtilityTable g = build_game(0.3);
  for (int trial = 0; trial < 50; ++trial) {
    const Correlation c1 = test::random_correlation(rng);
    const Correlation c2 = test::random_correlation(rng);
    const double lam = rng.uniform();
    std::array<std::array<double, 4>, 4> mix{};
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        mix[x][y] = lam * c1.at(x, y) + (1.0 - lam) * c2.at(x, y);
    const PayoffPair p1 = average_payoffs(g, c1);
    const PayoffPair p2 = average_payoffs(g, c2);
    const PayoffPair pm = average_payoffs(g, Correlation(mix));
    CHECK(pm.alice ==
          doctest::Approx(lam * p1.alice + (1.0 - lam) * p2.alice).epsilon(1e-12));
    CHECK(pm.bob ==
          doctest::Approx(lam * p1.bob + (1.0 - lam) * p2.bob).epsilon(1e-12));
  }
}

TEST_CASE("payoff sum equals the chsh map for any correlation and epsilon") {
  Xoshiro256 rng(7);
  double worst = 0.0;
  for (int k = 0; k <= 15; ++k) {
    const UtilityTable g = build_game(0.05 * k);
    for (int trial = 0; trial < 1000; ++trial) {
      const Correlation c = test::random_correlation(rng);
      const PayoffPair pay = average_payoffs(g, c);
      worst = std::max(worst,
                       std::abs(pay.sum() - payoff_sum_from_chsh(chsh_value(c))));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("game json round trip and shape validation") {
  const UtilityTable g = build_game(0.35);
  const UtilityTable back = game_from_json(game_to_json(g));
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      CHECK(back.alice(x, y) == g.alice(x, y));
      CHECK(back.bob(x, y) == g.bob(x, y));
    }
  }
  auto j = game_to_json(g);
  j["players"] = 3;
  CHECK_THROWS_AS(game_from_json(j), std::invalid_argument);
  j["players"] = 2;
  j["u_A"] = nlohmann::json::array({1, 2, 3});
  CHECK_THROWS_AS(game_from_json(j), std::invalid_argument);
}
