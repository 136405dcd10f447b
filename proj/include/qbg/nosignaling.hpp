#pragma once

#include <array>
#include <string>
#include <vector>

#include "qbg/game.hpp"
#include "qbg/strategies.hpp"

namespace qbg {

/// Extreme point of the two-input/two-output no-signaling polytope.
/// Canonical order: 16 local deterministic boxes first (index 4·f+g over the
/// players' response functions in PureStrategy order), then the 8 nonlocal
/// boxes indexed by (alpha, beta, gamma) packed as 4α+2β+γ.
struct NsVertex {
  enum class Kind { LocalDeterministic, PrBox };
  Kind kind = Kind::LocalDeterministic;
  int index = 0;  // 0..15 within locals, 0..7 within boxes
  Correlation correlation;

  std::string name() const;
};

/// All 24 vertices in canonical order. PrBox index 0 satisfies
/// y_A ⊕ y_B = x_A ∧ x_B with uniform output pairs.
const std::vector<NsVertex>& ns_vertices();

/// Linear functional on correlations, coefficient per (x_index, y_index).
using LinearFunctional = std::array<std::array<double, 4>, 4>;

/// Coefficients of a player's average payoff as a functional on correlations
/// (uniform 1/4 weight per joint type folded in).
LinearFunctional payoff_functional(const UtilityTable& game, Player player);

LinearFunctional chsh_functional();

double evaluate_functional(const LinearFunctional& f, const Correlation& corr);

struct NsMaximum {
  double value = 0.0;
  std::vector<int> argmax;  // positions in the canonical 24-vertex list
};

/// Maximum of the functional over the polytope, attained at a vertex; returns
/// every vertex within 1e-12 of the maximum.
NsMaximum maximize_over_ns(const LinearFunctional& objective);

/// Payoffs of playing the game by feeding types into the canonical PR box:
/// (½(3/2−ε), ½(3/2+ε)), cross-checked against the direct evaluation.
PayoffPair pr_star_payoffs(Epsilon eps);

/// Equilibrium certificate for the PR-box strategy: both players' payoffs
/// must attain the no-signaling maximum of their own payoff functional.
EquilibriumReport verify_pr_nash(Epsilon eps);

}  // namespace qbg
