#pragma once

#include <array>
#include <cstdint>

#include "qbg/constants.hpp"

namespace qbg {

enum class Player { Alice, Bob };

/// Game family parameter. Valid range [0, 3/4].
struct Epsilon {
  double value = 0.0;

  Epsilon() = default;
  explicit Epsilon(double v);  // throws std::domain_error outside [0, 3/4]
};

/// Pair of private input bits, one per player.
struct JointType {
  int alice = 0;  // x_A
  int bob = 0;    // x_B

  int index() const { return 2 * alice + bob; }
  static JointType from_index(int x) { return {(x >> 1) & 1, x & 1}; }
};

/// Pair of output bits, one per player.
struct JointAction {
  int alice = 0;  // y_A
  int bob = 0;    // y_B

  int index() const { return 2 * alice + bob; }
  static JointAction from_index(int y) { return {(y >> 1) & 1, y & 1}; }
};

/// Per-player payoffs, averaged over the uniform type prior.
struct PayoffPair {
  double alice = 0.0;
  double bob = 0.0;

  double sum() const { return alice + bob; }
};

/// Utility table of a 2-type/2-action two-player game:
/// u[player][type.index()][action.index()]. All values must be finite.
class UtilityTable {
 public:
  UtilityTable() = default;
  UtilityTable(const std::array<std::array<double, 4>, 4>& u_alice,
               const std::array<std::array<double, 4>, 4>& u_bob);

  double alice(JointType x, JointAction y) const {
    return u_alice_[x.index()][y.index()];
  }
  double bob(JointType x, JointAction y) const {
    return u_bob_[x.index()][y.index()];
  }
  double alice(int x_index, int y_index) const { return u_alice_[x_index][y_index]; }
  double bob(int x_index, int y_index) const { return u_bob_[x_index][y_index]; }

  const std::array<std::array<double, 4>, 4>& alice_matrix() const { return u_alice_; }
  const std::array<std::array<double, 4>, 4>& bob_matrix() const { return u_bob_; }

 private:
  std::array<std::array<double, 4>, 4> u_alice_{};
  std::array<std::array<double, 4>, 4> u_bob_{};
};

/// Conditional distribution P(y | x) over joint actions given joint types.
/// Each of the four rows (one per joint type) must sum to 1 within kNormTol,
/// entries nonnegative.
class Correlation {
 public:
  Correlation() : p_{} { for (auto& row : p_) row = {0.25, 0.25, 0.25, 0.25}; }
  explicit Correlation(const std::array<std::array<double, 4>, 4>& p);

  double operator()(JointType x, JointAction y) const {
    return p_[x.index()][y.index()];
  }
  double at(int x_index, int y_index) const { return p_[x_index][y_index]; }
  const std::array<std::array<double, 4>, 4>& matrix() const { return p_; }

  /// Output marginals independent of the other player's input, within tol.
  bool is_no_signaling(double tol = kNormTol) const;

  /// Largest deviation of either player's output marginal across the other
  /// player's inputs. Zero for exactly no-signaling correlations.
  double signaling_defect() const;

 private:
  std::array<std::array<double, 4>, 4> p_;
};

/// The built-in one-parameter family. Throws std::domain_error outside [0, 3/4].
UtilityTable build_game(Epsilon eps);
inline UtilityTable build_game(double eps) { return build_game(Epsilon(eps)); }

/// Average payoffs under the uniform type prior: (1/4)·Σ_x Σ_y u(x,y)·P(y|x).
PayoffPair average_payoffs(const UtilityTable& game, const Correlation& corr);

/// CHSH combination ⟨A0B0⟩+⟨A0B1⟩+⟨A1B0⟩−⟨A1B1⟩ with correlators computed
/// from output parity, E(x) = P(y_A=y_B|x) − P(y_A≠y_B|x).
double chsh_value(const Correlation& corr);

/// For the built-in family the payoff sum depends on the correlation only
/// through the CHSH value: returns 3/16·(b+4).
double payoff_sum_from_chsh(double b);

}  // namespace qbg
