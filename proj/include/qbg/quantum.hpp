#pragma once

#include <array>

#include "qbg/game.hpp"
#include "qbg/mat2.hpp"
#include "qbg/strategies.hpp"

namespace qbg {

/// Pure two-qubit state over basis |00>,|01>,|10>,|11>. Unit norm within 1e-12.
class TwoQubitState {
 public:
  explicit TwoQubitState(const std::array<Complex, 4>& amplitudes);

  const std::array<Complex, 4>& amplitudes() const { return amp_; }

  static TwoQubitState singlet();

 private:
  std::array<Complex, 4> amp_;
};

/// Binary POVM given by the outcome-0 effect; outcome 1 is I − effect0.
/// Construction symmetrizes and requires both effects positive (eigenvalues
/// of effect0 in [0, 1] within 1e-10, checked by the 2×2 closed form).
class BinaryMeasurement {
 public:
  explicit BinaryMeasurement(const Mat2& effect0);

  const Mat2& effect0() const { return effect0_; }
  Mat2 effect1() const { return Mat2::identity() - effect0_; }
  Mat2 effect(int outcome) const { return outcome == 0 ? effect0() : effect1(); }

  bool is_projective(double tol = 1e-10) const;

  /// Projector onto the +1 eigenspace of the unit-vector observable n·σ,
  /// i.e. the measurement answering 0 on the +1 eigenstate.
  static BinaryMeasurement from_observable_direction(double nx, double ny, double nz);

 private:
  Mat2 effect0_;
};

/// One measurement per received type.
struct PlayerMeasurements {
  BinaryMeasurement on_type0;
  BinaryMeasurement on_type1;
};

/// Bloch-style parameterization of a deviating player's two measurements:
/// effect0 of the type-0 measurement is ½(a0·I + a·σ), of the type-1
/// measurement ½(b0·I + b·σ). Feasible iff ‖a‖ ≤ a0 ≤ 2−‖a‖ (so ‖a‖ ≤ 1),
/// and the same chain for b.
struct PovmParams {
  double a0 = 1.0;
  std::array<double, 3> a{0.0, 0.0, 1.0};
  double b0 = 1.0;
  std::array<double, 3> b{1.0, 0.0, 0.0};

  double a_norm() const;
  double b_norm() const;

  /// Throws std::invalid_argument naming the violated chain inequality.
  void validate() const;
  bool is_feasible(double tol = 1e-12) const;
};

struct QStarSetup {
  TwoQubitState state;
  PlayerMeasurements alice;
  PlayerMeasurements bob;
};

/// Singlet state; Alice measures σ_z / σ_x on types 0/1, Bob measures
/// −(σ_x+σ_z)/√2 and (σ_x−σ_z)/√2; outcome 0 on the +1 eigenstate.
QStarSetup q_star_setup();

/// Born-rule conditional distribution
/// P(y_A,y_B|x_A,x_B) = <ψ| E^A(x_A,y_A) ⊗ E^B(x_B,y_B) |ψ>.
Correlation born_correlation(const TwoQubitState& state,
                             const PlayerMeasurements& alice,
                             const PlayerMeasurements& bob);

/// Closed-form payoffs (¼(1+1/√2)(3/2−ε), ¼(1+1/√2)(3/2+ε)), cross-checked
/// against the Born pipeline at construction.
PayoffPair q_star_payoffs(Epsilon eps);

PlayerMeasurements params_to_measurements(const PovmParams& p);
PovmParams measurements_to_params(const PlayerMeasurements& m);

/// Bob's measurement parameters, obtained through measurements_to_params.
PovmParams bob_q_star_params();
PovmParams alice_q_star_params();

/// Deviating player's average payoff with the opponent pinned to the fixed
/// strategy above; affine in the eight parameters.
double alice_deviation_payoff(const PovmParams& p, Epsilon eps);
double bob_deviation_payoff(const PovmParams& p, Epsilon eps);

struct BestResponse {
  double value = 0.0;
  PovmParams argmax;
};

/// Analytic maximization of the deviation payoff over the parameter box
/// (sign case split per coefficient; exact).
BestResponse analytic_best_response(Player player, Epsilon eps);

/// Independent numerical route: 9-point-per-parameter grid over the feasible
/// box followed by projected coordinate ascent with step halving.
BestResponse numerical_best_response(Player player, Epsilon eps);

/// Runs both routes; throws std::runtime_error with both values if they
/// disagree beyond 1e-6. Returns the analytic optimum.
BestResponse best_response_max(Player player, Epsilon eps);

struct Theorem2Window {
  double c1 = 0.0;  // (3/14)(3−√2)
  double c2 = 0.0;  // (−8+7√2)/4
};

/// Window endpoints where the fixed quantum strategy beats the tightened
/// classical ceilings for both players; verified at {c1, midpoint, c2} and
/// just outside before returning.
Theorem2Window theorem2_window();

/// True when the quantum payoffs of both players weakly beat the closed-form
/// ceilings used for the window derivation (Alice: max{7/16, 3/4−3ε/4},
/// Bob: 11/16+ε/4).
bool inside_theorem2_window(Epsilon eps);

}  // namespace qbg
