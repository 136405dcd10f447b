#include "qbg/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qbg {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kQFactor = 0.25 * (1.0 + 1.0 / kSqrt2);

}  // namespace

TwoQubitState::TwoQubitState(const std::array<Complex, 4>& amplitudes)
    : amp_(amplitudes) {
  double norm2 = 0.0;
  for (const Complex& a : amp_) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "state norm " << std::sqrt(norm2) << " != 1";
    throw std::invalid_argument(msg.str());
  }
}

TwoQubitState TwoQubitState::singlet() {
  const double r = 1.0 / kSqrt2;
  return TwoQubitState({Complex(0), Complex(r), Complex(-r), Complex(0)});
}

BinaryMeasurement::BinaryMeasurement(const Mat2& effect0) {
  if (effect0.hermiticity_defect() > kNormTol) {
    throw std::invalid_argument("effect matrix is not Hermitian within 1e-12");
  }
  effect0_ = (effect0 + effect0.adjoint()) * 0.5;
  const auto eig = effect0_.hermitian_eigenvalues();
  if (eig[0] < -1e-10 || eig[1] > 1.0 + 1e-10) {
    std::ostringstream msg;
    msg << "effect eigenvalues [" << eig[0] << ", " << eig[1]
        << "] outside [0, 1]; both outcomes must be positive";
    throw std::invalid_argument(msg.str());
  }
}

bool BinaryMeasurement::is_projective(double tol) const {
  return (effect0_ * effect0_).max_abs_diff(effect0_) <= tol;
}

BinaryMeasurement BinaryMeasurement::from_observable_direction(double nx, double ny,
                                                               double nz) {
  const double n = std::sqrt(nx * nx + ny * ny + nz * nz);
  return BinaryMeasurement(Mat2::pauli_combination(0.5, 0.5 * nx / n, 0.5 * ny / n,
                                                   0.5 * nz / n));
}

QStarSetup q_star_setup() {
  const double r = 1.0 / kSqrt2;
  PlayerMeasurements alice{
      BinaryMeasurement::from_observable_direction(0.0, 0.0, 1.0),   // σ_z
      BinaryMeasurement::from_observable_direction(1.0, 0.0, 0.0)};  // σ_x
  PlayerMeasurements bob{
      BinaryMeasurement::from_observable_direction(-r, 0.0, -r),  // −(σ_x+σ_z)/√2
      BinaryMeasurement::from_observable_direction(r, 0.0, -r)};  // (σ_x−σ_z)/√2
  return {TwoQubitState::singlet(), alice, bob};
}

Correlation born_correlation(const TwoQubitState& state,
                             const PlayerMeasurements& alice,
                             const PlayerMeasurements& bob) {
  const auto& psi = state.amplitudes();
  std::array<std::array<double, 4>, 4> p{};
  for (int xa = 0; xa < 2; ++xa) {
    for (int xb = 0; xb < 2; ++xb) {
      for (int ya = 0; ya < 2; ++ya) {
        for (int yb = 0; yb < 2; ++yb) {
          const Mat2 ea = (xa == 0 ? alice.on_type0 : alice.on_type1).effect(ya);
          const Mat2 eb = (xb == 0 ? bob.on_type0 : bob.on_type1).effect(yb);
          Complex v(0);
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                  v += std::conj(psi[2 * i + j]) * ea(i, k) * eb(j, l) * psi[2 * k + l];
          p[2 * xa + xb][2 * ya + yb] = v.real();
        }
      }
    }
  }
  Correlation corr(p);
  if (!corr.is_no_signaling(kNormTol)) {
    throw std::logic_error("Born-rule correlation violates no-signaling; "
                           "measurement inputs are inconsistent");
  }
  return corr;
}

PayoffPair q_star_payoffs(Epsilon eps) {
  const PayoffPair closed{kQFactor * (1.5 - eps.value), kQFactor * (1.5 + eps.value)};
  const QStarSetup setup = q_star_setup();
  const PayoffPair direct = average_payoffs(
      build_game(eps), born_correlation(setup.state, setup.alice, setup.bob));
  if (std::abs(closed.alice - direct.alice) > kNormTol ||
      std::abs(closed.bob - direct.bob) > kNormTol) {
    throw std::logic_error("quantum payoff closed form disagrees with Born pipeline");
  }
  return closed;
}

double PovmParams::a_norm() const {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}
double PovmParams::b_norm() const {
  return std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
}

void PovmParams::validate() const {
  const double na = a_norm(), nb = b_norm();
  std::ostringstream msg;
  if (a0 < na - 1e-12) {
    msg << "chain violated: a0 = " << a0 << " < ||a|| = " << na;
  } else if (a0 > 2.0 - na + 1e-12) {
    msg << "chain violated: a0 = " << a0 << " > 2 - ||a|| = " << 2.0 - na;
  } else if (b0 < nb - 1e-12) {
    msg << "chain violated: b0 = " << b0 << " < ||b|| = " << nb;
  } else if (b0 > 2.0 - nb + 1e-12) {
    msg << "chain violated: b0 = " << b0 << " > 2 - ||b|| = " << 2.0 - nb;
  } else {
    return;  // ||a|| <= 1 and ||b|| <= 1 follow from the two-sided chains
  }
  throw std::invalid_argument(msg.str());
}

bool PovmParams::is_feasible(double tol) const {
  const double na = a_norm(), nb = b_norm();
  return a0 >= na - tol && a0 <= 2.0 - na + tol && b0 >= nb - tol &&
         b0 <= 2.0 - nb + tol;
}

PlayerMeasurements params_to_measurements(const PovmParams& p) {
  p.validate();
  const Mat2 e0 = Mat2::pauli_combination(p.a0, p.a[0], p.a[1], p.a[2]) * 0.5;
  const Mat2 e1 = Mat2::pauli_combination(p.b0, p.b[0], p.b[1], p.b[2]) * 0.5;
  return {BinaryMeasurement(e0), BinaryMeasurement(e1)};
}

PovmParams measurements_to_params(const PlayerMeasurements& m) {
  auto extract = [](const Mat2& e, double& c0, std::array<double, 3>& v) {
    c0 = e.trace().real();
    v[0] = (e * Mat2::sigma_x()).trace().real();
    v[1] = (e * Mat2::sigma_y()).trace().real();
    v[2] = (e * Mat2::sigma_z()).trace().real();
  };
  PovmParams p;
  extract(m.on_type0.effect0(), p.a0, p.a);
  extract(m.on_type1.effect0(), p.b0, p.b);
  return p;
}

PovmParams alice_q_star_params() {
  return measurements_to_params(q_star_setup().alice);
}
PovmParams bob_q_star_params() {
  return measurements_to_params(q_star_setup().bob);
}

double alice_deviation_payoff(const PovmParams& p, Epsilon eps) {
  p.validate();
  const double e = eps.value;
  const double w = kSqrt2 * (3.0 - 2.0 * e);  // 3√2 − 2√2ε
  return (1.0 / 32.0) *
         ((9.0 - 4.0 * e) + (2.0 - 4.0 * e) * p.a0 + w * p.a[2] + p.b0 + w * p.b[0]);
}

double bob_deviation_payoff(const PovmParams& p, Epsilon eps) {
  p.validate();
  const double e = eps.value;
  const double c = 3.0 + 2.0 * e;
  return (1.0 / 32.0) *
         (15.0 + (-2.0 + 4.0 * e) * p.a0 - c * p.a[0] - c * p.a[2] +
          (-1.0 + 4.0 * e) * p.b0 + c * p.b[0] - c * p.b[2]);
}

namespace {

struct BlockCoeffs {
  double c0 = 0.0;
  std::array<double, 3> c{};
};

struct ObjectiveCoeffs {
  double constant = 0.0;
  BlockCoeffs a, b;
};

ObjectiveCoeffs deviation_coeffs(Player player, double e) {
  ObjectiveCoeffs o;
  if (player == Player::Alice) {
    const double w = kSqrt2 * (3.0 - 2.0 * e);
    o.constant = 9.0 - 4.0 * e;
    o.a = {2.0 - 4.0 * e, {0.0, 0.0, w}};
    o.b = {1.0, {w, 0.0, 0.0}};
  } else {
    const double c = 3.0 + 2.0 * e;
    o.constant = 15.0;
    o.a = {-2.0 + 4.0 * e, {-c, 0.0, -c}};
    o.b = {-1.0 + 4.0 * e, {c, 0.0, -c}};
  }
  return o;
}

// Maximizes c0·v0 + c·v over the chain region ||v|| <= v0 <= 2−||v||.
// With ||v|| = r fixed, the best v is r·ĉ and the best v0 is the end of
// [r, 2−r] matching the sign of c0; the result is affine in r on [0, 1].
struct BlockMax {
  double value = 0.0;
  double v0 = 0.0;
  std::array<double, 3> v{};
};

BlockMax maximize_block(const BlockCoeffs& bc) {
  const double cn = std::sqrt(bc.c[0] * bc.c[0] + bc.c[1] * bc.c[1] +
                              bc.c[2] * bc.c[2]);
  const double slope = bc.c0 >= 0.0 ? cn - bc.c0 : cn + bc.c0;
  const double r = slope >= 0.0 ? 1.0 : 0.0;
  BlockMax out;
  out.v0 = bc.c0 >= 0.0 ? 2.0 - r : r;
  if (cn > 0.0 && r > 0.0) {
    for (int k = 0; k < 3; ++k) out.v[k] = r * bc.c[k] / cn;
  }
  out.value = bc.c0 * out.v0 + cn * r;
  return out;
}

double evaluate_deviation(Player player, const PovmParams& p, Epsilon eps) {
  return player == Player::Alice ? alice_deviation_payoff(p, eps)
                                 : bob_deviation_payoff(p, eps);
}

void project_chain(double& v0, std::array<double, 3>& v) {
  double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (r > 1.0) {
    for (double& x : v) x /= r;
    r = 1.0;
  }
  v0 = std::clamp(v0, r, 2.0 - r);
}

PovmParams project(PovmParams p) {
  project_chain(p.a0, p.a);
  project_chain(p.b0, p.b);
  return p;
}

}  // namespace

BestResponse analytic_best_response(Player player, Epsilon eps) {
  const ObjectiveCoeffs o = deviation_coeffs(player, eps.value);
  const BlockMax ma = maximize_block(o.a);
  const BlockMax mb = maximize_block(o.b);
  BestResponse out;
  out.value = (o.constant + ma.value + mb.value) / 32.0;
  out.argmax = PovmParams{ma.v0, ma.v, mb.v0, mb.v};
  return out;
}

BestResponse numerical_best_response(Player player, Epsilon eps) {
  // Feasible 9-point grid per parameter: components in {−1,−0.75,…,1},
  // v0 in {0,0.25,…,2}, chain-violating combinations rejected.
  struct Block {
    double v0;
    std::array<double, 3> v;
  };
  std::vector<Block> blocks;
  for (int i0 = 0; i0 <= 8; ++i0) {
    for (int i1 = 0; i1 <= 8; ++i1) {
      for (int i2 = 0; i2 <= 8; ++i2) {
        const std::array<double, 3> v{-1.0 + 0.25 * i0, -1.0 + 0.25 * i1,
                                      -1.0 + 0.25 * i2};
        const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (r > 1.0 + 1e-12) continue;
        for (int j = 0; j <= 8; ++j) {
          const double v0 = 0.25 * j;
          if (v0 < r - 1e-12 || v0 > 2.0 - r + 1e-12) continue;
          blocks.push_back({v0, v});
        }
      }
    }
  }

  PovmParams best_p;
  double best = -1.0;
  for (const Block& a : blocks) {
    for (const Block& b : blocks) {
      const PovmParams p{a.v0, a.v, b.v0, b.v};
      const double val = evaluate_deviation(player, p, eps);
      if (val > best) {
        best = val;
        best_p = p;
      }
    }
  }

  // Projected coordinate ascent with step halving from the best grid point.
  // A move only counts when it clears a sufficient-increase margin scaled by
  // step^2; marginal wiggles from coarse steps cannot stall the halving.
  double step = 0.25;
  for (int sweep = 0; sweep < 200 && step > 1e-12; ++sweep) {
    bool improved = false;
    for (int coord = 0; coord < 8; ++coord) {
      for (double dir : {+1.0, -1.0}) {
        PovmParams cand = best_p;
        double* slot = nullptr;
        switch (coord) {
          case 0: slot = &cand.a0; break;
          case 1: slot = &cand.a[0]; break;
          case 2: slot = &cand.a[1]; break;
          case 3: slot = &cand.a[2]; break;
          case 4: slot = &cand.b0; break;
          case 5: slot = &cand.b[0]; break;
          case 6: slot = &cand.b[1]; break;
          default: slot = &cand.b[2]; break;
        }
        *slot += dir * step;
        cand = project(cand);
        const double val = evaluate_deviation(player, cand, eps);
        if (val > best + 1e-3 * step * step) {
          best = val;
          best_p = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  return {best, best_p};
}

BestResponse best_response_max(Player player, Epsilon eps) {
  const BestResponse analytic = analytic_best_response(player, eps);
  const BestResponse numeric = numerical_best_response(player, eps);
  if (std::abs(analytic.value - numeric.value) > 1e-6) {
    std::ostringstream msg;
    msg << "best-response routes disagree: analytic = " << analytic.value
        << ", numerical = " << numeric.value;
    throw std::runtime_error(msg.str());
  }
  return analytic;
}

namespace {

double alice_window_bound(double e) {
  return std::max(7.0 / 16.0, 0.75 - 0.75 * e);
}
double bob_window_bound(double e) { return 11.0 / 16.0 + 0.25 * e; }

bool beats_window_bounds(double e, double tol) {
  const PayoffPair q{kQFactor * (1.5 - e), kQFactor * (1.5 + e)};
  return q.alice >= alice_window_bound(e) - tol &&
         q.bob >= bob_window_bound(e) - tol;
}

}  // namespace

bool inside_theorem2_window(Epsilon eps) {
  return beats_window_bounds(eps.value, kGainTol);
}

Theorem2Window theorem2_window() {
  Theorem2Window w;
  w.c1 = (3.0 / 14.0) * (3.0 - kSqrt2);
  w.c2 = (7.0 * kSqrt2 - 8.0) / 4.0;
  for (double e : {w.c1, 0.5 * (w.c1 + w.c2), w.c2}) {
    if (!beats_window_bounds(e, kGainTol)) {
      throw std::logic_error("window endpoint fails its defining comparison");
    }
  }
  for (double e : {w.c1 - 1e-3, w.c2 + 1e-3}) {
    if (beats_window_bounds(e, 1e-12)) {
      throw std::logic_error("point just outside the window passes both comparisons");
    }
  }
  return w;
}

}  // namespace qbg
