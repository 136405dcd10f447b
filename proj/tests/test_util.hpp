#pragma once

#include <array>
#include <cmath>

#include "qbg/game.hpp"
#include "qbg/quantum.hpp"
#include "qbg/rng.hpp"

namespace qbg::test {

/// Random normalized (generally signaling) correlation.
inline Correlation random_correlation(Xoshiro256& rng) {
  std::array<std::array<double, 4>, 4> p{};
  for (auto& row : p) {
    double sum = 0.0;
    for (double& v : row) {
      v = -std::log(1.0 - rng.uniform());
      sum += v;
    }
    for (double& v : row) v /= sum;
  }
  return Correlation(p);
}

/// Random point of the POVM parameter box: direction uniform-ish on the ball,
/// then the scalar drawn from the feasible chain interval.
inline PovmParams random_povm_params(Xoshiro256& rng) {
  auto draw_block = [&rng](double& c0, std::array<double, 3>& v) {
    double r2;
    do {
      for (double& x : v) x = 2.0 * rng.uniform() - 1.0;
      r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    } while (r2 > 1.0);
    const double r = std::sqrt(r2);
    c0 = r + (2.0 - 2.0 * r) * rng.uniform();
  };
  PovmParams p;
  draw_block(p.a0, p.a);
  draw_block(p.b0, p.b);
  return p;
}

/// Random pure two-qubit state (Gaussian amplitudes, normalized).
inline TwoQubitState random_state(Xoshiro256& rng) {
  auto gaussian = [&rng]() {
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  };
  std::array<Complex, 4> amp;
  double norm2 = 0.0;
  for (Complex& a : amp) {
    a = Complex(gaussian(), gaussian());
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (Complex& a : amp) a *= inv;
  return TwoQubitState(amp);
}

/// The 4×4 symbolic profile-payoff table, hand-coded independently of the
/// implementation path (entry (2,1) corrected against the utility table).
inline PayoffPair symbolic_profile_payoff(int i, int j, double e) {
  static constexpr double k = 1.0 / 16.0;
  switch (4 * i + j) {
    case 0: return {0.75 - 0.75 * e, 0.375 + 0.75 * e};          // S1,S1
    case 1: return {3 * k, 3 * k};                                // S1,S2
    case 2: return {11 * k - 0.5 * e, 7 * k + 0.5 * e};           // S1,S3
    case 3: return {4 * k - 0.25 * e, 2 * k + 0.25 * e};          // S1,S4
    case 4: return {3 * k - 0.25 * e, 3 * k + 0.25 * e};          // S2,S1
    case 5: return {6 * k, 12 * k};                               // S2,S2
    case 6: return {2 * k, 4 * k};                                // S2,S3
    case 7: return {7 * k - 0.25 * e, 11 * k + 0.25 * e};         // S2,S4
    case 8: return {11 * k - 0.75 * e, 7 * k + 0.75 * e};         // S3,S1
    case 9: return {2 * k, 4 * k};                                // S3,S2
    case 10: return {4 * k - 0.25 * e, 2 * k + 0.25 * e};         // S3,S3
    case 11: return {9 * k - 0.5 * e, 9 * k + 0.5 * e};           // S3,S4
    case 12: return {4 * k - 0.25 * e, 2 * k + 0.25 * e};         // S4,S1
    case 13: return {7 * k, 11 * k};                              // S4,S2
    case 14: return {9 * k - 0.25 * e, 9 * k + 0.25 * e};         // S4,S3
    default: return {2 * k, 4 * k};                               // S4,S4
  }
}

}  // namespace qbg::test
