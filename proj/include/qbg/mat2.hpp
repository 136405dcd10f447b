#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace qbg {

using Complex = std::complex<double>;

/// Dense 2×2 complex matrix, row-major.
struct Mat2 {
  std::array<Complex, 4> m{};  // [0]=a00 [1]=a01 [2]=a10 [3]=a11

  static Mat2 identity() { return {{Complex(1), Complex(0), Complex(0), Complex(1)}}; }
  static Mat2 zero() { return {}; }

  static Mat2 sigma_x() { return {{Complex(0), Complex(1), Complex(1), Complex(0)}}; }
  static Mat2 sigma_y() {
    return {{Complex(0), Complex(0, -1), Complex(0, 1), Complex(0)}};
  }
  static Mat2 sigma_z() { return {{Complex(1), Complex(0), Complex(0), Complex(-1)}}; }

  /// c0·I + v·σ, the general Hermitian combination used throughout.
  static Mat2 pauli_combination(double c0, double vx, double vy, double vz) {
    return {{Complex(c0 + vz), Complex(vx, -vy), Complex(vx, vy), Complex(c0 - vz)}};
  }

  Complex operator()(int r, int c) const { return m[2 * r + c]; }

  Mat2 operator+(const Mat2& o) const {
    return {{m[0] + o.m[0], m[1] + o.m[1], m[2] + o.m[2], m[3] + o.m[3]}};
  }
  Mat2 operator-(const Mat2& o) const {
    return {{m[0] - o.m[0], m[1] - o.m[1], m[2] - o.m[2], m[3] - o.m[3]}};
  }
  Mat2 operator*(const Mat2& o) const {
    return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
             m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
  }
  Mat2 operator*(double s) const { return {{m[0] * s, m[1] * s, m[2] * s, m[3] * s}}; }

  Mat2 adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
  }
  Complex trace() const { return m[0] + m[3]; }

  double hermiticity_defect() const {
    const Mat2 d = *this - adjoint();
    double worst = 0.0;
    for (const Complex& c : d.m) worst = std::max(worst, std::abs(c));
    return worst;
  }

  double max_abs_diff(const Mat2& o) const {
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(m[k] - o.m[k]));
    return worst;
  }

  /// Eigenvalues of a Hermitian 2×2 matrix via the closed form
  /// (tr ± sqrt(tr² − 4·det)) / 2; both real.
  std::array<double, 2> hermitian_eigenvalues() const {
    const double tr = m[0].real() + m[3].real();
    const double det = (m[0] * m[3] - m[1] * m[2]).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    return {0.5 * (tr - disc), 0.5 * (tr + disc)};
  }
};

inline Mat2 operator*(double s, const Mat2& m) { return m * s; }

}  // namespace qbg
