#include "qbg/game.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qbg {

Epsilon::Epsilon(double v) : value(v) {
  if (!(v >= kEpsilonMin && v <= kEpsilonMax)) {
    std::ostringstream msg;
    msg << "epsilon = " << v << " outside the valid interval [0, 0.75]";
    throw std::domain_error(msg.str());
  }
}

UtilityTable::UtilityTable(const std::array<std::array<double, 4>, 4>& u_alice,
                           const std::array<std::array<double, 4>, 4>& u_bob)
    : u_alice_(u_alice), u_bob_(u_bob) {
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (!std::isfinite(u_alice_[x][y]) || !std::isfinite(u_bob_[x][y])) {
        throw std::invalid_argument("utility table contains a non-finite entry");
      }
    }
  }
}

Correlation::Correlation(const std::array<std::array<double, 4>, 4>& p) : p_(p) {
  for (int x = 0; x < 4; ++x) {
    double row_sum = 0.0;
    for (int y = 0; y < 4; ++y) {
      if (!(p_[x][y] >= -kNormTol)) {
        std::ostringstream msg;
        msg << "negative probability P(y=" << y << "|x=" << x << ") = " << p_[x][y];
        throw std::invalid_argument(msg.str());
      }
      row_sum += p_[x][y];
    }
    if (std::abs(row_sum - 1.0) > kNormTol) {
      std::ostringstream msg;
      msg << "correlation not normalized for joint type (x_A=" << ((x >> 1) & 1)
          << ", x_B=" << (x & 1) << "): row sum = " << row_sum;
      throw std::invalid_argument(msg.str());
    }
  }
}

double Correlation::signaling_defect() const {
  double worst = 0.0;
  // Alice's marginal P(y_A | x_A) must not depend on x_B.
  for (int xa = 0; xa < 2; ++xa) {
    for (int ya = 0; ya < 2; ++ya) {
      double m0 = 0.0, m1 = 0.0;
      for (int yb = 0; yb < 2; ++yb) {
        m0 += p_[2 * xa + 0][2 * ya + yb];
        m1 += p_[2 * xa + 1][2 * ya + yb];
      }
      worst = std::max(worst, std::abs(m0 - m1));
    }
  }
  // Bob's marginal P(y_B | x_B) must not depend on x_A.
  for (int xb = 0; xb < 2; ++xb) {
    for (int yb = 0; yb < 2; ++yb) {
      double m0 = 0.0, m1 = 0.0;
      for (int ya = 0; ya < 2; ++ya) {
        m0 += p_[0 + xb][2 * ya + yb];
        m1 += p_[2 + xb][2 * ya + yb];
      }
      worst = std::max(worst, std::abs(m0 - m1));
    }
  }
  return worst;
}

bool Correlation::is_no_signaling(double tol) const {
  return signaling_defect() <= tol;
}

UtilityTable build_game(Epsilon eps) {
  const double e = eps.value;
  std::array<std::array<double, 4>, 4> ua{};
  std::array<std::array<double, 4>, 4> ub{};
  for (int x = 0; x < 4; ++x) {
    const bool and_one = (x == 3);  // x_A ∧ x_B
    for (int y = 0; y < 4; ++y) {
      double a = 0.0, b = 0.0;
      if (!and_one) {
        if (y == 0) { a = 1.0 - e; b = 0.5 + e; }        // y = (0,0)
        else if (y == 3) { a = 0.5; b = 1.0; }           // y = (1,1)
      } else {
        if (y == 1) { a = 0.75; b = 0.75; }              // y = (0,1)
        else if (y == 2) { a = 0.75 - e; b = 0.75 + e; } // y = (1,0)
      }
      ua[x][y] = a;
      ub[x][y] = b;
    }
  }
  return UtilityTable(ua, ub);
}

PayoffPair average_payoffs(const UtilityTable& game, const Correlation& corr) {
  PayoffPair out;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      const double w = 0.25 * corr.at(x, y);
      out.alice += w * game.alice(x, y);
      out.bob += w * game.bob(x, y);
    }
  }
  return out;
}

double chsh_value(const Correlation& corr) {
  auto correlator = [&corr](int x) {
    return corr.at(x, 0) + corr.at(x, 3) - corr.at(x, 1) - corr.at(x, 2);
  };
  return correlator(0) + correlator(1) + correlator(2) - correlator(3);
}

double payoff_sum_from_chsh(double b) {
  if (!(b >= -4.0 - kNormTol && b <= 4.0 + kNormTol)) {
    std::ostringstream msg;
    msg << "CHSH value " << b << " outside [-4, 4]";
    throw std::domain_error(msg.str());
  }
  return 3.0 / 16.0 * (b + 4.0);
}

}  // namespace qbg
