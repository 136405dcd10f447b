#pragma once

#include <array>
#include <vector>

#include "qbg/correlated.hpp"

namespace qbg::oracle {

/// Complete vertex list of the correlated-equilibrium polytope
/// { p >= 0, Σp = 1, obedience rows · p >= 0 } in R^16, computed by the
/// double-description method: start from the probability simplex and cut
/// with one obedience halfspace at a time, keeping cut-edge intersections.
/// Test oracle only; independent of the simplex solver.
std::vector<std::array<double, 16>> enumerate_ce_vertices(const CeSystem& system);

double max_over_vertices(const std::array<double, 16>& objective,
                         const std::vector<std::array<double, 16>>& vertices);

}  // namespace qbg::oracle
