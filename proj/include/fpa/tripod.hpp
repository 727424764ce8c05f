#pragma once

// Geometry of A*A*A acting on the Bass-Serre tree of its tripod (star)
// splitting: the three factors fix the arm vertices v1, v2, v3, which sit at
// distance 2 from each other around the central base vertex.

#include <cstddef>

#include "fpa/group.hpp"
#include "fpa/report.hpp"

namespace fpa {

struct TripodResult {
  SuiteReport report;
  std::size_t arm_distance[3] = {0, 0, 0};  // d(v1,v2), d(v2,v3), d(v1,v3)
  std::size_t product_length = 0;           // ||h1 h2|| from the ball oracle
};

/// Checks, for every pair of nontrivial h1 in A and h2 in B: Fix(h_i) in the
/// ball is {v_i}; the arm distances are 2 with the base as common midpoint;
/// ||h1 h2|| = 2 d(v1,v2) = 4 by the oracle; h1 h2 and h2 h1 differ as maps
/// of the ball.
TripodResult tripod_action_geometry(GroupPtr const& a, std::size_t radius = 6);

}  // namespace fpa
