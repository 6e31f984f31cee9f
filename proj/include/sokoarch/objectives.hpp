#pragma once

#include <cstdint>
#include <vector>

#include "sokoarch/level.hpp"

namespace sokoarch {

/// Floor tiles per interior row, top to bottom.
std::vector<std::uint32_t> interior_floor_counts(const Level& level);

/// Emptiness: Floor tiles over the whole grid area (border included).
double f_emp(const Level& level);

/// Spatial diversity: Shannon entropy of the per-row Floor distribution over
/// the interior rows, normalised by ln(n). With p_i the Floor fraction of
/// row i and q_i = p_i / sum p, returns -(1/ln n) sum q_i ln q_i.
/// Zero when there is no Floor at all or fewer than two interior rows.
double f_div(const Level& level);

}  // namespace sokoarch
