#pragma once

#include "sokoarch/objective_vector.hpp"

namespace sokoarch {

/// Additive epsilon indicator in minimisation space: the smallest shift
/// that makes `a` weakly dominate `b`, i.e. max_i (a_i - b_i).
double epsilon_indicator(const ObjectiveVector& a, const ObjectiveVector& b);

/// Fractional Minkowski distance (sum_i |a_i - b_i|^p)^(1/p), p > 0.
/// Not a metric for p < 1.
double lp_distance(const ObjectiveVector& a, const ObjectiveVector& b, double p);

}  // namespace sokoarch
