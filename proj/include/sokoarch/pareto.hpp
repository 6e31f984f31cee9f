#pragma once

// Pareto utilities and the 2-D hypervolume indicator. Public functions take
// vectors in maximisation form; the minimisation core is shared with the
// engine, which works in minimisation space throughout.

#include <span>
#include <vector>

#include "sokoarch/objective_vector.hpp"

namespace sokoarch {

namespace minimizing {
/// a_i <= b_i everywhere and a_j < b_j somewhere. Throws LengthMismatch.
bool dominates(std::span<const double> a, std::span<const double> b);
}  // namespace minimizing

/// Maximisation-form dominance: a_i >= b_i for all i, a_j > b_j for some j.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Positions (ascending) of the points no other point dominates. Equal
/// vectors never dominate each other, so duplicates survive together.
std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> points);

/// The nondominated points, in input order.
std::vector<ObjectiveVector> nondominated_filter(std::span<const ObjectiveVector> points);

struct FrontSnapshot {
    std::vector<ObjectiveVector> points;
    ObjectiveVector reference{0.0, 0.0};
};

/// Area dominated by the front relative to the reference point.
/// Throws DimensionUnsupported unless every vector has two components and
/// ReferenceViolation if a point lies below the reference in any component.
double hypervolume_2d(const FrontSnapshot& front);

}  // namespace sokoarch
