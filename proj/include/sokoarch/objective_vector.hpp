#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sokoarch {

/// Optimisation sense of one objective.
enum class Sense { Minimize, Maximize };

/// Objective values in the problem's reported form. For the Sokoban problem
/// both objectives are maximised, so this is the (f_emp, f_div) pair as-is.
struct ObjectiveVector {
    std::vector<double> values;

    ObjectiveVector() = default;
    ObjectiveVector(std::initializer_list<double> v) : values(v) {}
    explicit ObjectiveVector(std::vector<double> v) : values(std::move(v)) {}

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }
    std::span<const double> view() const noexcept { return values; }

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
    friend auto operator<=>(const ObjectiveVector&, const ObjectiveVector&) = default;
};

/// Converts a reported vector into minimisation space (maximised components
/// are negated).
ObjectiveVector to_minimization(const ObjectiveVector& v, std::span<const Sense> senses);

/// Inverse of to_minimization; also maps minimisation space onto the
/// all-maximise form used by the hypervolume routine.
ObjectiveVector from_minimization(const ObjectiveVector& v, std::span<const Sense> senses);

}  // namespace sokoarch
