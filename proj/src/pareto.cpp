#include "sokoarch/pareto.hpp"

#include <algorithm>
#include <numeric>

#include "sokoarch/error.hpp"

namespace sokoarch {

ObjectiveVector to_minimization(const ObjectiveVector& v, std::span<const Sense> senses) {
    if (v.size() != senses.size()) throw LengthMismatch("objective count does not match senses");
    ObjectiveVector out = v;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (senses[i] == Sense::Maximize) out[i] = -out[i];
    return out;
}

ObjectiveVector from_minimization(const ObjectiveVector& v, std::span<const Sense> senses) {
    return to_minimization(v, senses);
}

namespace minimizing {

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw LengthMismatch("dominates: vectors differ in length");
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly_better = true;
    }
    return strictly_better;
}

}  // namespace minimizing

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size()) throw LengthMismatch("dominates: vectors differ in length");
    std::vector<double> na(a.size()), nb(b.size());
    std::transform(a.values.begin(), a.values.end(), na.begin(), [](double x) { return -x; });
    std::transform(b.values.begin(), b.values.end(), nb.begin(), [](double x) { return -x; });
    return minimizing::dominates(na, nb);
}

std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> points) {
    if (points.empty()) return {};
    const std::size_t m = points.front().size();
    for (const auto& p : points)
        if (p.size() != m) throw LengthMismatch("nondominated_filter: mixed objective counts");

    // A dominator is always lexicographically greater than what it dominates,
    // so a single pass in descending lexicographic order only has to compare
    // against points already retained.
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[b].values < points[a].values;
    });

    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
        const bool dominated = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
            return dominates(points[k], points[idx]);
        });
        if (!dominated) kept.push_back(idx);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<ObjectiveVector> nondominated_filter(std::span<const ObjectiveVector> points) {
    std::vector<ObjectiveVector> out;
    for (std::size_t i : nondominated_indices(points)) out.push_back(points[i]);
    return out;
}

double hypervolume_2d(const FrontSnapshot& front) {
    if (front.reference.size() != 2)
        throw DimensionUnsupported("hypervolume_2d: reference point must have 2 components");
    for (const auto& p : front.points) {
        if (p.size() != 2) throw DimensionUnsupported("hypervolume_2d: only 2 objectives supported");
        if (p[0] < front.reference[0] || p[1] < front.reference[1])
            throw ReferenceViolation("hypervolume_2d: point lies below the reference point");
    }

    std::vector<ObjectiveVector> pts = nondominated_filter(front.points);
    // Descending in the first objective means ascending in the second.
    std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
        return a[0] > b[0] || (a[0] == b[0] && a[1] < b[1]);
    });

    double area = 0.0;
    double covered_height = front.reference[1];
    for (const auto& p : pts) {
        if (p[1] <= covered_height) continue;
        area += (p[0] - front.reference[0]) * (p[1] - covered_height);
        covered_height = p[1];
    }
    return area;
}

}  // namespace sokoarch
