#include "sokoarch/indicators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sokoarch/error.hpp"

namespace sokoarch {

double epsilon_indicator(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size()) throw LengthMismatch("epsilon_indicator: vectors differ in length");
    if (a.size() == 0) return 0.0;
    double eps = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        eps = d > eps ? d : eps;
    }
    return eps;
}

double lp_distance(const ObjectiveVector& a, const ObjectiveVector& b, double p) {
    if (a.size() != b.size()) throw LengthMismatch("lp_distance: vectors differ in length");
    if (!(p > 0.0)) throw std::invalid_argument("lp_distance: p must be positive");
    // p = 1/2 goes through sqrt so it agrees bit-for-bit with the pairwise
    // kernels used by archive truncation.
    if (p == 0.5) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += std::sqrt(std::fabs(a[i] - b[i]));
        return s * s;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::pow(std::fabs(a[i] - b[i]), p);
    return std::pow(s, 1.0 / p);
}

}  // namespace sokoarch
