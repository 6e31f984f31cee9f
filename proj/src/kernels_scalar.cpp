#include <cmath>

#include "sokoarch/kernels.hpp"

namespace sokoarch::kernels {
namespace {

void count_equal_rows(std::span<const std::uint8_t> cells, std::size_t cols, std::uint8_t needle,
                      std::span<std::uint32_t> counts) {
    for (std::size_t r = 0; r < counts.size(); ++r) {
        std::uint32_t c = 0;
        for (std::size_t k = 0; k < cols; ++k) c += cells[r * cols + k] == needle;
        counts[r] = c;
    }
}

// Same operand order as MAXPD: returns b unless a > b.
inline double max_pd(double a, double b) { return a > b ? a : b; }

void epsilon_matrix_2d(std::span<const double> x, std::span<const double> y, std::span<double> out) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = max_pd(x[i] - x[j], y[i] - y[j]);
}

void lp_half_matrix_2d(std::span<const double> x, std::span<const double> y, std::span<double> out) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double s = std::sqrt(std::fabs(x[i] - x[j])) + std::sqrt(std::fabs(y[i] - y[j]));
            out[i * n + j] = s * s;
        }
}

}  // namespace

const KernelSet& scalar_kernels() {
    static const KernelSet set{"scalar", count_equal_rows, epsilon_matrix_2d, lp_half_matrix_2d};
    return set;
}

}  // namespace sokoarch::kernels
