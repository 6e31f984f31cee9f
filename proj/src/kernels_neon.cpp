#include <arm_neon.h>

#include <cmath>

#include "sokoarch/kernels.hpp"

namespace sokoarch::kernels::neon {
namespace {

void count_equal_rows(std::span<const std::uint8_t> cells, std::size_t cols, std::uint8_t needle,
                      std::span<std::uint32_t> counts) {
    const uint8x16_t want = vdupq_n_u8(needle);
    const uint8x16_t one = vdupq_n_u8(1);
    for (std::size_t r = 0; r < counts.size(); ++r) {
        const std::uint8_t* row = cells.data() + r * cols;
        std::uint32_t c = 0;
        std::size_t k = 0;
        for (; k + 16 <= cols; k += 16) {
            const uint8x16_t hits = vandq_u8(vceqq_u8(vld1q_u8(row + k), want), one);
            c += vaddvq_u8(hits);
        }
        for (; k < cols; ++k) c += row[k] == needle;
        counts[r] = c;
    }
}

void epsilon_matrix_2d(std::span<const double> x, std::span<const double> y, std::span<double> out) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xi = vdupq_n_f64(x[i]);
        const float64x2_t yi = vdupq_n_f64(y[i]);
        double* dst = out.data() + i * n;
        std::size_t j = 0;
        for (; j + 2 <= n; j += 2) {
            const float64x2_t dx = vsubq_f64(xi, vld1q_f64(x.data() + j));
            const float64x2_t dy = vsubq_f64(yi, vld1q_f64(y.data() + j));
            // dx > dy ? dx : dy, matching the reference on signed zeros.
            vst1q_f64(dst + j, vbslq_f64(vcgtq_f64(dx, dy), dx, dy));
        }
        for (; j < n; ++j) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            dst[j] = dx > dy ? dx : dy;
        }
    }
}

void lp_half_matrix_2d(std::span<const double> x, std::span<const double> y, std::span<double> out) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xi = vdupq_n_f64(x[i]);
        const float64x2_t yi = vdupq_n_f64(y[i]);
        double* dst = out.data() + i * n;
        std::size_t j = 0;
        for (; j + 2 <= n; j += 2) {
            const float64x2_t dx = vabsq_f64(vsubq_f64(xi, vld1q_f64(x.data() + j)));
            const float64x2_t dy = vabsq_f64(vsubq_f64(yi, vld1q_f64(y.data() + j)));
            const float64x2_t s = vaddq_f64(vsqrtq_f64(dx), vsqrtq_f64(dy));
            vst1q_f64(dst + j, vmulq_f64(s, s));
        }
        for (; j < n; ++j) {
            const double s = std::sqrt(std::fabs(x[i] - x[j])) + std::sqrt(std::fabs(y[i] - y[j]));
            dst[j] = s * s;
        }
    }
}

}  // namespace

const KernelSet& kernel_set() {
    static const KernelSet set{"neon", count_equal_rows, epsilon_matrix_2d, lp_half_matrix_2d};
    return set;
}

}  // namespace sokoarch::kernels::neon
