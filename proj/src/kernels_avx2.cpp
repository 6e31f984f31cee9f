#include <immintrin.h>

#include <cmath>

#include "sokoarch/kernels.hpp"

namespace sokoarch::kernels::avx2 {
namespace {

void count_equal_rows(std::span<const std::uint8_t> cells, std::size_t cols, std::uint8_t needle,
                      std::span<std::uint32_t> counts) {
    const __m256i want = _mm256_set1_epi8(static_cast<char>(needle));
    for (std::size_t r = 0; r < counts.size(); ++r) {
        const std::uint8_t* row = cells.data() + r * cols;
        std::uint32_t c = 0;
        std::size_t k = 0;
        for (; k + 32 <= cols; k += 32) {
            const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k));
            const auto mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, want)));
            c += static_cast<std::uint32_t>(_mm_popcnt_u32(mask));
        }
        for (; k < cols; ++k) c += row[k] == needle;
        counts[r] = c;
    }
}

void epsilon_matrix_2d(std::span<const double> x, std::span<const double> y, std::span<double> out) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        const __m256d xi = _mm256_set1_pd(x[i]);
        const __m256d yi = _mm256_set1_pd(y[i]);
        double* dst = out.data() + i * n;
        std::size_t j = 0;
        for (; j + 4 <= n; j += 4) {
            const __m256d dx = _mm256_sub_pd(xi, _mm256_loadu_pd(x.data() + j));
            const __m256d dy = _mm256_sub_pd(yi, _mm256_loadu_pd(y.data() + j));
            _mm256_storeu_pd(dst + j, _mm256_max_pd(dx, dy));
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
    const __m256d sign = _mm256_set1_pd(-0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const __m256d xi = _mm256_set1_pd(x[i]);
        const __m256d yi = _mm256_set1_pd(y[i]);
        double* dst = out.data() + i * n;
        std::size_t j = 0;
        for (; j + 4 <= n; j += 4) {
            const __m256d dx = _mm256_andnot_pd(sign, _mm256_sub_pd(xi, _mm256_loadu_pd(x.data() + j)));
            const __m256d dy = _mm256_andnot_pd(sign, _mm256_sub_pd(yi, _mm256_loadu_pd(y.data() + j)));
            const __m256d s = _mm256_add_pd(_mm256_sqrt_pd(dx), _mm256_sqrt_pd(dy));
            _mm256_storeu_pd(dst + j, _mm256_mul_pd(s, s));
        }
        for (; j < n; ++j) {
            const double s = std::sqrt(std::fabs(x[i] - x[j])) + std::sqrt(std::fabs(y[i] - y[j]));
            dst[j] = s * s;
        }
    }
}

}  // namespace

const KernelSet& kernel_set() {
    static const KernelSet set{"avx2", count_equal_rows, epsilon_matrix_2d, lp_half_matrix_2d};
    return set;
}

}  // namespace sokoarch::kernels::avx2
