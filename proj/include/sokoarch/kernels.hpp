#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference and, where
// the target supports it, a vector variant; the variants are bit-identical to
// the reference (only IEEE-exact operations are vectorised: subtraction, max,
// sqrt, one add and one multiply), so switching variants never changes a run.
//
// The active set is chosen once at first use: AVX2 when the CPU reports it,
// NEON on aarch64, scalar otherwise. SOKOARCH_KERNELS=scalar forces the
// reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sokoarch::kernels {

struct KernelSet {
    const char* name;

    /// counts[r] = number of cells in row r equal to `needle`.
    /// `cells` is row-major with `cols` entries per row.
    void (*count_equal_rows)(std::span<const std::uint8_t> cells, std::size_t cols,
                             std::uint8_t needle, std::span<std::uint32_t> counts);

    /// out[i*n + j] = max(x[i] - x[j], y[i] - y[j]) for two-objective points
    /// given as coordinate columns (additive epsilon indicator, minimisation).
    void (*epsilon_matrix_2d)(std::span<const double> x, std::span<const double> y,
                              std::span<double> out);

    /// out[i*n + j] = (sqrt|x[i]-x[j]| + sqrt|y[i]-y[j]|)^2, the p = 1/2
    /// Minkowski distance.
    void (*lp_half_matrix_2d)(std::span<const double> x, std::span<const double> y,
                              std::span<double> out);
};

const KernelSet& scalar_kernels();

/// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelSet* avx2_kernels();
const KernelSet* neon_kernels();

const KernelSet& active_kernels();

/// Scalar first, then every vector variant usable on this machine.
std::vector<const KernelSet*> available_kernels();

}  // namespace sokoarch::kernels
