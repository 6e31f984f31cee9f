#include "sokoarch/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace sokoarch::kernels {

#if defined(SOKOARCH_HAVE_AVX2_TU)
namespace avx2 {
const KernelSet& kernel_set();
}
#endif
#if defined(SOKOARCH_HAVE_NEON_TU)
namespace neon {
const KernelSet& kernel_set();
}
#endif

const KernelSet* avx2_kernels() {
#if defined(SOKOARCH_HAVE_AVX2_TU)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    return supported ? &avx2::kernel_set() : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet* neon_kernels() {
#if defined(SOKOARCH_HAVE_NEON_TU)
    return &neon::kernel_set();  // Advanced SIMD is mandatory on aarch64.
#else
    return nullptr;
#endif
}

const KernelSet& active_kernels() {
    static const KernelSet& chosen = [] () -> const KernelSet& {
        if (const char* forced = std::getenv("SOKOARCH_KERNELS");
            forced != nullptr && std::string_view(forced) == "scalar")
            return scalar_kernels();
        if (const KernelSet* k = avx2_kernels()) return *k;
        if (const KernelSet* k = neon_kernels()) return *k;
        return scalar_kernels();
    }();
    return chosen;
}

std::vector<const KernelSet*> available_kernels() {
    std::vector<const KernelSet*> sets{&scalar_kernels()};
    if (const KernelSet* k = avx2_kernels()) sets.push_back(k);
    if (const KernelSet* k = neon_kernels()) sets.push_back(k);
    return sets;
}

}  // namespace sokoarch::kernels
