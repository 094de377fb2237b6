#include <cstdlib>

#include "pslforge/kernels.hpp"

namespace pslforge::kernels {

namespace {

bool simd_disabled() {
    static const bool disabled = [] {
        const char* v = std::getenv("PSLFORGE_NO_SIMD");
        return v != nullptr && v[0] != '\0' && v[0] != '0';
    }();
    return disabled;
}

} // namespace

KernelSet select_kernels(int p, int n) {
    if (!simd_disabled() && p >= 1 && p <= 5 && n <= max_safe_length(p)) {
#if defined(__x86_64__) || defined(_M_X64)
        if (cpu_has_avx2()) return avx2_kernels(p);
#elif defined(__aarch64__)
        return neon_kernels(p);
#endif
    }
    return scalar_kernels();
}

const char* active_isa(int p, int n) { return select_kernels(p, n).isa; }

} // namespace pslforge::kernels
