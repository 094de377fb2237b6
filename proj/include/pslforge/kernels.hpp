#pragma once

#include <cstddef>
#include <cstdint>

// Integer kernels for the search inner loops: full autocorrelation, fitness
// and peak of a profile, and the same for a single-flip neighbor evaluated
// in O(n) without materializing it. Every kernel exists as a scalar
// reference implementation plus SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected at runtime; all variants return bit-identical results.

namespace pslforge::kernels {

struct Eval {
    std::int64_t fitness = 0;  // sum |C_u|^P
    std::int32_t peak = 0;     // max |C_u|
};

/// out[u-1] = sum_{j=0}^{n-u-1} b[j]*b[j+u] for u = 1..n-1.
/// b holds n bytes, each -1 or +1.
using AacfFn = void (*)(const std::int8_t* b, int n, std::int32_t* out);

/// Fitness/peak of the neighbor obtained by flipping one position i.
/// The caller supplies three streams of length len = n-1, all indexed by
/// j = u-1:
///   prof[j]  current sidelobe C_{j+1}
///   f[j]     b[i+j+1], zero when i+j+1 >= n   (forward padded copy)
///   r[j]     b[i-j-1], zero when i-j-1 <  0   (reversed padded copy)
/// and the pre-flip sign factor s = -2*b[i]. The neighbor's sidelobe is
/// prof[j] + s*(f[j] + r[j]).
/// pow_tab[v] = v^P for 0 <= v <= n; only the scalar kernels read it, the
/// SIMD variants are specialized per P.
using NeighborEvalFn = Eval (*)(const std::int32_t* prof, const std::int32_t* f,
                                const std::int32_t* r, int len, std::int32_t s,
                                const std::int64_t* pow_tab);

/// Commits a flip: prof[j] += s*(f[j] + r[j]). Same stream contract as
/// NeighborEvalFn.
using ApplyFlipFn = void (*)(std::int32_t* prof, const std::int32_t* f,
                             const std::int32_t* r, int len, std::int32_t s);

/// Fitness/peak of a stored profile.
using ProfileEvalFn = Eval (*)(const std::int32_t* prof, int len,
                               const std::int64_t* pow_tab);

struct KernelSet {
    AacfFn aacf = nullptr;
    NeighborEvalFn neighbor_eval = nullptr;
    ApplyFlipFn apply_flip = nullptr;
    ProfileEvalFn profile_eval = nullptr;
    const char* isa = "";
};

/// Table-driven scalar reference kernels; valid for any P >= 1.
KernelSet scalar_kernels();

/// Largest n for which sum_u |C_u|^p is guaranteed to fit in int64
/// (worst case (n-1) * n^p). Fitness evaluation beyond this would risk
/// silent wraparound and is rejected up front.
int max_safe_length(int p);

/// Kernels for this host, exponent, and length. Returns a SIMD set when the
/// CPU supports one, p has a specialization (1..5), and n is within
/// max_safe_length(p); otherwise the scalar set. Setting PSLFORGE_NO_SIMD=1
/// in the environment forces scalar.
KernelSet select_kernels(int p, int n);

/// ISA name select_kernels(p, n) would pick: "avx2", "neon", or "scalar".
const char* active_isa(int p, int n);

#if defined(__x86_64__) || defined(_M_X64)
bool cpu_has_avx2();
/// AVX2 variants; requires 1 <= p <= 5 and cpu_has_avx2().
KernelSet avx2_kernels(int p);
#endif

#if defined(__aarch64__)
/// NEON variants; requires 1 <= p <= 5.
KernelSet neon_kernels(int p);
#endif

} // namespace pslforge::kernels
