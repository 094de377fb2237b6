// AVX2 kernel variants. Built with -mavx2; only dispatched on CPUs that
// report the feature. Results are bit-identical to the scalar reference
// (exact integer arithmetic; lane widening is picked per exponent so no
// intermediate can wrap within max_safe_length).

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cstdlib>

#include "pslforge/kernels.hpp"

namespace pslforge::kernels {

namespace {

inline std::int64_t hsum_epi64(__m256i v) {
    const __m128i lo = _mm256_castsi256_si128(v);
    const __m128i hi = _mm256_extracti128_si256(v, 1);
    const __m128i s = _mm_add_epi64(lo, hi);
    return _mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1);
}

inline std::int32_t hmax_epi32(__m256i v) {
    alignas(32) std::int32_t tmp[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), v);
    std::int32_t m = tmp[0];
    for (int k = 1; k < 8; ++k) m = std::max(m, tmp[k]);
    return m;
}

template <int P>
inline std::int64_t pow_p(std::int64_t a) {
    if constexpr (P == 1) return a;
    if constexpr (P == 2) return a * a;
    if constexpr (P == 3) return a * a * a;
    if constexpr (P == 4) {
        const std::int64_t s = a * a;
        return s * s;
    }
    const std::int64_t s = a * a;
    return s * s * a;
}

// Widened |c|^P of 8 int32 lanes, accumulated into two int64x4 sums.
// Even/odd 32-bit lanes go through _mm256_mul_epu32 separately.
template <int P>
inline void accumulate_pow(__m256i a, __m256i& acc_even, __m256i& acc_odd) {
    const __m256i a_odd = _mm256_srli_epi64(a, 32);
    if constexpr (P == 1) {
        const __m256i lo_mask = _mm256_set1_epi64x(0xffffffffLL);
        acc_even = _mm256_add_epi64(acc_even, _mm256_and_si256(a, lo_mask));
        acc_odd = _mm256_add_epi64(acc_odd, a_odd);
    } else if constexpr (P == 2) {
        acc_even = _mm256_add_epi64(acc_even, _mm256_mul_epu32(a, a));
        acc_odd = _mm256_add_epi64(acc_odd, _mm256_mul_epu32(a_odd, a_odd));
    } else if constexpr (P == 3) {
        const __m256i sq = _mm256_mullo_epi32(a, a);
        acc_even = _mm256_add_epi64(acc_even, _mm256_mul_epu32(sq, a));
        acc_odd = _mm256_add_epi64(acc_odd, _mm256_mul_epu32(_mm256_srli_epi64(sq, 32), a_odd));
    } else if constexpr (P == 4) {
        const __m256i sq = _mm256_mullo_epi32(a, a);
        const __m256i sq_odd = _mm256_srli_epi64(sq, 32);
        acc_even = _mm256_add_epi64(acc_even, _mm256_mul_epu32(sq, sq));
        acc_odd = _mm256_add_epi64(acc_odd, _mm256_mul_epu32(sq_odd, sq_odd));
    } else {
        static_assert(P == 5);
        const __m256i sq = _mm256_mullo_epi32(a, a);
        const __m256i cube = _mm256_mullo_epi32(sq, a);
        acc_even = _mm256_add_epi64(acc_even, _mm256_mul_epu32(cube, sq));
        acc_odd = _mm256_add_epi64(acc_odd,
                                   _mm256_mul_epu32(_mm256_srli_epi64(cube, 32),
                                                    _mm256_srli_epi64(sq, 32)));
    }
}

template <int P>
Eval neighbor_eval_avx2(const std::int32_t* prof, const std::int32_t* f,
                        const std::int32_t* r, int len, std::int32_t s,
                        const std::int64_t* /*pow_tab*/) {
    const __m256i vs = _mm256_set1_epi32(s);
    __m256i acc_even = _mm256_setzero_si256();
    __m256i acc_odd = _mm256_setzero_si256();
    __m256i vmax = _mm256_setzero_si256();
    int j = 0;
    for (; j + 8 <= len; j += 8) {
        const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prof + j));
        const __m256i vf = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(f + j));
        const __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + j));
        const __m256i delta = _mm256_mullo_epi32(_mm256_add_epi32(vf, vr), vs);
        const __m256i a = _mm256_abs_epi32(_mm256_add_epi32(c, delta));
        vmax = _mm256_max_epi32(vmax, a);
        accumulate_pow<P>(a, acc_even, acc_odd);
    }
    Eval e;
    e.fitness = hsum_epi64(acc_even) + hsum_epi64(acc_odd);
    e.peak = hmax_epi32(vmax);
    for (; j < len; ++j) {
        const std::int32_t a = std::abs(prof[j] + s * (f[j] + r[j]));
        e.peak = std::max(e.peak, a);
        e.fitness += pow_p<P>(a);
    }
    return e;
}

template <int P>
Eval profile_eval_avx2(const std::int32_t* prof, int len, const std::int64_t* /*pow_tab*/) {
    __m256i acc_even = _mm256_setzero_si256();
    __m256i acc_odd = _mm256_setzero_si256();
    __m256i vmax = _mm256_setzero_si256();
    int j = 0;
    for (; j + 8 <= len; j += 8) {
        const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prof + j));
        const __m256i a = _mm256_abs_epi32(c);
        vmax = _mm256_max_epi32(vmax, a);
        accumulate_pow<P>(a, acc_even, acc_odd);
    }
    Eval e;
    e.fitness = hsum_epi64(acc_even) + hsum_epi64(acc_odd);
    e.peak = hmax_epi32(vmax);
    for (; j < len; ++j) {
        const std::int32_t a = std::abs(prof[j]);
        e.peak = std::max(e.peak, a);
        e.fitness += pow_p<P>(a);
    }
    return e;
}

void apply_flip_avx2(std::int32_t* prof, const std::int32_t* f,
                     const std::int32_t* r, int len, std::int32_t s) {
    const __m256i vs = _mm256_set1_epi32(s);
    int j = 0;
    for (; j + 8 <= len; j += 8) {
        const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prof + j));
        const __m256i vf = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(f + j));
        const __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + j));
        const __m256i delta = _mm256_mullo_epi32(_mm256_add_epi32(vf, vr), vs);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(prof + j), _mm256_add_epi32(c, delta));
    }
    for (; j < len; ++j) {
        prof[j] += s * (f[j] + r[j]);
    }
}

// C_u as (#agreeing pairs) - (#disagreeing pairs): the byte product of two
// {-1,+1} lanes comes out of _mm256_sign_epi8 directly; biasing by +1 turns
// the lane sum into an unsigned SAD reduction.
void aacf_avx2(const std::int8_t* b, int n, std::int32_t* out) {
    const __m256i ones = _mm256_set1_epi8(1);
    const __m256i zero = _mm256_setzero_si256();
    for (int u = 1; u < n; ++u) {
        const int len = n - u;
        std::int64_t total = 0;
        int j = 0;
        if (len >= 32) {
            __m256i acc = _mm256_setzero_si256();
            for (; j + 32 <= len; j += 32) {
                const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
                const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j + u));
                const __m256i prod = _mm256_sign_epi8(x, y);
                const __m256i biased = _mm256_add_epi8(prod, ones);
                acc = _mm256_add_epi64(acc, _mm256_sad_epu8(biased, zero));
            }
            total = hsum_epi64(acc) - j;   // remove the +1 bias per processed pair
        }
        for (; j < len; ++j) {
            total += static_cast<std::int32_t>(b[j]) * b[j + u];
        }
        out[u - 1] = static_cast<std::int32_t>(total);
    }
}

} // namespace

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }

KernelSet avx2_kernels(int p) {
    KernelSet ks = scalar_kernels();
    ks.aacf = aacf_avx2;
    ks.apply_flip = apply_flip_avx2;
    ks.isa = "avx2";
    switch (p) {
        case 1:
            ks.neighbor_eval = neighbor_eval_avx2<1>;
            ks.profile_eval = profile_eval_avx2<1>;
            break;
        case 2:
            ks.neighbor_eval = neighbor_eval_avx2<2>;
            ks.profile_eval = profile_eval_avx2<2>;
            break;
        case 3:
            ks.neighbor_eval = neighbor_eval_avx2<3>;
            ks.profile_eval = profile_eval_avx2<3>;
            break;
        case 4:
            ks.neighbor_eval = neighbor_eval_avx2<4>;
            ks.profile_eval = profile_eval_avx2<4>;
            break;
        case 5:
            ks.neighbor_eval = neighbor_eval_avx2<5>;
            ks.profile_eval = profile_eval_avx2<5>;
            break;
        default:
            // no specialization; keep the scalar pair
            break;
    }
    return ks;
}

} // namespace pslforge::kernels

#endif // x86-64
