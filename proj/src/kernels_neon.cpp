// NEON kernel variants for aarch64, mirroring the AVX2 set. NEON is
// baseline on aarch64 so there is no runtime feature check.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <cstdlib>

#include "pslforge/kernels.hpp"

namespace pslforge::kernels {

namespace {

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

// Widened |c|^P of 4 int32 lanes added into an int64x2 accumulator.
template <int P>
inline void accumulate_pow(int32x4_t a, int64x2_t& acc) {
    if constexpr (P == 1) {
        acc = vaddw_s32(acc, vget_low_s32(a));
        acc = vaddw_s32(acc, vget_high_s32(a));
    } else if constexpr (P == 2) {
        acc = vaddq_s64(acc, vmull_s32(vget_low_s32(a), vget_low_s32(a)));
        acc = vaddq_s64(acc, vmull_s32(vget_high_s32(a), vget_high_s32(a)));
    } else if constexpr (P == 3) {
        const int32x4_t sq = vmulq_s32(a, a);
        acc = vaddq_s64(acc, vmull_s32(vget_low_s32(sq), vget_low_s32(a)));
        acc = vaddq_s64(acc, vmull_s32(vget_high_s32(sq), vget_high_s32(a)));
    } else if constexpr (P == 4) {
        const int32x4_t sq = vmulq_s32(a, a);
        acc = vaddq_s64(acc, vmull_s32(vget_low_s32(sq), vget_low_s32(sq)));
        acc = vaddq_s64(acc, vmull_s32(vget_high_s32(sq), vget_high_s32(sq)));
    } else {
        static_assert(P == 5);
        const int32x4_t sq = vmulq_s32(a, a);
        const int32x4_t cube = vmulq_s32(sq, a);
        acc = vaddq_s64(acc, vmull_s32(vget_low_s32(cube), vget_low_s32(sq)));
        acc = vaddq_s64(acc, vmull_s32(vget_high_s32(cube), vget_high_s32(sq)));
    }
}

template <int P>
Eval neighbor_eval_neon(const std::int32_t* prof, const std::int32_t* f,
                        const std::int32_t* r, int len, std::int32_t s,
                        const std::int64_t* /*pow_tab*/) {
    const int32x4_t vs = vdupq_n_s32(s);
    int64x2_t acc = vdupq_n_s64(0);
    int32x4_t vmax = vdupq_n_s32(0);
    int j = 0;
    for (; j + 4 <= len; j += 4) {
        const int32x4_t c = vld1q_s32(prof + j);
        const int32x4_t vf = vld1q_s32(f + j);
        const int32x4_t vr = vld1q_s32(r + j);
        const int32x4_t a = vabsq_s32(vaddq_s32(c, vmulq_s32(vaddq_s32(vf, vr), vs)));
        vmax = vmaxq_s32(vmax, a);
        accumulate_pow<P>(a, acc);
    }
    Eval e;
    e.fitness = vgetq_lane_s64(acc, 0) + vgetq_lane_s64(acc, 1);
    e.peak = vmaxvq_s32(vmax);
    for (; j < len; ++j) {
        const std::int32_t a = std::abs(prof[j] + s * (f[j] + r[j]));
        e.peak = std::max(e.peak, a);
        e.fitness += pow_p<P>(a);
    }
    return e;
}

template <int P>
Eval profile_eval_neon(const std::int32_t* prof, int len, const std::int64_t* /*pow_tab*/) {
    int64x2_t acc = vdupq_n_s64(0);
    int32x4_t vmax = vdupq_n_s32(0);
    int j = 0;
    for (; j + 4 <= len; j += 4) {
        const int32x4_t a = vabsq_s32(vld1q_s32(prof + j));
        vmax = vmaxq_s32(vmax, a);
        accumulate_pow<P>(a, acc);
    }
    Eval e;
    e.fitness = vgetq_lane_s64(acc, 0) + vgetq_lane_s64(acc, 1);
    e.peak = vmaxvq_s32(vmax);
    for (; j < len; ++j) {
        const std::int32_t a = std::abs(prof[j]);
        e.peak = std::max(e.peak, a);
        e.fitness += pow_p<P>(a);
    }
    return e;
}

void apply_flip_neon(std::int32_t* prof, const std::int32_t* f,
                     const std::int32_t* r, int len, std::int32_t s) {
    const int32x4_t vs = vdupq_n_s32(s);
    int j = 0;
    for (; j + 4 <= len; j += 4) {
        const int32x4_t c = vld1q_s32(prof + j);
        const int32x4_t vf = vld1q_s32(f + j);
        const int32x4_t vr = vld1q_s32(r + j);
        vst1q_s32(prof + j, vaddq_s32(c, vmulq_s32(vaddq_s32(vf, vr), vs)));
    }
    for (; j < len; ++j) {
        prof[j] += s * (f[j] + r[j]);
    }
}

void aacf_neon(const std::int8_t* b, int n, std::int32_t* out) {
    for (int u = 1; u < n; ++u) {
        const int len = n - u;
        std::int32_t total = 0;
        int j = 0;
        if (len >= 16) {
            int32x4_t acc = vdupq_n_s32(0);
            for (; j + 16 <= len; j += 16) {
                const int8x16_t x = vld1q_s8(b + j);
                const int8x16_t y = vld1q_s8(b + j + u);
                const int8x16_t prod = vmulq_s8(x, y);
                acc = vpadalq_s16(acc, vpaddlq_s8(prod));
            }
            total = vaddvq_s32(acc);
        }
        for (; j < len; ++j) {
            total += static_cast<std::int32_t>(b[j]) * b[j + u];
        }
        out[u - 1] = total;
    }
}

} // namespace

KernelSet neon_kernels(int p) {
    KernelSet ks = scalar_kernels();
    ks.aacf = aacf_neon;
    ks.apply_flip = apply_flip_neon;
    ks.isa = "neon";
    switch (p) {
        case 1:
            ks.neighbor_eval = neighbor_eval_neon<1>;
            ks.profile_eval = profile_eval_neon<1>;
            break;
        case 2:
            ks.neighbor_eval = neighbor_eval_neon<2>;
            ks.profile_eval = profile_eval_neon<2>;
            break;
        case 3:
            ks.neighbor_eval = neighbor_eval_neon<3>;
            ks.profile_eval = profile_eval_neon<3>;
            break;
        case 4:
            ks.neighbor_eval = neighbor_eval_neon<4>;
            ks.profile_eval = profile_eval_neon<4>;
            break;
        case 5:
            ks.neighbor_eval = neighbor_eval_neon<5>;
            ks.profile_eval = profile_eval_neon<5>;
            break;
        default:
            break;
    }
    return ks;
}

} // namespace pslforge::kernels

#endif // aarch64
