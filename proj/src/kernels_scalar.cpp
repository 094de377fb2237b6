#include "pslforge/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace pslforge::kernels {

namespace {

void aacf_scalar(const std::int8_t* b, int n, std::int32_t* out) {
    for (int u = 1; u < n; ++u) {
        std::int32_t s = 0;
        for (int j = 0; j + u < n; ++j) {
            s += static_cast<std::int32_t>(b[j]) * b[j + u];
        }
        out[u - 1] = s;
    }
}

Eval neighbor_eval_scalar(const std::int32_t* prof, const std::int32_t* f,
                          const std::int32_t* r, int len, std::int32_t s,
                          const std::int64_t* pow_tab) {
    Eval e;
    for (int j = 0; j < len; ++j) {
        const std::int32_t c = prof[j] + s * (f[j] + r[j]);
        const std::int32_t a = std::abs(c);
        e.peak = std::max(e.peak, a);
        e.fitness += pow_tab[a];
    }
    return e;
}

void apply_flip_scalar(std::int32_t* prof, const std::int32_t* f,
                       const std::int32_t* r, int len, std::int32_t s) {
    for (int j = 0; j < len; ++j) {
        prof[j] += s * (f[j] + r[j]);
    }
}

Eval profile_eval_scalar(const std::int32_t* prof, int len, const std::int64_t* pow_tab) {
    Eval e;
    for (int j = 0; j < len; ++j) {
        const std::int32_t a = std::abs(prof[j]);
        e.peak = std::max(e.peak, a);
        e.fitness += pow_tab[a];
    }
    return e;
}

} // namespace

KernelSet scalar_kernels() {
    return KernelSet{aacf_scalar, neighbor_eval_scalar, apply_flip_scalar,
                     profile_eval_scalar, "scalar"};
}

int max_safe_length(int p) {
    // largest n with (n-1) * n^p <= INT64_MAX, capped at int32 range
    const auto limit = static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max());
    std::int64_t lo = 2, hi = std::numeric_limits<std::int32_t>::max();
    auto safe = [&](std::int64_t n) {
        unsigned __int128 v = static_cast<unsigned __int128>(n - 1);
        for (int k = 0; k < p; ++k) {
            v *= static_cast<unsigned __int128>(n);
            if (v > limit) return false;
        }
        return true;
    };
    if (safe(hi)) return static_cast<int>(hi);
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (safe(mid)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return static_cast<int>(lo);
}

} // namespace pslforge::kernels
