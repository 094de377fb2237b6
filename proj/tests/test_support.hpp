#pragma once

// Naive reference implementations used as independent oracles in tests.
// These intentionally share no code with the production kernels.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace testsupport {

inline std::vector<std::int64_t> naive_aacf(std::span<const std::int8_t> b) {
    const int n = static_cast<int>(b.size());
    std::vector<std::int64_t> c;
    c.reserve(static_cast<std::size_t>(n - 1));
    for (int u = 1; u < n; ++u) {
        std::int64_t s = 0;
        for (int j = 0; j + u < n; ++j) s += static_cast<std::int64_t>(b[j]) * b[j + u];
        c.push_back(s);
    }
    return c;
}

inline std::int64_t naive_psl(std::span<const std::int8_t> b) {
    std::int64_t m = 0;
    for (std::int64_t v : naive_aacf(b)) m = std::max(m, v < 0 ? -v : v);
    return m;
}

inline std::int64_t naive_fitness(std::span<const std::int8_t> b, int p) {
    std::int64_t total = 0;
    for (std::int64_t v : naive_aacf(b)) {
        std::int64_t a = v < 0 ? -v : v;
        std::int64_t term = 1;
        for (int k = 0; k < p; ++k) term *= a;
        total += term;
    }
    return total;
}

inline std::vector<std::int8_t> random_elems(int n, std::mt19937_64& gen) {
    std::vector<std::int8_t> e(static_cast<std::size_t>(n));
    for (auto& x : e) x = (gen() & 1) ? std::int8_t{1} : std::int8_t{-1};
    return e;
}

} // namespace testsupport
