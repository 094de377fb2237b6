#include "pslforge/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pslforge::oracle {

namespace {

// Deliberately naive O(n^2) autocorrelation peak, kept independent of the
// production kernels so the two can cross-check each other. Short shifts
// are summed first: they are cheap and prune early.
int psl_naive_bounded(const std::int8_t* b, int n, int bound) {
    int m = 0;
    for (int u = n - 1; u >= 1; --u) {
        int s = 0;
        for (int j = 0; j + u < n; ++j) s += static_cast<int>(b[j]) * b[j + u];
        m = std::max(m, std::abs(s));
        if (m > bound) return m;
    }
    return m;
}

void fill_sequence(std::uint64_t value, int n, std::int8_t* b) {
    // bit n-1-i of value holds b_i, matching the hex codec convention
    for (int i = 0; i < n; ++i) {
        b[i] = ((value >> (n - 1 - i)) & 1) ? std::int8_t{1} : std::int8_t{-1};
    }
}

struct ChunkResult {
    int min_psl;
    std::uint64_t count;
    std::uint64_t witness;
};

ChunkResult scan_min(int n, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::int8_t> buf(static_cast<std::size_t>(n));
    ChunkResult res{n, 0, 0};
    for (std::uint64_t v = lo; v < hi; ++v) {
        fill_sequence(v, n, buf.data());
        const int p = psl_naive_bounded(buf.data(), n, res.min_psl);
        if (p < res.min_psl) {
            res.min_psl = p;
            res.count = 1;
            res.witness = v;
        } else if (p == res.min_psl) {
            ++res.count;
        }
    }
    return res;
}

void check_range(int n, int cap) {
    if (n < 2) throw std::invalid_argument("exhaustive scan requires n >= 2");
    if (cap < 2 || cap > 62) throw std::invalid_argument("cap must be in 2..62");
    if (n > cap) {
        throw std::domain_error("length exceeds the exhaustive-scan cap; raise the cap "
                                "explicitly for offline runs");
    }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> partition(std::uint64_t total, int threads) {
    const int k = std::max(1, threads);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
    const std::uint64_t step = total / static_cast<std::uint64_t>(k);
    std::uint64_t lo = 0;
    for (int i = 0; i < k; ++i) {
        const std::uint64_t hi = (i == k - 1) ? total : lo + step;
        if (lo < hi) parts.emplace_back(lo, hi);
        lo = hi;
    }
    return parts;
}

} // namespace

OracleReport min_psl_exhaustive(int n, int cap, int threads) {
    check_range(n, cap);
    // negation symmetry: scan only b_0 == -1 (top bit clear), count double
    const std::uint64_t half = 1ULL << (n - 1);
    const auto parts = partition(half, threads);

    std::vector<ChunkResult> results(parts.size());
    if (parts.size() == 1) {
        results[0] = scan_min(n, parts[0].first, parts[0].second);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) {
            pool.emplace_back([&, i] { results[i] = scan_min(n, parts[i].first, parts[i].second); });
        }
        for (auto& t : pool) t.join();
    }

    ChunkResult agg{n, 0, 0};
    for (const auto& r : results) {
        if (r.min_psl < agg.min_psl) {
            agg = r;
        } else if (r.min_psl == agg.min_psl) {
            agg.count += r.count;
            agg.witness = std::min(agg.witness, r.witness);   // chunks scan ascending ranges
        }
    }

    std::vector<std::int8_t> buf(static_cast<std::size_t>(n));
    fill_sequence(agg.witness, n, buf.data());
    return OracleReport{n, agg.min_psl, BinarySequence(std::move(buf)), agg.count * 2,
                        1ULL << n};
}

std::map<int, std::uint64_t> enumerate_psl_histogram(int n, int cap, int threads) {
    check_range(n, cap);
    const std::uint64_t half = 1ULL << (n - 1);
    const auto parts = partition(half, threads);

    std::vector<std::map<int, std::uint64_t>> maps(parts.size());
    auto scan = [n](std::uint64_t lo, std::uint64_t hi, std::map<int, std::uint64_t>& out) {
        std::vector<std::int8_t> buf(static_cast<std::size_t>(n));
        for (std::uint64_t v = lo; v < hi; ++v) {
            fill_sequence(v, n, buf.data());
            out[psl_naive_bounded(buf.data(), n, n)] += 1;
        }
    };
    if (parts.size() == 1) {
        scan(parts[0].first, parts[0].second, maps[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) {
            pool.emplace_back([&, i] { scan(parts[i].first, parts[i].second, maps[i]); });
        }
        for (auto& t : pool) t.join();
    }

    std::map<int, std::uint64_t> total;
    for (const auto& m : maps) {
        for (const auto& [k, v] : m) total[k] += v * 2;
    }
    return total;
}

} // namespace pslforge::oracle
