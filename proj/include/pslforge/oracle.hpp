#pragma once

#include <cstdint>
#include <map>

#include "pslforge/sequence.hpp"

namespace pslforge::oracle {

/// Exhaustive scans get expensive fast; lengths above the cap are rejected
/// unless the caller raises it explicitly.
inline constexpr int kDefaultCap = 24;

struct OracleReport {
    int n = 0;
    int min_psl = 0;
    BinarySequence witness;        // lexicographically first attaining min_psl
    std::uint64_t count_at_min = 0;
    std::uint64_t enumerated = 0;  // 2^n
};

/// Scans all 2^n sequences (negation symmetry halves the work) with a naive
/// O(n^2) autocorrelation, deliberately independent of the incremental
/// search machinery. Deterministic result for any thread count.
OracleReport min_psl_exhaustive(int n, int cap = kDefaultCap, int threads = 1);

/// PSL value -> number of sequences, totalling 2^n.
std::map<int, std::uint64_t> enumerate_psl_histogram(int n, int cap = kDefaultCap,
                                                     int threads = 1);

} // namespace pslforge::oracle
