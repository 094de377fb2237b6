#pragma once

#include <cstdint>
#include <random>

namespace pslforge {

/// One splitmix64 step; used for seed expansion and per-worker stream
/// derivation.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent stream seed for a worker. Worker 0 does not alias the
/// master seed.
inline std::uint64_t derive_worker_seed(std::uint64_t master, int worker) {
    std::uint64_t s = master;
    std::uint64_t mixed = splitmix64_next(s);
    s = mixed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(worker + 1));
    return splitmix64_next(s);
}

/// mt19937_64 with hand-rolled bounded draws so that seeded runs replay
/// identically on every platform (std distributions are
/// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound), bound >= 1. Lemire multiply-shift
    /// with rejection; unbiased.
    std::uint64_t bounded(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0ULL - bound) % bound;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Fair coin, one bit per call from a 64-bit buffer.
    bool coin() {
        if (bits_left_ == 0) {
            bits_ = next_u64();
            bits_left_ = 64;
        }
        const bool b = (bits_ & 1) != 0;
        bits_ >>= 1;
        --bits_left_;
        return b;
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t bits_ = 0;
    int bits_left_ = 0;
};

} // namespace pslforge
