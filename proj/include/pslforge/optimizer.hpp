#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "pslforge/kernels.hpp"
#include "pslforge/rng.hpp"
#include "pslforge/sequence.hpp"

namespace pslforge {

/// All inputs of a hill-climbing run. Zero-valued h_max means "use the
/// default ceil(sqrt(n))".
struct SearchConfig {
    int n = 0;
    FitnessMagnitude p{};
    int goal = 1;                        // stop once a sequence with PSL <= goal is seen
    int threshold = 1000;                // consecutive failed quakes before a restart
    int h_min = 1;                       // quake flip-count bounds
    int h_max = 0;
    std::int64_t restart_cap = 100000;   // maximum random (re)starts, first start included
    std::optional<std::uint64_t> seed;   // entropy when unset
    int workers = 1;                     // independent parallel instances
    std::optional<double> time_budget_seconds;

    /// Fills defaults and validates; throws std::invalid_argument.
    SearchConfig resolved() const;
};

struct SearchStats {
    std::int64_t restarts = 0;
    std::int64_t quakes = 0;
    std::int64_t neighbor_evals = 0;
    double elapsed_seconds = 0.0;
};

struct SearchResult {
    BinarySequence sequence;
    int psl = 0;
    std::int64_t fitness = 0;
    double psl_db = 0.0;
    double merit_factor = 0.0;
    bool goal_met = false;
    SearchStats stats;
    std::uint64_t seed_used = 0;     // master seed (reported for reproduction)
    int winner_worker = 0;           // worker whose sequence is reported
    std::uint64_t winner_seed = 0;   // that worker's derived stream seed
};

struct ProgressSnapshot {
    std::int64_t restarts = 0;
    std::int64_t quakes = 0;
    int best_psl = 0;
    double elapsed_seconds = 0.0;
};
using ProgressFn = std::function<void(const ProgressSnapshot&)>;

/// Each element independently -1 or +1 with probability 1/2.
BinarySequence random_sequence(int n, Rng& rng);

/// Maintains a sequence together with its sidelobe profile, fitness and
/// peak, supporting O(n) single-flip neighbor evaluation and O(n) flip
/// commits. Kernel variant picked once per (p, n).
class IncrementalEvaluator {
public:
    IncrementalEvaluator(int n, FitnessMagnitude p);

    void reset(std::span<const std::int8_t> seq);
    void reset(const BinarySequence& seq) { reset(seq.elements()); }

    /// Fitness/peak of the neighbor with position i flipped; the state is
    /// not modified.
    kernels::Eval evaluate_neighbor(int i) const;

    /// Commits the flip of position i and refreshes cached fitness/peak.
    void apply_flip(int i);

    /// Restores a snapshot taken from this evaluator (sequence + profile +
    /// cached values) without recomputing the autocorrelation.
    void restore(std::span<const std::int8_t> seq, std::span<const std::int32_t> profile,
                 std::int64_t fit, std::int32_t pk);

    int length() const noexcept { return n_; }
    FitnessMagnitude magnitude() const noexcept { return p_; }
    std::int64_t fitness() const noexcept { return fitness_; }
    std::int32_t peak() const noexcept { return peak_; }
    std::span<const std::int8_t> sequence() const noexcept { return {seq_.data(), static_cast<std::size_t>(n_)}; }
    std::span<const std::int32_t> profile() const noexcept { return {prof_.data(), static_cast<std::size_t>(n_ - 1)}; }
    const char* isa() const noexcept { return ks_.isa; }

    BinarySequence to_sequence() const;
    SidelobeProfile to_profile() const;

    /// Recomputes everything from the raw sequence and aborts on any
    /// disagreement with the cached state. Debug aid.
    void verify_cache() const;

private:
    int n_;
    FitnessMagnitude p_;
    kernels::KernelSet ks_;
    std::vector<std::int64_t> pow_tab_;    // v^P for v = 0..n
    std::vector<std::int8_t> seq_;
    std::vector<std::int32_t> fwd_;        // fwd_[k] = seq_[k], zero for k >= n; length 2n
    std::vector<std::int32_t> rev_;        // rev_[k] = seq_[n-1-k], zero for k >= n
    std::vector<std::int32_t> prof_;       // C_1..C_{n-1}
    std::int64_t fitness_ = 0;
    std::int32_t peak_ = 0;
#ifndef NDEBUG
    mutable std::uint64_t flips_since_check_ = 0;
#endif
};

/// Lowest (psl, fitness) sequence seen so far, over visited states and all
/// evaluated neighbors.
struct BestSeen {
    int psl = std::numeric_limits<int>::max();
    std::int64_t fitness = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int8_t> sequence;

    bool would_improve(std::int32_t pk, std::int64_t fit) const {
        return pk < psl || (pk == psl && fit < fitness);
    }
    void offer_state(const IncrementalEvaluator& ev);
    void offer_neighbor(const IncrementalEvaluator& ev, int i, const kernels::Eval& e);
};

/// Working state of one climb/quake/restart cycle: the current sequence
/// plus the best local minimum of this restart (the quake anchor).
struct OptimizerState {
    explicit OptimizerState(const SearchConfig& resolved_cfg);

    IncrementalEvaluator current;
    std::vector<std::int8_t> anchor_seq;
    std::vector<std::int32_t> anchor_profile;
    std::int64_t anchor_fitness = 0;
    std::int32_t anchor_peak = 0;
    int threshold_left = 0;

    /// Fresh (re)start: adopts seq, re-anchors on it, resets the threshold.
    void start_from(const BinarySequence& seq, const SearchConfig& cfg);
    /// Snapshot the current local minimum as the new anchor.
    void reanchor();
    void restore_anchor();

private:
    std::vector<int> scratch_positions_;   // quake sampling buffer
    friend void quake(OptimizerState&, const SearchConfig&, Rng&);
};

enum class StepKind { improved, local_minimum, goal_reached };
struct StepOutcome {
    StepKind kind;
    int flip_index;   // accepted flip, goal neighbor, or -1 for local_minimum
};

/// One best-improvement pass over all n single-flip neighbors in ascending
/// flip order. Returns goal_reached (with the state moved to the first
/// neighbor whose PSL <= goal), improved (moved to the minimum-fitness
/// neighbor, first encountered on ties, strict improvement only), or
/// local_minimum (state unchanged).
StepOutcome climb_step(OptimizerState& st, const SearchConfig& cfg, SearchStats& stats,
                       BestSeen* best = nullptr);

/// Escape move: restores the anchor, then flips h distinct random
/// positions, h uniform in [h_min, h_max].
void quake(OptimizerState& st, const SearchConfig& cfg, Rng& rng);

/// Full shotgun hill climbing run (climbs, quakes, restarts, optional
/// parallel workers). Progress callbacks, when requested, fire from the
/// coordinating thread roughly every progress_interval_seconds.
SearchResult search(const SearchConfig& cfg, ProgressFn progress = {},
                    double progress_interval_seconds = 0.0);

} // namespace pslforge
