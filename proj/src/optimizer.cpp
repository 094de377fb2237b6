#include "pslforge/optimizer.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace pslforge {

namespace {

using Clock = std::chrono::steady_clock;

int default_h_max(int n) {
    int h = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    while (h * h < n) ++h;              // guard against FP undershoot
    while (h > 1 && (h - 1) * (h - 1) >= n) --h;
    return h;
}

} // namespace

SearchConfig SearchConfig::resolved() const {
    SearchConfig c = *this;
    if (c.n < 2) throw std::invalid_argument("search requires n >= 2");
    if (c.goal < 1) throw std::invalid_argument("goal PSL must be >= 1");
    if (c.threshold < 1) throw std::invalid_argument("quake threshold must be >= 1");
    if (c.h_max == 0) c.h_max = default_h_max(c.n);
    if (c.h_min < 1 || c.h_min > c.h_max || c.h_max > c.n) {
        throw std::invalid_argument("need 1 <= h_min <= h_max <= n");
    }
    if (c.restart_cap < 1) throw std::invalid_argument("restart cap must be >= 1");
    if (c.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (c.time_budget_seconds && *c.time_budget_seconds <= 0.0) {
        throw std::invalid_argument("time budget must be positive");
    }
    if (c.n > kernels::max_safe_length(c.p.value())) {
        throw std::invalid_argument("fitness would overflow int64 for this n and p");
    }
    return c;
}

BinarySequence random_sequence(int n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("sequence length must be at least 2");
    std::vector<std::int8_t> elems(static_cast<std::size_t>(n));
    for (auto& e : elems) e = rng.coin() ? std::int8_t{1} : std::int8_t{-1};
    return BinarySequence(std::move(elems));
}

// ---------------------------------------------------------------------------
// IncrementalEvaluator

IncrementalEvaluator::IncrementalEvaluator(int n, FitnessMagnitude p)
    : n_(n),
      p_(p),
      ks_(kernels::select_kernels(p.value(), n)),
      pow_tab_(static_cast<std::size_t>(n) + 1),
      seq_(static_cast<std::size_t>(n)),
      fwd_(2 * static_cast<std::size_t>(n), 0),
      rev_(2 * static_cast<std::size_t>(n), 0),
      prof_(static_cast<std::size_t>(n - 1), 0) {
    if (n < 2) throw std::invalid_argument("evaluator requires n >= 2");
    if (n > kernels::max_safe_length(p.value())) {
        throw std::invalid_argument("fitness would overflow int64 for this n and p");
    }
    for (int v = 0; v <= n; ++v) {
        pow_tab_[static_cast<std::size_t>(v)] = checked_ipow(v, p.value());
    }
}

void IncrementalEvaluator::reset(std::span<const std::int8_t> seq) {
    if (static_cast<int>(seq.size()) != n_) {
        throw std::invalid_argument("sequence length mismatch");
    }
    std::copy(seq.begin(), seq.end(), seq_.begin());
    for (int k = 0; k < n_; ++k) {
        fwd_[static_cast<std::size_t>(k)] = seq_[static_cast<std::size_t>(k)];
        rev_[static_cast<std::size_t>(k)] = seq_[static_cast<std::size_t>(n_ - 1 - k)];
    }
    ks_.aacf(seq_.data(), n_, prof_.data());
    const kernels::Eval e = ks_.profile_eval(prof_.data(), n_ - 1, pow_tab_.data());
    fitness_ = e.fitness;
    peak_ = e.peak;
}

kernels::Eval IncrementalEvaluator::evaluate_neighbor(int i) const {
    const std::int32_t s = -2 * static_cast<std::int32_t>(seq_[static_cast<std::size_t>(i)]);
    return ks_.neighbor_eval(prof_.data(), fwd_.data() + i + 1, rev_.data() + (n_ - i),
                             n_ - 1, s, pow_tab_.data());
}

void IncrementalEvaluator::apply_flip(int i) {
    const std::int32_t s = -2 * static_cast<std::int32_t>(seq_[static_cast<std::size_t>(i)]);
    ks_.apply_flip(prof_.data(), fwd_.data() + i + 1, rev_.data() + (n_ - i), n_ - 1, s);
    const std::int8_t flipped = static_cast<std::int8_t>(-seq_[static_cast<std::size_t>(i)]);
    seq_[static_cast<std::size_t>(i)] = flipped;
    fwd_[static_cast<std::size_t>(i)] = flipped;
    rev_[static_cast<std::size_t>(n_ - 1 - i)] = flipped;
    const kernels::Eval e = ks_.profile_eval(prof_.data(), n_ - 1, pow_tab_.data());
    fitness_ = e.fitness;
    peak_ = e.peak;
#ifndef NDEBUG
    if (++flips_since_check_ % 4096 == 0) verify_cache();
#endif
}

void IncrementalEvaluator::restore(std::span<const std::int8_t> seq,
                                   std::span<const std::int32_t> profile,
                                   std::int64_t fit, std::int32_t pk) {
    std::copy(seq.begin(), seq.end(), seq_.begin());
    std::copy(profile.begin(), profile.end(), prof_.begin());
    for (int k = 0; k < n_; ++k) {
        fwd_[static_cast<std::size_t>(k)] = seq_[static_cast<std::size_t>(k)];
        rev_[static_cast<std::size_t>(k)] = seq_[static_cast<std::size_t>(n_ - 1 - k)];
    }
    fitness_ = fit;
    peak_ = pk;
}

BinarySequence IncrementalEvaluator::to_sequence() const {
    return BinarySequence(std::vector<std::int8_t>(seq_.begin(), seq_.begin() + n_));
}

SidelobeProfile IncrementalEvaluator::to_profile() const {
    return SidelobeProfile(n_, std::vector<std::int32_t>(prof_.begin(), prof_.end()));
}

void IncrementalEvaluator::verify_cache() const {
    std::vector<std::int32_t> fresh(static_cast<std::size_t>(n_ - 1));
    kernels::scalar_kernels().aacf(seq_.data(), n_, fresh.data());
    if (fresh != prof_) std::abort();
    const kernels::Eval e =
        kernels::scalar_kernels().profile_eval(fresh.data(), n_ - 1, pow_tab_.data());
    if (e.fitness != fitness_ || e.peak != peak_) std::abort();
}

// ---------------------------------------------------------------------------
// Climb, quake, best-seen

void BestSeen::offer_state(const IncrementalEvaluator& ev) {
    if (would_improve(ev.peak(), ev.fitness())) {
        psl = ev.peak();
        fitness = ev.fitness();
        sequence.assign(ev.sequence().begin(), ev.sequence().end());
    }
}

void BestSeen::offer_neighbor(const IncrementalEvaluator& ev, int i, const kernels::Eval& e) {
    if (would_improve(e.peak, e.fitness)) {
        psl = e.peak;
        fitness = e.fitness;
        sequence.assign(ev.sequence().begin(), ev.sequence().end());
        sequence[static_cast<std::size_t>(i)] =
            static_cast<std::int8_t>(-sequence[static_cast<std::size_t>(i)]);
    }
}

OptimizerState::OptimizerState(const SearchConfig& resolved_cfg)
    : current(resolved_cfg.n, resolved_cfg.p),
      anchor_seq(static_cast<std::size_t>(resolved_cfg.n)),
      anchor_profile(static_cast<std::size_t>(resolved_cfg.n - 1)),
      scratch_positions_(static_cast<std::size_t>(resolved_cfg.n)) {
    std::iota(scratch_positions_.begin(), scratch_positions_.end(), 0);
}

void OptimizerState::start_from(const BinarySequence& seq, const SearchConfig& cfg) {
    current.reset(seq);
    reanchor();
    threshold_left = cfg.threshold;
}

void OptimizerState::reanchor() {
    const auto s = current.sequence();
    const auto p = current.profile();
    std::copy(s.begin(), s.end(), anchor_seq.begin());
    std::copy(p.begin(), p.end(), anchor_profile.begin());
    anchor_fitness = current.fitness();
    anchor_peak = current.peak();
}

void OptimizerState::restore_anchor() {
    current.restore(anchor_seq, anchor_profile, anchor_fitness, anchor_peak);
}

StepOutcome climb_step(OptimizerState& st, const SearchConfig& cfg, SearchStats& stats,
                       BestSeen* best) {
    IncrementalEvaluator& ev = st.current;
    const int n = ev.length();
    std::int64_t min_fit = std::numeric_limits<std::int64_t>::max();
    int min_i = -1;
    for (int i = 0; i < n; ++i) {
        const kernels::Eval e = ev.evaluate_neighbor(i);
        ++stats.neighbor_evals;
        if (best != nullptr) best->offer_neighbor(ev, i, e);
        if (e.peak <= cfg.goal) {
            ev.apply_flip(i);
            return {StepKind::goal_reached, i};
        }
        if (e.fitness < min_fit) {
            min_fit = e.fitness;
            min_i = i;
        }
    }
    if (min_fit < ev.fitness()) {
        ev.apply_flip(min_i);
        return {StepKind::improved, min_i};
    }
    return {StepKind::local_minimum, -1};
}

void quake(OptimizerState& st, const SearchConfig& cfg, Rng& rng) {
    st.restore_anchor();
    const int n = st.current.length();
    const int h = cfg.h_min +
                  static_cast<int>(rng.bounded(static_cast<std::uint64_t>(cfg.h_max - cfg.h_min + 1)));
    auto& idx = st.scratch_positions_;
    for (int k = 0; k < h; ++k) {
        const int j = k + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - k)));
        std::swap(idx[static_cast<std::size_t>(k)], idx[static_cast<std::size_t>(j)]);
        st.current.apply_flip(idx[static_cast<std::size_t>(k)]);
    }
}

// ---------------------------------------------------------------------------
// Full search

namespace {

struct WorkerSlot {
    BestSeen best;
    SearchStats stats;
    bool found_goal = false;
    std::vector<std::int8_t> goal_sequence;
};

struct SharedState {
    std::atomic<bool> stop{false};
    std::atomic<int> winner{-1};
    std::atomic<int> done{0};
    std::atomic<std::int64_t> restarts{0};
    std::atomic<std::int64_t> quakes{0};
    std::atomic<int> best_psl{std::numeric_limits<int>::max()};
    std::optional<Clock::time_point> deadline;

    bool expired() const { return deadline && Clock::now() >= *deadline; }
    void offer_best_psl(int v) {
        int cur = best_psl.load(std::memory_order_relaxed);
        while (v < cur && !best_psl.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
        }
    }
};

void run_worker(const SearchConfig& cfg, int worker_id, std::uint64_t stream_seed,
                SharedState& shared, WorkerSlot& slot) {
    Rng rng(stream_seed);
    OptimizerState st(cfg);
    SearchStats& stats = slot.stats;

    auto note_state = [&]() {
        slot.best.offer_state(st.current);
        shared.offer_best_psl(slot.best.psl);
    };
    auto goal_reached = [&]() {
        slot.found_goal = true;
        slot.goal_sequence.assign(st.current.sequence().begin(), st.current.sequence().end());
        int expected = -1;
        if (shared.winner.compare_exchange_strong(expected, worker_id)) {
            shared.stop.store(true);
        }
    };

    for (;;) {
        if (stats.restarts >= cfg.restart_cap) break;
        // always complete at least one start so the slot carries a sequence
        if (stats.restarts > 0 &&
            (shared.stop.load(std::memory_order_relaxed) || shared.expired())) {
            break;
        }
        ++stats.restarts;
        shared.restarts.fetch_add(1, std::memory_order_relaxed);
        st.start_from(random_sequence(cfg.n, rng), cfg);
        note_state();
        if (st.current.peak() <= cfg.goal) {
            goal_reached();
            return;
        }
        // climb/quake until the quake threshold runs out, then restart
        while (true) {
            if (shared.stop.load(std::memory_order_relaxed) || shared.expired()) return;
            const StepOutcome out = climb_step(st, cfg, stats, &slot.best);
            shared.offer_best_psl(slot.best.psl);
            if (out.kind == StepKind::goal_reached) {
                goal_reached();
                return;
            }
            if (out.kind == StepKind::improved) continue;
            // local minimum
            if (st.current.fitness() < st.anchor_fitness) {
                st.reanchor();
                st.threshold_left = cfg.threshold;
                continue;
            }
            --st.threshold_left;
            if (st.threshold_left <= 0) break;
            quake(st, cfg, rng);
            ++stats.quakes;
            shared.quakes.fetch_add(1, std::memory_order_relaxed);
            note_state();
            if (st.current.peak() <= cfg.goal) {
                goal_reached();
                return;
            }
        }
    }
}

} // namespace

SearchResult search(const SearchConfig& raw_cfg, ProgressFn progress,
                    double progress_interval_seconds) {
    const SearchConfig cfg = raw_cfg.resolved();
    const std::uint64_t master_seed = cfg.seed ? *cfg.seed : std::random_device{}();

    SharedState shared;
    const auto start = Clock::now();
    if (cfg.time_budget_seconds) {
        shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(*cfg.time_budget_seconds));
    }

    std::vector<WorkerSlot> slots(static_cast<std::size_t>(cfg.workers));
    std::vector<std::uint64_t> stream_seeds(static_cast<std::size_t>(cfg.workers));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(cfg.workers));
    for (int w = 0; w < cfg.workers; ++w) {
        stream_seeds[static_cast<std::size_t>(w)] = derive_worker_seed(master_seed, w);
        threads.emplace_back(
            [&cfg, &shared, &slots, &stream_seeds, w] {
                run_worker(cfg, w, stream_seeds[static_cast<std::size_t>(w)], shared,
                           slots[static_cast<std::size_t>(w)]);
                shared.done.fetch_add(1);
            });
    }

    auto elapsed_s = [&] {
        return std::chrono::duration<double>(Clock::now() - start).count();
    };
    if (progress && progress_interval_seconds > 0.0) {
        double next_tick = progress_interval_seconds;
        while (shared.done.load() < cfg.workers) {
            std::this_thread::sleep_for(std::chrono::milliseconds(50));
            const double el = elapsed_s();
            if (el >= next_tick) {
                next_tick += progress_interval_seconds;
                const int bp = shared.best_psl.load();
                progress(ProgressSnapshot{shared.restarts.load(), shared.quakes.load(),
                                          bp == std::numeric_limits<int>::max() ? 0 : bp, el});
            }
        }
    }
    for (auto& t : threads) t.join();

    SearchStats total;
    for (const auto& s : slots) {
        total.restarts += s.stats.restarts;
        total.quakes += s.stats.quakes;
        total.neighbor_evals += s.stats.neighbor_evals;
    }
    total.elapsed_seconds = elapsed_s();

    int winner = shared.winner.load();
    std::vector<std::int8_t> chosen;
    bool goal_met = false;
    if (winner >= 0) {
        chosen = slots[static_cast<std::size_t>(winner)].goal_sequence;
        goal_met = true;
    } else {
        // best effort: lowest (psl, fitness), then lowest worker id
        winner = 0;
        for (int w = 1; w < cfg.workers; ++w) {
            const auto& a = slots[static_cast<std::size_t>(w)].best;
            const auto& b = slots[static_cast<std::size_t>(winner)].best;
            if (a.psl < b.psl || (a.psl == b.psl && a.fitness < b.fitness)) winner = w;
        }
        chosen = slots[static_cast<std::size_t>(winner)].best.sequence;
    }

    // recompute every reported quantity from the sequence itself
    BinarySequence seq(std::move(chosen));
    const SidelobeProfile prof = aacf(seq);
    return SearchResult{std::move(seq),
                        prof.peak(),
                        fitness(prof, cfg.p),
                        psl_db(prof.peak(), cfg.n),
                        merit_factor(prof),
                        goal_met,
                        total,
                        master_seed,
                        winner,
                        stream_seeds[static_cast<std::size_t>(winner)]};
}

} // namespace pslforge
