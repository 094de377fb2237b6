#include "pslforge/run_record.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "pslforge/codec.hpp"
#include "pslforge/kernels.hpp"
#include "pslforge/version.hpp"

namespace pslforge {

namespace {

std::string utc_now_iso8601() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

RunRecord RunRecord::make(const SearchConfig& resolved_cfg, const SearchResult& result) {
    return RunRecord{resolved_cfg,
                     result,
                     codec::encode(result.sequence).text,
                     kVersion,
                     kernels::active_isa(resolved_cfg.p.value(), resolved_cfg.n),
                     utc_now_iso8601()};
}

std::string RunRecord::to_json(int indent) const {
    const nlohmann::json j{{"n", config.n},
                           {"goal", config.goal},
                           {"p", config.p.value()},
                           {"threshold", config.threshold},
                           {"hmin", config.h_min},
                           {"hmax", config.h_max},
                           {"restarts_cap", config.restart_cap},
                           {"seed", result.seed_used},
                           {"workers", config.workers},
                           {"sequence_hex", sequence_hex},
                           {"psl", result.psl},
                           {"fitness", result.fitness},
                           {"psl_db", result.psl_db},
                           {"merit_factor", result.merit_factor},
                           {"goal_met", result.goal_met},
                           {"restarts_used", result.stats.restarts},
                           {"quakes_used", result.stats.quakes},
                           {"neighbor_evaluations", result.stats.neighbor_evals},
                           {"elapsed_seconds", result.stats.elapsed_seconds},
                           {"version", version},
                           {"isa", isa},
                           {"winner_worker", result.winner_worker},
                           {"timestamp", timestamp}};
    return j.dump(indent);
}

std::string RunRecord::to_csv() const {
    std::ostringstream out;
    out << "n,goal,p,threshold,hmin,hmax,restarts_cap,seed,workers,sequence_hex,psl,fitness,"
           "psl_db,merit_factor,goal_met,restarts_used,quakes_used,neighbor_evaluations,"
           "elapsed_seconds,version\n";
    out << config.n << ',' << config.goal << ',' << config.p.value() << ',' << config.threshold
        << ',' << config.h_min << ',' << config.h_max << ',' << config.restart_cap << ','
        << result.seed_used << ',' << config.workers << ',' << sequence_hex << ',' << result.psl
        << ',' << result.fitness << ',' << fmt_double(result.psl_db) << ','
        << fmt_double(result.merit_factor) << ',' << (result.goal_met ? "true" : "false") << ','
        << result.stats.restarts << ',' << result.stats.quakes << ','
        << result.stats.neighbor_evals << ',' << fmt_double(result.stats.elapsed_seconds) << ','
        << version << '\n';
    return out.str();
}

} // namespace pslforge
