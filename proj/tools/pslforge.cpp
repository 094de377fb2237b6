// pslforge: search for low peak-sidelobe-level binary sequences, verify the
// bundled results table, and certify small lengths exhaustively.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "pslforge/codec.hpp"
#include "pslforge/kernels.hpp"
#include "pslforge/oracle.hpp"
#include "pslforge/optimizer.hpp"
#include "pslforge/run_record.hpp"
#include "pslforge/verifier.hpp"
#include "pslforge/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitGoalNotMet = 3;

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << '\n';
}

std::optional<int> env_thread_cap() {
    const char* v = std::getenv("PSLFORGE_THREADS");
    if (v == nullptr || *v == '\0') return std::nullopt;
    const int cap = std::atoi(v);
    if (cap < 1) return std::nullopt;
    return cap;
}

int cmd_search(const pslforge::SearchConfig& raw_cfg, bool deterministic, double progress_interval,
               const std::string& out_path, const std::string& format) {
    pslforge::SearchConfig cfg = raw_cfg;
    if (deterministic) {
        if (!cfg.seed) {
            std::cerr << "error: --deterministic requires --seed\n";
            return kExitUsage;
        }
        cfg.workers = 1;
    }
    if (const auto cap = env_thread_cap()) cfg.workers = std::min(cfg.workers, *cap);
    cfg = cfg.resolved();

    pslforge::ProgressFn progress;
    if (progress_interval > 0.0) {
        progress = [](const pslforge::ProgressSnapshot& s) {
            std::fprintf(stderr, "[progress] restarts=%lld quakes=%lld best_psl=%d elapsed=%.1fs\n",
                         static_cast<long long>(s.restarts), static_cast<long long>(s.quakes),
                         s.best_psl, s.elapsed_seconds);
        };
    }

    const pslforge::SearchResult result = pslforge::search(cfg, progress, progress_interval);
    const pslforge::RunRecord record = pslforge::RunRecord::make(cfg, result);
    write_output(out_path, format == "csv" ? record.to_csv() : record.to_json());
    return result.goal_met ? kExitOk : kExitGoalNotMet;
}

int cmd_verify(const std::string& table, const std::string& report_path) {
    std::vector<pslforge::verify::TableRow> rows;
    if (table == "builtin") {
        rows = pslforge::verify::builtin_tables();
    } else {
        rows = pslforge::verify::load_tables(table);
    }
    const pslforge::verify::VerifyReport report = pslforge::verify::verify_all(rows);
    write_output(report_path, pslforge::verify::report_to_json(report));
    const auto& s = report.summary;
    std::fprintf(stderr,
                 "verified %zu rows: decode_failures=%zu psl_matches_new=%zu db_consistent=%zu "
                 "mf_consistent=%zu discrepancies=%zu\n",
                 s.rows, s.decode_failures, s.psl_matches, s.db_consistent, s.mf_consistent,
                 s.discrepancies.size());
    return s.decode_failures == 0 ? kExitOk : kExitUsage;
}

int cmd_eval(const std::string& hex, int length, int p, bool show_profile,
             const std::string& format) {
    const pslforge::BinarySequence seq = pslforge::codec::decode(hex, length);
    const pslforge::SidelobeProfile prof = pslforge::aacf(seq);
    const int peak = prof.peak();
    const double db = pslforge::psl_db(peak, length);
    const double mf = pslforge::merit_factor(prof);
    const std::int64_t fit = pslforge::fitness(prof, pslforge::FitnessMagnitude(p));
    if (format == "json") {
        nlohmann::json j{{"n", length},
                         {"psl", peak},
                         {"psl_db", db},
                         {"merit_factor", mf},
                         {"p", p},
                         {"fitness", fit}};
        if (show_profile) j["profile"] = std::vector<std::int32_t>(prof.values().begin(), prof.values().end());
        std::cout << j.dump(2) << '\n';
    } else {
        std::printf("psl %d\n", peak);
        std::printf("psl_db %.6f\n", db);
        std::printf("merit_factor %.6f\n", mf);
        std::printf("fitness %lld\n", static_cast<long long>(fit));
        if (show_profile) {
            std::printf("profile");
            for (const std::int32_t c : prof.values()) std::printf(" %d", c);
            std::printf("\n");
        }
    }
    return kExitOk;
}

int cmd_bruteforce(int length, int cap, int threads, bool histogram) {
    const pslforge::oracle::OracleReport report =
        pslforge::oracle::min_psl_exhaustive(length, cap, threads);
    nlohmann::json j{{"n", report.n},
                     {"min_psl", report.min_psl},
                     {"witness_hex", pslforge::codec::encode(report.witness).text},
                     {"count_at_min", report.count_at_min},
                     {"enumerated", report.enumerated}};
    if (histogram) {
        nlohmann::json h = nlohmann::json::object();
        for (const auto& [k, v] : pslforge::oracle::enumerate_psl_histogram(length, cap, threads)) {
            h[std::to_string(k)] = v;
        }
        j["histogram"] = std::move(h);
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"low-PSL binary sequence toolkit"};
    app.set_version_flag("--version", std::string("pslforge ") + pslforge::kVersion);
    app.require_subcommand(1);

    // search
    auto* search_cmd = app.add_subcommand("search", "run the hill-climbing search");
    pslforge::SearchConfig cfg;
    std::uint64_t seed_value = 0;
    double time_budget = 0.0;
    bool deterministic = false;
    double progress_interval = 10.0;
    std::string out_path = "-";
    std::string search_format = "json";
    int p_value = 4;
    search_cmd->add_option("--length", cfg.n, "sequence length n")->required();
    search_cmd->add_option("--goal", cfg.goal, "target PSL")->required();
    search_cmd->add_option("--p", p_value, "fitness magnitude P")->default_val(4);
    search_cmd->add_option("--threshold", cfg.threshold, "failed quakes before restart")
        ->default_val(1000);
    search_cmd->add_option("--hmin", cfg.h_min, "minimum quake flips")->default_val(1);
    search_cmd->add_option("--hmax", cfg.h_max, "maximum quake flips (default ceil(sqrt(n)))");
    search_cmd->add_option("--restarts", cfg.restart_cap, "maximum random (re)starts")
        ->default_val(100000);
    search_cmd->add_option("--workers", cfg.workers, "parallel independent instances")
        ->default_val(1);
    auto* seed_opt = search_cmd->add_option("--seed", seed_value, "RNG seed (default: entropy)");
    auto* budget_opt =
        search_cmd->add_option("--time-budget", time_budget, "wall-clock limit in seconds");
    search_cmd->add_flag("--deterministic", deterministic, "force workers=1; requires --seed");
    search_cmd->add_option("--progress-interval", progress_interval,
                           "seconds between progress lines on stderr (0 disables)");
    search_cmd->add_option("--out", out_path, "output path ('-' for stdout)");
    search_cmd->add_option("--format", search_format, "record format")
        ->check(CLI::IsMember({"json", "csv"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check the published results table");
    std::string table = "builtin";
    std::string report_path = "-";
    verify_cmd->add_option("--table", table, "'builtin' or a CSV path");
    verify_cmd->add_option("--report", report_path, "report path ('-' for stdout)");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "metrics of a hex-encoded sequence");
    std::string eval_hex;
    int eval_length = 0;
    int eval_p = 4;
    bool eval_profile = false;
    std::string eval_format = "text";
    eval_cmd->add_option("--hex", eval_hex, "sequence in hex")->required();
    eval_cmd->add_option("--length", eval_length, "sequence length")->required();
    eval_cmd->add_option("--p", eval_p, "fitness magnitude P")->default_val(4);
    eval_cmd->add_flag("--profile", eval_profile, "also print the sidelobe profile");
    eval_cmd->add_option("--format", eval_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    // encode / decode
    auto* encode_cmd = app.add_subcommand("encode", "hex-encode a +/- sequence");
    std::string bits;
    encode_cmd->add_option("--bits", bits, "sequence as '+'/'-' characters")->required();
    auto* decode_cmd = app.add_subcommand("decode", "decode hex to a +/- sequence");
    std::string dec_hex;
    int dec_length = 0;
    decode_cmd->add_option("--hex", dec_hex, "sequence in hex")->required();
    decode_cmd->add_option("--length", dec_length, "sequence length")->required();

    // bruteforce
    auto* brute_cmd = app.add_subcommand("bruteforce", "exhaustive minimum-PSL scan");
    int brute_length = 0;
    int brute_cap = pslforge::oracle::kDefaultCap;
    int brute_threads = 0;
    bool brute_histogram = false;
    brute_cmd->add_option("--length", brute_length, "sequence length")->required();
    brute_cmd->add_option("--cap", brute_cap, "maximum allowed length");
    brute_cmd->add_option("--threads", brute_threads, "scan threads (default: all cores)");
    brute_cmd->add_flag("--histogram", brute_histogram, "also emit the PSL histogram");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(search_cmd)) {
            if (*seed_opt) cfg.seed = seed_value;
            if (*budget_opt) cfg.time_budget_seconds = time_budget;
            cfg.p = pslforge::FitnessMagnitude(p_value);
            return cmd_search(cfg, deterministic, progress_interval, out_path, search_format);
        }
        if (app.got_subcommand(verify_cmd)) return cmd_verify(table, report_path);
        if (app.got_subcommand(eval_cmd)) {
            return cmd_eval(eval_hex, eval_length, eval_p, eval_profile, eval_format);
        }
        if (app.got_subcommand(encode_cmd)) {
            std::cout << pslforge::codec::encode(pslforge::BinarySequence::from_pm_string(bits)).text
                      << '\n';
            return kExitOk;
        }
        if (app.got_subcommand(decode_cmd)) {
            std::cout << pslforge::codec::decode(dec_hex, dec_length).to_pm_string() << '\n';
            return kExitOk;
        }
        if (app.got_subcommand(brute_cmd)) {
            if (brute_threads < 1) {
                brute_threads = static_cast<int>(std::thread::hardware_concurrency());
                if (brute_threads < 1) brute_threads = 1;
                if (const auto cap = env_thread_cap()) brute_threads = std::min(brute_threads, *cap);
            }
            return cmd_bruteforce(brute_length, brute_cap, brute_threads, brute_histogram);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
