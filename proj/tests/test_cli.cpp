#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

std::string binary() {
    const char* p = std::getenv("PSLFORGE_BIN");
    REQUIRE_MESSAGE(p != nullptr, "PSLFORGE_BIN must point at the pslforge binary");
    return p;
}

CmdResult run(const std::string& args) {
    const std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        res.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("eval prints the published metrics for the n=106 row") {
    const CmdResult r =
        run("eval --hex 1366453fff339abc3d613eab4f2 --length 106 --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["psl"] == 6);
    CHECK(std::abs(j["psl_db"].get<double>() - (-24.943)) < 5e-4);
    CHECK(std::abs(j["merit_factor"].get<double>() - 5.030) < 5e-4);
}

TEST_CASE("eval of the length-11 worked example") {
    const CmdResult r = run("eval --hex 1b7 --length 11 --format json --profile");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["psl"] == 4);   // direct summation over the decoded sequence
    CHECK(j["profile"] == json::array({0, -3, 4, 1, -2, 1, 2, -1, -2, -1}));
    CHECK(j["fitness"] == 389);   // 3^4 + 4^4 + 3*2^4 + 4*1^4
}

TEST_CASE("eval rejects a hex value wider than the length") {
    CHECK(run("eval --hex f --length 3").exit_code == 2);
}

TEST_CASE("encode and decode mirror the codec") {
    CmdResult enc = run("encode --bits --++-++-+++");
    REQUIRE(enc.exit_code == 0);
    CHECK(enc.out == "1b7\n");
    CmdResult dec = run("decode --hex 1b7 --length 11");
    REQUIRE(dec.exit_code == 0);
    CHECK(dec.out == "--++-++-+++\n");
    CHECK(run("decode --hex zz --length 8").exit_code == 2);
}

TEST_CASE("search rejects n < 2 with exit 2") {
    CHECK(run("search --length 1 --goal 1").exit_code == 2);
}

TEST_CASE("search meets an easy goal with exit 0 and a self-consistent record") {
    const CmdResult r = run("search --length 13 --goal 1 --seed 7 --progress-interval 0");
    REQUIRE(r.exit_code == 0);
    const json rec = json::parse(r.out);
    CHECK(rec["goal_met"] == true);
    CHECK(rec["psl"] == 1);
    CHECK(rec["n"] == 13);
    CHECK(rec["seed"] == 7);
    // closed loop: eval on the emitted sequence reproduces every number
    const std::string hex = rec["sequence_hex"].get<std::string>();
    const CmdResult ev = run("eval --hex " + hex + " --length 13 --format json --p " +
                             std::to_string(rec["p"].get<int>()));
    REQUIRE(ev.exit_code == 0);
    const json j = json::parse(ev.out);
    CHECK(j["psl"] == rec["psl"]);
    CHECK(j["fitness"] == rec["fitness"]);
    CHECK(std::abs(j["psl_db"].get<double>() - rec["psl_db"].get<double>()) < 1e-12);
    CHECK(std::abs(j["merit_factor"].get<double>() - rec["merit_factor"].get<double>()) < 1e-12);
}

TEST_CASE("search exits 3 when the budget runs out before the goal") {
    // n=6 has minimum PSL 2, so goal 1 is unreachable
    const CmdResult r =
        run("search --length 6 --goal 1 --seed 5 --restarts 20 --progress-interval 0");
    CHECK(r.exit_code == 3);
    const json rec = json::parse(r.out);
    CHECK(rec["goal_met"] == false);
    CHECK(rec["restarts_used"] == 20);
}

TEST_CASE("deterministic mode requires a seed") {
    CHECK(run("search --length 10 --goal 2 --deterministic").exit_code == 2);
}

TEST_CASE("csv record format has the documented header") {
    const CmdResult r = run("search --length 13 --goal 1 --seed 7 --format csv "
                            "--progress-interval 0");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("n,goal,p,threshold,hmin,hmax,restarts_cap,seed,workers,sequence_hex,"
                     "psl,fitness,psl_db,merit_factor,goal_met,restarts_used,quakes_used,"
                     "neighbor_evaluations,elapsed_seconds,version") == 0);
}

TEST_CASE("verify of the builtin table exits 0 and reports 195 rows") {
    const CmdResult r = run("verify --table builtin");
    REQUIRE(r.exit_code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep["rows"].size() == 195);
    CHECK(rep["summary"]["decode_failures"] == 0);
    CHECK(rep["summary"]["psl_matches_new"] == 194);
}

TEST_CASE("verify exits 2 on an unreadable dataset") {
    CHECK(run("verify --table /nonexistent/table.csv").exit_code == 2);
}

TEST_CASE("bruteforce emits the oracle report") {
    const CmdResult r = run("bruteforce --length 13 --histogram");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["n"] == 13);
    CHECK(j["min_psl"] == 1);
    CHECK(j["enumerated"] == 8192);
    std::uint64_t total = 0;
    for (const auto& [k, v] : j["histogram"].items()) total += v.get<std::uint64_t>();
    CHECK(total == 8192);
    CHECK(run("bruteforce --length 60").exit_code == 2);
}

TEST_CASE("unknown flags exit 2") {
    CHECK(run("search --length 10 --goal 2 --nonsense").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("PSLFORGE_THREADS caps the worker count") {
    const std::string cmd = "env PSLFORGE_THREADS=1 " + binary() +
                            " search --length 13 --goal 1 --seed 7 --workers 8 "
                            "--progress-interval 0 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    const json rec = json::parse(out);
    CHECK(rec["workers"] == 1);
}

TEST_CASE("deterministic mode forces a single worker") {
    const CmdResult r = run("search --length 13 --goal 1 --seed 7 --workers 4 --deterministic "
                            "--progress-interval 0");
    REQUIRE(r.exit_code == 0);
    const json rec = json::parse(r.out);
    CHECK(rec["workers"] == 1);
}
