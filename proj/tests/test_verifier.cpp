#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "pslforge/verifier.hpp"

using namespace pslforge;
namespace pv = pslforge::verify;

#ifndef PSLFORGE_DATA_DIR
#define PSLFORGE_DATA_DIR "data"
#endif

namespace {

const pv::TableRow& row_at(const std::vector<pv::TableRow>& rows, int n) {
    for (const auto& r : rows) {
        if (r.n == n) return r;
    }
    REQUIRE(false);
    return rows.front();
}

const pv::RowVerdict& verdict_at(const pv::VerifyReport& rep, int n) {
    for (const auto& v : rep.rows) {
        if (v.n == n) return v;
    }
    REQUIRE(false);
    return rep.rows.front();
}

struct TempCsv {
    std::filesystem::path path;
    explicit TempCsv(const std::string& content) {
        path = std::filesystem::temp_directory_path() /
               ("pslforge_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++) + ".csv");
        std::ofstream out(path);
        out << content;
    }
    ~TempCsv() { std::error_code ec; std::filesystem::remove(path, ec); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

} // namespace

TEST_CASE("builtin table shape") {
    const auto rows = pv::builtin_tables();
    REQUIRE(rows.size() == 195);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == 106 + static_cast<int>(i));
        CHECK(rows[i].new_psl <= rows[i].old_psl);
    }
    const auto& first = row_at(rows, 106);
    CHECK(first.old_psl == 7);
    CHECK(first.new_psl == 6);
    CHECK(first.hex == "1366453fff339abc3d613eab4f2");
}

TEST_CASE("row 106 verifies cleanly") {
    const auto v = pv::verify_row(row_at(pv::builtin_tables(), 106));
    CHECK(v.decoded);
    CHECK(v.computed_psl == 6);
    CHECK(v.psl_matches_new);
    CHECK(v.db_recomputed == doctest::Approx(-24.943).epsilon(5e-5));
    CHECK(v.db_consistent);
    CHECK(v.mf_recomputed == doctest::Approx(5.030).epsilon(1e-4));
    CHECK(v.mf_consistent);
    CHECK(v.notes.empty());
}

TEST_CASE("row 110's printed dB matches the Old column, not the sequence") {
    const auto v = pv::verify_row(row_at(pv::builtin_tables(), 110));
    CHECK(v.decoded);
    CHECK(v.computed_psl == 6);
    CHECK(v.psl_matches_new);
    CHECK(v.db_recomputed == doctest::Approx(-25.265).epsilon(5e-5));
    CHECK_FALSE(v.db_consistent);
    REQUIRE(v.notes.size() == 1);
    CHECK(v.notes[0] == "db column matches the Old PSL, not New");
}

TEST_CASE("full builtin verification: counts frozen from an independent recomputation") {
    const auto report = pv::verify_all(pv::builtin_tables());
    CHECK(report.rows.size() == 195);
    CHECK(report.summary.rows == 195);
    CHECK(report.summary.decode_failures == 0);
    CHECK(report.summary.psl_matches == 194);
    CHECK(report.summary.db_consistent == 184);
    CHECK(report.summary.mf_consistent == 195);

    // the dB mismatches: 110-114, 132, 133, 168, 194 print the Old value;
    // 195 and 268 print a value matching neither column
    const std::vector<int> want_db_bad{110, 111, 112, 113, 114, 132, 133, 168, 194, 195, 268};
    std::vector<int> got_db_bad;
    for (const auto& v : report.rows) {
        if (!v.db_consistent) got_db_bad.push_back(v.n);
    }
    CHECK(got_db_bad == want_db_bad);

    // the lone PSL mismatch: the n=195 sequence attains 10, not the printed 9
    const auto& v195 = verdict_at(report, 195);
    CHECK_FALSE(v195.psl_matches_new);
    CHECK(v195.computed_psl == 10);

    // n=268's dB corresponds to PSL 10 though the sequence attains New=11
    const auto& v268 = verdict_at(report, 268);
    CHECK(v268.psl_matches_new);
    CHECK(v268.computed_psl == 11);
    CHECK_FALSE(v268.db_consistent);
    bool found_268_note = false;
    for (const auto& note : v268.notes) {
        if (note.find("PSL 10") != std::string::npos) found_268_note = true;
    }
    CHECK(found_268_note);

    // n=269's hex is n=268's with a leading 1
    const auto& v269 = verdict_at(report, 269);
    bool found_dup_note = false;
    for (const auto& note : v269.notes) {
        if (note.find("n=268") != std::string::npos) found_dup_note = true;
    }
    CHECK(found_dup_note);

    // discrepancy list covers exactly the union of the mismatch kinds
    std::vector<int> want_disc = want_db_bad;
    want_disc.push_back(195);
    std::sort(want_disc.begin(), want_disc.end());
    want_disc.erase(std::unique(want_disc.begin(), want_disc.end()), want_disc.end());
    CHECK(report.summary.discrepancies == want_disc);
}

TEST_CASE("verification is idempotent and order independent") {
    auto rows = pv::builtin_tables();
    const auto a = pv::verify_all(rows);
    std::reverse(rows.begin(), rows.end());
    auto b = pv::verify_all(rows);
    CHECK(a.summary.psl_matches == b.summary.psl_matches);
    CHECK(a.summary.db_consistent == b.summary.db_consistent);
    CHECK(a.summary.mf_consistent == b.summary.mf_consistent);
    const auto c = pv::verify_all(pv::builtin_tables());
    CHECK(a.summary.discrepancies == c.summary.discrepancies);
}

TEST_CASE("the shipped CSV matches the builtin dataset") {
    const auto from_file =
        pv::load_tables(std::filesystem::path(PSLFORGE_DATA_DIR) / "published_psl.csv");
    const auto builtin = pv::builtin_tables();
    REQUIRE(from_file.size() == builtin.size());
    for (std::size_t i = 0; i < builtin.size(); ++i) {
        CHECK(from_file[i].n == builtin[i].n);
        CHECK(from_file[i].old_psl == builtin[i].old_psl);
        CHECK(from_file[i].new_psl == builtin[i].new_psl);
        CHECK(from_file[i].hex == builtin[i].hex);
        CHECK(from_file[i].db_printed == doctest::Approx(builtin[i].db_printed));
        CHECK(from_file[i].mf_printed == doctest::Approx(builtin[i].mf_printed));
    }
}

TEST_CASE("load_tables errors name the offending row") {
    TempCsv empty("");
    CHECK_THROWS(pv::load_tables(empty.path));

    TempCsv bad_header("nope\n");
    CHECK_THROWS_WITH_AS(pv::load_tables(bad_header.path),
                         doctest::Contains("bad header"), std::runtime_error);

    TempCsv bad_field("n,old_psl,new_psl,hex,db,mf\n106,7,6\n");
    CHECK_THROWS_WITH_AS(pv::load_tables(bad_field.path), doctest::Contains(":2"),
                         std::runtime_error);

    TempCsv bad_range("n,old_psl,new_psl,hex,db,mf\n50,7,6,1b7,-24.0,5.0\n");
    CHECK_THROWS_AS(pv::load_tables(bad_range.path), std::runtime_error);

    CHECK_THROWS(pv::load_tables("/nonexistent/file.csv"));
}

TEST_CASE("single-row dataset verifies like the full one") {
    TempCsv one("n,old_psl,new_psl,hex,db,mf\n106,7,6,1366453fff339abc3d613eab4f2,-24.943,5.030\n");
    const auto rows = pv::load_tables(one.path);
    REQUIRE(rows.size() == 1);
    const auto report = pv::verify_all(rows);
    CHECK(report.summary.rows == 1);
    CHECK(report.summary.psl_matches == 1);
    CHECK(report.summary.db_consistent == 1);
    CHECK(report.summary.discrepancies.empty());
}

TEST_CASE("a decode failure is reported, not thrown, by verify_all") {
    // value too wide for the declared length
    TempCsv bad("n,old_psl,new_psl,hex,db,mf\n106,7,6,"
                "ffffffffffffffffffffffffffff,-24.943,5.030\n");
    const auto rows = pv::load_tables(bad.path);
    const auto report = pv::verify_all(rows);
    CHECK(report.summary.decode_failures == 1);
    REQUIRE(report.rows.size() == 1);
    CHECK_FALSE(report.rows[0].decoded);
    REQUIRE(!report.rows[0].notes.empty());
    CHECK(report.rows[0].notes[0].find("decode failed") == 0);
}

TEST_CASE("empty row list yields an empty successful summary") {
    const auto report = pv::verify_all({});
    CHECK(report.rows.empty());
    CHECK(report.summary.rows == 0);
    CHECK(report.summary.decode_failures == 0);
    CHECK(report.summary.discrepancies.empty());
}

TEST_CASE("round_to_3 rounds half away from zero") {
    CHECK(pv::round_to_3(1.2344) == doctest::Approx(1.234));
    CHECK(pv::round_to_3(1.2345) == doctest::Approx(1.235));
    CHECK(pv::round_to_3(-1.2345) == doctest::Approx(-1.235));
    CHECK(pv::round_to_3(-24.943092) == doctest::Approx(-24.943));
}

TEST_CASE("report JSON carries rows and summary") {
    const auto report = pv::verify_all({pv::builtin_tables().front()});
    const std::string json = pv::report_to_json(report);
    CHECK(json.find("\"rows\"") != std::string::npos);
    CHECK(json.find("\"summary\"") != std::string::npos);
    CHECK(json.find("\"computed_psl\"") != std::string::npos);
}
