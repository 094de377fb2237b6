#include "pslforge/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pslforge/codec.hpp"

namespace pslforge::verify {

namespace {

constexpr double kTol = 5e-4 + 1e-9;   // half a printed last digit, plus FP slack

TableRow make_row(int n, int old_psl, int new_psl, std::string hex_raw, double db, double mf) {
    TableRow row;
    row.n = n;
    row.old_psl = old_psl;
    row.new_psl = new_psl;
    row.hex_raw = std::move(hex_raw);
    row.hex = codec::normalize(row.hex_raw);
    row.db_printed = db;
    row.mf_printed = mf;
    if (row.n < 106 || row.n > 300) {
        throw std::runtime_error("table row n=" + std::to_string(n) + ": length out of range 106..300");
    }
    if (row.new_psl > row.old_psl) {
        throw std::runtime_error("table row n=" + std::to_string(n) + ": New PSL exceeds Old");
    }
    return row;
}

/// Integer k whose dB value rounds to `printed`, or 0 if none does.
int matching_psl_for_db(double printed, int n) {
    for (int k = 1; k < n; ++k) {
        if (std::abs(round_to_3(psl_db(k, n)) - printed) <= kTol) return k;
    }
    return 0;
}

} // namespace

double round_to_3(double x) {
    return (x >= 0 ? std::floor(x * 1000.0 + 0.5) : std::ceil(x * 1000.0 - 0.5)) / 1000.0;
}

std::vector<TableRow> builtin_tables() {
    std::vector<TableRow> rows;
    rows.reserve(kBuiltinTableSize);
    for (std::size_t i = 0; i < kBuiltinTableSize; ++i) {
        const RawTableRow& r = kBuiltinTable[i];
        rows.push_back(make_row(r.n, r.old_psl, r.new_psl, r.hex_raw, r.db, r.mf));
    }
    if (rows.size() != 195) throw std::logic_error("builtin table must hold 195 rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].n != 106 + static_cast<int>(i)) {
            throw std::logic_error("builtin table must cover 106..300 without gaps");
        }
    }
    return rows;
}

std::vector<TableRow> load_tables(const std::filesystem::path& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open table file: " + csv_path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty table file: " + csv_path.string());
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,old_psl,new_psl,hex,db,mf") {
        throw std::runtime_error("bad header in " + csv_path.string());
    }
    std::vector<TableRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        const std::string where = csv_path.string() + ":" + std::to_string(lineno);
        if (fields.size() != 6) throw std::runtime_error("row " + where + ": expected 6 fields");
        try {
            rows.push_back(make_row(std::stoi(fields[0]), std::stoi(fields[1]),
                                    std::stoi(fields[2]), fields[3], std::stod(fields[4]),
                                    std::stod(fields[5])));
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception& e) {
            throw std::runtime_error("row " + where + ": " + e.what());
        }
    }
    if (rows.empty()) throw std::runtime_error("no rows in " + csv_path.string());
    return rows;
}

RowVerdict verify_row(const TableRow& row) {
    RowVerdict v;
    v.n = row.n;
    const BinarySequence seq = codec::decode(row.hex, row.n);
    const SidelobeProfile prof = aacf(seq);
    v.decoded = true;
    v.computed_psl = prof.peak();
    v.psl_matches_new = (v.computed_psl == row.new_psl);
    v.db_recomputed = psl_db(v.computed_psl, row.n);
    v.mf_recomputed = merit_factor(prof);
    v.db_consistent = std::abs(round_to_3(v.db_recomputed) - row.db_printed) <= kTol;
    v.mf_consistent = std::abs(round_to_3(v.mf_recomputed) - row.mf_printed) <= kTol;

    if (!v.psl_matches_new) {
        v.notes.push_back("decoded sequence has PSL " + std::to_string(v.computed_psl) +
                          ", New column says " + std::to_string(row.new_psl));
    }
    if (!v.db_consistent) {
        const int k = matching_psl_for_db(row.db_printed, row.n);
        if (k == row.old_psl) {
            v.notes.push_back("db column matches the Old PSL, not New");
        } else if (k == row.new_psl) {
            v.notes.push_back("db column matches the New column, but the decoded sequence has PSL " +
                              std::to_string(v.computed_psl));
        } else if (k > 0) {
            v.notes.push_back("db column corresponds to PSL " + std::to_string(k) +
                              ", matching neither Old nor New");
        } else {
            v.notes.push_back("db column matches no integer PSL at this length");
        }
    }
    if (!v.mf_consistent) {
        v.notes.push_back("mf column differs from the recomputed merit factor");
    }
    return v;
}

VerifyReport verify_all(const std::vector<TableRow>& rows) {
    VerifyReport report;
    report.rows.reserve(rows.size());
    report.summary.rows = rows.size();
    for (const TableRow& row : rows) {
        RowVerdict v;
        try {
            v = verify_row(row);
        } catch (const std::exception& e) {
            v.n = row.n;
            v.decoded = false;
            v.notes.push_back(std::string("decode failed: ") + e.what());
            ++report.summary.decode_failures;
        }
        report.rows.push_back(std::move(v));
    }
    // flag duplicated hex strings between consecutive lengths
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].hex == "1" + rows[i - 1].hex) {
            report.rows[i].notes.push_back("hex equals the n=" + std::to_string(rows[i - 1].n) +
                                           " entry with a leading 1 prepended");
        }
    }
    for (const RowVerdict& v : report.rows) {
        if (v.decoded) {
            report.summary.psl_matches += v.psl_matches_new ? 1 : 0;
            report.summary.db_consistent += v.db_consistent ? 1 : 0;
            report.summary.mf_consistent += v.mf_consistent ? 1 : 0;
        }
        if (!v.decoded || !v.psl_matches_new || !v.db_consistent || !v.mf_consistent) {
            report.summary.discrepancies.push_back(v.n);
        }
    }
    return report;
}

std::string report_to_json(const VerifyReport& report, int indent) {
    nlohmann::json rows = nlohmann::json::array();
    for (const RowVerdict& v : report.rows) {
        nlohmann::json jv{{"n", v.n},
                          {"decoded", v.decoded},
                          {"notes", v.notes}};
        if (v.decoded) {
            jv["computed_psl"] = v.computed_psl;
            jv["psl_matches_new"] = v.psl_matches_new;
            jv["db_recomputed"] = v.db_recomputed;
            jv["mf_recomputed"] = v.mf_recomputed;
            jv["db_consistent"] = v.db_consistent;
            jv["mf_consistent"] = v.mf_consistent;
        }
        rows.push_back(std::move(jv));
    }
    const nlohmann::json j{{"rows", std::move(rows)},
                           {"summary",
                            {{"rows", report.summary.rows},
                             {"decode_failures", report.summary.decode_failures},
                             {"psl_matches_new", report.summary.psl_matches},
                             {"db_consistent", report.summary.db_consistent},
                             {"mf_consistent", report.summary.mf_consistent},
                             {"discrepancies", report.summary.discrepancies}}}};
    return j.dump(indent);
}

} // namespace pslforge::verify
