#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "pslforge/sequence.hpp"

namespace pslforge::verify {

/// Raw storage of the bundled results table. hex_raw is kept exactly as
/// printed, including line-wrap spaces, as a transcription audit trail.
struct RawTableRow {
    int n;
    int old_psl;
    int new_psl;
    const char* hex_raw;
    double db;
    double mf;
};
extern const RawTableRow kBuiltinTable[];
extern const std::size_t kBuiltinTableSize;

/// One published result row: length, previous best PSL ("Old"), claimed PSL
/// ("New"), the sequence in hex, and the printed dB / merit factor columns.
struct TableRow {
    int n = 0;
    int old_psl = 0;
    int new_psl = 0;
    std::string hex;        // normalized
    std::string hex_raw;    // as printed
    double db_printed = 0.0;
    double mf_printed = 0.0;
};

struct RowVerdict {
    int n = 0;
    bool decoded = false;
    int computed_psl = 0;
    bool psl_matches_new = false;
    double db_recomputed = 0.0;   // from computed_psl, not the printed columns
    double mf_recomputed = 0.0;
    bool db_consistent = false;   // |printed - round3(recomputed)| <= 5e-4
    bool mf_consistent = false;
    std::vector<std::string> notes;
};

struct VerifySummary {
    std::size_t rows = 0;
    std::size_t decode_failures = 0;
    std::size_t psl_matches = 0;
    std::size_t db_consistent = 0;
    std::size_t mf_consistent = 0;
    std::vector<int> discrepancies;   // lengths with any mismatch or decode failure
};

struct VerifyReport {
    std::vector<RowVerdict> rows;
    VerifySummary summary;
};

/// The 195 bundled rows, lengths 106..300 with no gaps.
std::vector<TableRow> builtin_tables();

/// Loads a UTF-8 CSV with header "n,old_psl,new_psl,hex,db,mf". Malformed
/// rows raise std::runtime_error naming the offending line.
std::vector<TableRow> load_tables(const std::filesystem::path& csv_path);

/// Decodes the row and recomputes PSL, dB and MF. Mismatches against the
/// printed columns are reported in the verdict, never thrown; only codec
/// failures (transcription bugs) propagate as exceptions.
RowVerdict verify_row(const TableRow& row);

/// Verdict per row (codec failures captured, not thrown) plus aggregate
/// counts. Adjacent rows are cross-checked for duplicated hex strings.
VerifyReport verify_all(const std::vector<TableRow>& rows);

/// Round half away from zero at 3 decimals, as the printed columns do.
double round_to_3(double x);

/// Report serialization: {"rows": [...], "summary": {...}} as a JSON string.
std::string report_to_json(const VerifyReport& report, int indent = 2);

} // namespace pslforge::verify
