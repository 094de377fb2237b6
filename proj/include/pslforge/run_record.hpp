#pragma once

#include <string>

#include "pslforge/optimizer.hpp"

namespace pslforge {

/// Everything needed to archive and replay one search run. A record with
/// workers == 1 reproduces the run exactly (it carries the seed).
struct RunRecord {
    SearchConfig config;       // resolved
    SearchResult result;
    std::string sequence_hex;  // codec form of result.sequence
    std::string version;
    std::string isa;           // kernel ISA used
    std::string timestamp;     // ISO-8601 UTC, informational only

    static RunRecord make(const SearchConfig& resolved_cfg, const SearchResult& result);

    std::string to_json(int indent = 2) const;
    std::string to_csv() const;   // header line + one value line
};

} // namespace pslforge
