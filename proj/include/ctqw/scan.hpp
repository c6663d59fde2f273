#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "ctqw/equivalence.hpp"

namespace ctqw {

// Stream-level failure (bad record, mixed sizes); line numbers are 1-based.
class ScanError : public std::runtime_error {
public:
    ScanError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

struct ScanHit {
    std::string graph6;       // the input record, byte-exact
    std::vector<int> starts;  // equivalent start vertices
};

struct ScanSummary {
    int n = 0;
    std::uint64_t total_connected = 0;
    std::uint64_t regular = 0;
    std::uint64_t irregular = 0;
    std::uint64_t equivalent_irregular = 0;
    std::vector<ScanHit> hits;  // ordered by input position
    double elapsed_sec = 0.0;
    bool merged_gap_warning = false;
};

using ProgressFn = std::function<void(std::uint64_t records_done)>;

// Classifies every irregular record of a same-size graph6 stream; regular
// graphs are counted and skipped. Aggregation is order-preserving, so the
// summary does not depend on the worker count. workers <= 0 picks the
// hardware default (or CTQW_WORKERS when set).
ScanSummary scan_stream(std::istream& in, int workers, const EquivalenceConfig& cfg = {},
                        const ProgressFn& progress = {});

ScanSummary scan_file(const std::filesystem::path& path, int workers,
                      const EquivalenceConfig& cfg = {}, const ProgressFn& progress = {});

// One summary per n = 1..max_n. sources[k] is the graph6 list for n = k+1;
// for n <= 7 the stream is cross-validated against the enumeration oracle
// (same isomorphism classes) and a mismatch throws.
std::vector<ScanSummary> reproduce_table(int max_n,
                                         const std::vector<std::filesystem::path>& sources,
                                         int workers, const EquivalenceConfig& cfg = {},
                                         const ProgressFn& progress = {});

// JSON object with keys n, total, regular, irregular, equivalent,
// hits[{graph6, starts}], elapsed_sec. include_elapsed=false drops the
// timing field so summaries can be compared byte for byte.
std::string summary_to_json(const ScanSummary& s, bool include_elapsed = true);

// Plain text table: Vertices, Connected, Regular, Irregular, Equivalent.
std::string format_table(const std::vector<ScanSummary>& rows);

// Worker-count default: CTQW_WORKERS if set and positive, else the hardware
// concurrency, else 1.
int default_workers();

}  // namespace ctqw
