#include "ctqw/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "ctqw/enumerate.hpp"
#include "ctqw/graph6.hpp"

#include <json.hpp>

namespace ctqw {
namespace {

constexpr std::size_t kBlockRecords = 1 << 15;

struct RecordResult {
    bool regular = false;
    bool equivalent = false;
    bool merged = false;
    std::vector<int> starts;
};

RecordResult classify_record(const std::string& line, std::size_t line_no,
                             const EquivalenceConfig& cfg, int expect_n) {
    Graph g;
    try {
        g = graph6_decode(line);
    } catch (const Graph6Error& e) {
        throw ScanError(e.what(), line_no);
    }
    if (g.vertex_count() != expect_n)
        throw ScanError("mixed vertex counts: record has n=" +
                            std::to_string(g.vertex_count()) + ", stream started with n=" +
                            std::to_string(expect_n),
                        line_no);
    if (!is_connected(g)) throw ScanError("record is disconnected", line_no);

    RecordResult r;
    if (degree_profile(g).is_regular) {
        r.regular = true;  // trivially equivalent; not an irregular hit
        return r;
    }
    const EquivalenceReport report = classify_start_vertices(g, cfg);
    r.merged = report.merged_gap_warning;
    if (!report.equivalent_starts.empty()) {
        r.equivalent = true;
        r.starts = report.equivalent_starts;
    }
    return r;
}

}  // namespace

int default_workers() {
    if (const char* env = std::getenv("CTQW_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

ScanSummary scan_stream(std::istream& in, int workers, const EquivalenceConfig& cfg,
                        const ProgressFn& progress) {
    const auto t0 = std::chrono::steady_clock::now();
    if (workers <= 0) workers = default_workers();

    ScanSummary summary;
    std::size_t line_no = 0;
    bool first_record = true;

    std::vector<std::string> block;
    std::vector<std::size_t> block_lines;
    block.reserve(kBlockRecords);

    std::string line;
    bool more = true;
    while (more) {
        block.clear();
        block_lines.clear();
        while (block.size() < kBlockRecords && (more = static_cast<bool>(std::getline(in, line)))) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line_no == 1 && line.rfind(">>graph6<<", 0) == 0) {
                line.erase(0, 10);
                if (line.empty()) continue;
            }
            if (line.empty()) continue;
            block.push_back(line);
            block_lines.push_back(line_no);
        }
        if (block.empty()) break;

        if (first_record) {
            Graph g;
            try {
                g = graph6_decode(block.front());
            } catch (const Graph6Error& e) {
                throw ScanError(e.what(), block_lines.front());
            }
            summary.n = g.vertex_count();
            first_record = false;
        }

        // fan out across the block; results land at fixed indices, so the
        // merge below is identical for every worker count
        std::vector<RecordResult> results(block.size());
        std::exception_ptr failure;
        std::mutex failure_mutex;
        const int nthreads = std::min<int>(workers, static_cast<int>(block.size()));
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < block.size(); i += nthreads) {
                    try {
                        results[i] = classify_record(block[i], block_lines[i], cfg, summary.n);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);

        for (std::size_t i = 0; i < block.size(); ++i) {
            const RecordResult& r = results[i];
            ++summary.total_connected;
            if (r.regular) {
                ++summary.regular;
            } else {
                ++summary.irregular;
                summary.merged_gap_warning = summary.merged_gap_warning || r.merged;
                if (r.equivalent) {
                    ++summary.equivalent_irregular;
                    summary.hits.push_back({block[i], r.starts});
                }
            }
        }
        if (progress) progress(summary.total_connected);
    }

    summary.elapsed_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

ScanSummary scan_file(const std::filesystem::path& path, int workers,
                      const EquivalenceConfig& cfg, const ProgressFn& progress) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path.string());
    return scan_stream(in, workers, cfg, progress);
}

std::vector<ScanSummary> reproduce_table(int max_n,
                                         const std::vector<std::filesystem::path>& sources,
                                         int workers, const EquivalenceConfig& cfg,
                                         const ProgressFn& progress) {
    if (max_n < 1 || max_n > 10)
        throw std::invalid_argument("reproduce_table: max_n must be in 1..10, got " +
                                    std::to_string(max_n));
    if (static_cast<int>(sources.size()) < max_n)
        throw std::invalid_argument("reproduce_table: need a source path for every n <= " +
                                    std::to_string(max_n));

    std::vector<ScanSummary> rows;
    for (int n = 1; n <= max_n; ++n) {
        const std::filesystem::path& path = sources[n - 1];
        if (!std::filesystem::exists(path))
            throw std::runtime_error("reproduce_table: missing graph6 list: " + path.string());

        if (n <= 7) {
            // the ingested list must present exactly the oracle's classes
            std::vector<std::uint64_t> from_file;
            for (const std::string& rec : read_graph6_lines(path)) {
                const Graph g = graph6_decode(rec);
                if (g.vertex_count() != n)
                    throw std::runtime_error("reproduce_table: " + path.string() +
                                             " contains a record with n=" +
                                             std::to_string(g.vertex_count()));
                from_file.push_back(canonical_min_code(g).bits);
            }
            std::sort(from_file.begin(), from_file.end());
            if (std::adjacent_find(from_file.begin(), from_file.end()) != from_file.end())
                throw std::runtime_error("reproduce_table: duplicate isomorphism class in " +
                                         path.string());
            std::vector<std::uint64_t> from_oracle;
            for (const Graph& g : enumerate_connected(n))
                from_oracle.push_back(canonical_min_code(g).bits);
            std::sort(from_oracle.begin(), from_oracle.end());
            if (from_file != from_oracle)
                throw std::runtime_error(
                    "reproduce_table: " + path.string() +
                    " does not match the enumeration oracle's isomorphism classes");
        }

        rows.push_back(scan_file(path, workers, cfg, progress));
    }
    return rows;
}

std::string summary_to_json(const ScanSummary& s, bool include_elapsed) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["total"] = s.total_connected;
    j["regular"] = s.regular;
    j["irregular"] = s.irregular;
    j["equivalent"] = s.equivalent_irregular;
    j["hits"] = nlohmann::ordered_json::array();
    for (const ScanHit& h : s.hits) {
        nlohmann::ordered_json hit;
        hit["graph6"] = h.graph6;
        hit["starts"] = h.starts;
        j["hits"].push_back(hit);
    }
    if (include_elapsed) j["elapsed_sec"] = s.elapsed_sec;
    return j.dump(2);
}

std::string format_table(const std::vector<ScanSummary>& rows) {
    std::ostringstream out;
    out << "Vertices  Connected  Regular  Irregular  Equivalent\n";
    for (const ScanSummary& r : rows) {
        out << std::setw(8) << r.n << "  " << std::setw(9) << r.total_connected << "  "
            << std::setw(7) << r.regular << "  " << std::setw(9) << r.irregular << "  "
            << std::setw(10) << r.equivalent_irregular << "\n";
    }
    return out.str();
}

}  // namespace ctqw
