// ctqw: decide whether the Laplacian- and adjacency-generated continuous-time
// quantum walks on a graph give identical measurement distributions for all
// time, scan graph6 lists for such graphs, and build the known graph
// families. All vertex indices printed here are 0-based.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctqw/enumerate.hpp"
#include "ctqw/equivalence.hpp"
#include "ctqw/families.hpp"
#include "ctqw/graph6.hpp"
#include "ctqw/scan.hpp"

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitMergeWarning = 3;

std::string join_ints(const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::vector<int> parse_start_list(const std::string& spec, int n) {
    std::vector<int> starts;
    size_t pos = 0;
    while (pos < spec.size()) {
        const size_t end = spec.find(',', pos);
        const std::string tok = spec.substr(pos, end == std::string::npos ? end : end - pos);
        const int s = std::stoi(tok);
        if (s < 0 || s >= n)
            throw std::invalid_argument("--starts: vertex " + tok + " out of range for n=" +
                                        std::to_string(n));
        starts.push_back(s);
        pos = end == std::string::npos ? spec.size() : end + 1;
    }
    return starts;
}

int run_check(const std::string& record, const std::string& starts_spec, bool strict) {
    const ctqw::Graph g = ctqw::graph6_decode(record);
    const ctqw::EquivalenceReport report = ctqw::classify_start_vertices(g);

    std::vector<int> wanted;
    if (starts_spec == "all") {
        for (int s = 0; s < g.vertex_count(); ++s) wanted.push_back(s);
    } else {
        wanted = parse_start_list(starts_spec, g.vertex_count());
    }

    std::cout << "graph " << record << "  n=" << g.vertex_count()
              << "  (vertices are 0-based)\n";
    if (report.regular_shortcut)
        std::cout << "regular graph: walks differ by a global phase, every start is "
                     "equivalent\n";
    for (int s : wanted) {
        const ctqw::StartClassification& d = report.detail[s];
        std::cout << "start " << s << ": " << (d.equivalent ? "equivalent" : "different");
        if (d.witness) {
            std::cout << "  (target " << d.witness->target << ", gap " << std::setprecision(12)
                      << d.witness->gap << ": L coeff " << d.witness->coeff_laplacian
                      << " vs A coeff " << d.witness->coeff_adjacency << ")";
        }
        std::cout << "\n";
    }
    std::cout << "equivalent starts: " << join_ints(report.equivalent_starts) << "\n";
    if (report.merged_gap_warning) {
        std::cerr << "warning: nearby eigenvalue gaps were merged within tolerance\n";
        if (strict) return kExitMergeWarning;
    }
    return 0;
}

int run_scan(const std::string& file, int workers, const std::string& json_path, bool strict) {
    const auto progress = [](std::uint64_t done) {
        if (done % (1u << 18) == 0) std::cerr << "  ..." << done << " records\r" << std::flush;
    };
    const ctqw::ScanSummary s = ctqw::scan_file(file, workers, {}, progress);
    std::cout << "n=" << s.n << "  total=" << s.total_connected << "  regular=" << s.regular
              << "  irregular=" << s.irregular << "  equivalent=" << s.equivalent_irregular
              << "  elapsed=" << std::fixed << std::setprecision(2) << s.elapsed_sec << "s\n";
    for (const ctqw::ScanHit& h : s.hits)
        std::cout << "hit " << h.graph6 << "  starts " << join_ints(h.starts) << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << ctqw::summary_to_json(s) << "\n";
    }
    if (s.merged_gap_warning) {
        std::cerr << "warning: nearby eigenvalue gaps were merged within tolerance\n";
        if (strict) return kExitMergeWarning;
    }
    return 0;
}

int run_table(int max_n, const std::string& dir, const std::string& json_path, int workers,
              bool strict) {
    std::vector<std::filesystem::path> sources;
    for (int n = 1; n <= max_n; ++n)
        sources.push_back(std::filesystem::path(dir) / ("graph" + std::to_string(n) + "c.g6"));
    const auto rows = ctqw::reproduce_table(max_n, sources, workers);
    std::cout << ctqw::format_table(rows);
    bool merged = false;
    for (const auto& r : rows) merged = merged || r.merged_gap_warning;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << "[\n";
        for (size_t i = 0; i < rows.size(); ++i)
            out << ctqw::summary_to_json(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
        out << "]\n";
    }
    if (merged) {
        std::cerr << "warning: nearby eigenvalue gaps were merged within tolerance\n";
        if (strict) return kExitMergeWarning;
    }
    return 0;
}

int run_family(const std::string& descriptor, bool emit_graph6, bool verify, bool strict) {
    const ctqw::FamilySpec spec = ctqw::parse_family_descriptor(descriptor);
    const ctqw::FamilyInstance inst = ctqw::generate(spec);
    std::cout << inst.label << "\n";
    std::cout << "vertices: " << inst.graph.vertex_count()
              << "  edges: " << inst.graph.edge_count() << "\n";
    std::cout << "designated starts: " << join_ints(inst.designated_starts) << "\n";
    if (emit_graph6) std::cout << ctqw::graph6_encode(inst.graph) << "\n";
    if (verify) {
        const ctqw::EquivalenceReport report = ctqw::classify_start_vertices(inst.graph);
        std::cout << "classified equivalent starts: " << join_ints(report.equivalent_starts)
                  << "\n";
        bool ok = true;
        for (int s : inst.designated_starts)
            ok = ok && report.detail[s].equivalent;
        std::cout << (ok ? "verified: designated starts are equivalent"
                         : "MISMATCH: a designated start failed classification")
                  << "\n";
        if (report.merged_gap_warning) {
            std::cerr << "warning: nearby eigenvalue gaps were merged within tolerance\n";
            if (strict) return kExitMergeWarning;
        }
        if (!ok) return 1;
    }
    return 0;
}

int run_evolve(const std::string& record, const std::string& generator, int start, double time,
               bool probabilities_only) {
    const ctqw::Graph g = ctqw::graph6_decode(record);
    const ctqw::Generator tag =
        generator == "L" ? ctqw::Generator::Laplacian : ctqw::Generator::Adjacency;
    const ctqw::SpectralDecomposition dec = ctqw::decompose(g, tag);
    const ctqw::WalkState state = ctqw::evolve(dec, start, time);
    std::cout << "generator " << ctqw::generator_name(tag) << "  start " << start << "  t "
              << time << "  (vertices are 0-based)\n";
    if (probabilities_only) {
        const std::vector<double> p = ctqw::probabilities(state);
        for (size_t v = 0; v < p.size(); ++v)
            std::cout << v << "  " << std::setprecision(10) << std::fixed << p[v] << "\n";
    } else {
        for (size_t v = 0; v < state.amplitudes.size(); ++v) {
            const auto a = state.amplitudes[v];
            std::cout << v << "  " << std::setprecision(10) << std::fixed << a.real()
                      << (a.imag() >= 0 ? "+" : "") << a.imag() << "i\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Laplacian vs adjacency continuous-time quantum walk equivalence.\n"
        "Vertex indices are 0-based everywhere."};
    app.require_subcommand(1);
    bool strict = false;
    app.add_flag("--strict", strict, "exit 3 when eigenvalue-gap merges were tolerated");

    auto* check = app.add_subcommand(
        "check", "classify the start vertices of one graph6 record");
    std::string check_record;
    std::string check_starts = "all";
    check->add_option("graph6", check_record, "graph6 record")->required();
    check->add_option("--starts", check_starts, "all (default) or comma list, e.g. 0,3,4");

    auto* scan = app.add_subcommand("scan", "scan a graph6 file for equivalent walks");
    std::string scan_path, scan_json;
    int scan_workers = 0;
    scan->add_option("file", scan_path, "graph6 list, one record per line")->required();
    scan->add_option("--workers", scan_workers,
                     "worker threads (default: CTQW_WORKERS or hardware)");
    scan->add_option("--json", scan_json, "write the JSON summary to this path");

    auto* table = app.add_subcommand(
        "table", "scan per-size lists named graph<N>c.g6 and print the summary table");
    int table_max_n = 0;
    std::string table_dir, table_json;
    int table_workers = 0;
    table->add_option("--max-n", table_max_n, "largest vertex count to scan (<= 10)")
        ->required();
    table->add_option("--dir", table_dir, "directory holding graph<N>c.g6 lists")->required();
    table->add_option("--workers", table_workers, "worker threads");
    table->add_option("--json", table_json, "write all JSON summaries to this path");

    auto* family = app.add_subcommand(
        "family", "build a family instance, e.g. F1:9,3,13  F4:M=8  F6:base=<graph6>");
    std::string family_descriptor;
    bool family_emit = false, family_verify = false;
    family->add_option("descriptor", family_descriptor, "family descriptor")->required();
    family->add_flag("--emit-graph6", family_emit, "print the instance as graph6");
    family->add_flag("--verify", family_verify,
                     "classify the instance and check the designated starts");

    auto* evolve = app.add_subcommand("evolve", "evolve a walk and print amplitudes");
    std::string evolve_record, evolve_generator;
    int evolve_start = 0;
    double evolve_time = 0.0;
    bool evolve_probs = false;
    evolve->add_option("graph6", evolve_record, "graph6 record")->required();
    evolve->add_option("--generator", evolve_generator, "L or A")
        ->required()
        ->check(CLI::IsMember({"L", "A"}));
    evolve->add_option("--start", evolve_start, "start vertex (0-based)")->required();
    evolve->add_option("--time", evolve_time, "evolution time t")->required();
    evolve->add_flag("--probabilities", evolve_probs, "print |amplitude|^2 instead");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return run_check(check_record, check_starts, strict);
        if (*scan) return run_scan(scan_path, scan_workers, scan_json, strict);
        if (*table) return run_table(table_max_n, table_dir, table_json, table_workers, strict);
        if (*family) return run_family(family_descriptor, family_emit, family_verify, strict);
        if (*evolve)
            return run_evolve(evolve_record, evolve_generator, evolve_start, evolve_time,
                              evolve_probs);
    } catch (const ctqw::Graph6Error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const ctqw::ScanError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
