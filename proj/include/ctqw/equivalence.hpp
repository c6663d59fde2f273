#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ctqw/graph.hpp"
#include "ctqw/signature.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

struct EquivalenceConfig {
    double cluster_tol_rel = 1e-8;  // scaled by max(1, largest |eigenvalue|)
    double coeff_tol = 1e-8;
    double drop_tol = defaults::kDropTol;
    std::vector<double> filter_times = {0.37, 1.0, 2.718281828, 7.0, 13.113};
    double filter_tol = 1e-8;
};

// First place two signatures disagree: the target vertex, the gap, and the
// coefficient each generator puts on it.
struct VertexWitness {
    int target = 0;
    double gap = 0.0;
    double coeff_laplacian = 0.0;
    double coeff_adjacency = 0.0;
};

struct StartClassification {
    int start = 0;
    bool equivalent = false;
    std::optional<VertexWitness> witness;  // absent when equivalent
};

struct EquivalenceReport {
    Graph graph;
    std::vector<int> equivalent_starts;
    std::vector<StartClassification> detail;  // one entry per start vertex
    bool regular_shortcut = false;            // decided by the global-phase theorem
    bool merged_gap_warning = false;          // some signature merged suspicious gaps
};

// Max-norm agreement of the two walks' distributions from s at each sampled
// time. False settles non-equivalence (up to tol); true only nominates s for
// the signature certificate.
bool sampled_filter(const SpectralDecomposition& lap, const SpectralDecomposition& adj, int s,
                    std::span<const double> times, double tol);

// Per-start verdicts for the whole graph. Regular graphs short-circuit to
// all-equivalent; irregular ones run the filter and then the certificate.
// Throws std::invalid_argument on disconnected input.
EquivalenceReport classify_start_vertices(const Graph& g, const EquivalenceConfig& cfg = {});

}  // namespace ctqw
