#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ctqw {

// Simple undirected graph. Immutable once constructed; adjacency is stored
// as bitmask rows so neighbor scans are cheap for the sizes we care about.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list. Duplicate edges collapse; self-loops
    // and out-of-range endpoints throw std::invalid_argument naming the pair.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }

    bool adjacent(int i, int j) const {
        return (bits_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }

    int degree(int i) const;
    std::vector<int> degrees() const;
    std::int64_t edge_count() const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int words_ = 0;                // 64-bit words per adjacency row
    std::vector<std::uint64_t> bits_;
};

// Dense real symmetric matrix; set() mirrors so symmetry holds exactly.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

    int size() const { return n_; }

    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    void set(int i, int j, double v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = v;
    }

    double max_abs() const;

    bool operator==(const SymmetricMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<double> a_;
};

SymmetricMatrix adjacency_matrix(const Graph& g);

// L = A - D; rows sum to zero.
SymmetricMatrix laplacian(const Graph& g);

struct DegreeProfile {
    std::vector<int> degrees;
    bool is_regular = false;
};

DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);

// Cartesian product; vertex (i, j) of g1 x g2 gets index i * n2 + j.
Graph cartesian_product(const Graph& g1, const Graph& g2);

}  // namespace ctqw
