#include "ctqw/graph.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace ctqw {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1)
        throw std::invalid_argument("from_edges: vertex count must be >= 1, got " +
                                    std::to_string(n));
    Graph g;
    g.n_ = n;
    g.words_ = (n + 63) / 64;
    g.bits_.assign(static_cast<size_t>(n) * g.words_, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("from_edges: vertex out of range in edge (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("from_edges: self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        g.bits_[static_cast<size_t>(u) * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        g.bits_[static_cast<size_t>(v) * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
    return g;
}

int Graph::degree(int i) const {
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(bits_[static_cast<size_t>(i) * words_ + w]);
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = degree(i);
    return d;
}

std::int64_t Graph::edge_count() const {
    std::int64_t total = 0;
    for (int i = 0; i < n_; ++i) total += degree(i);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) e.emplace_back(u, v);
    return e;
}

double SymmetricMatrix::max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    SymmetricMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) a.set(i, j, 1.0);
    return a;
}

SymmetricMatrix laplacian(const Graph& g) {
    const int n = g.vertex_count();
    SymmetricMatrix l(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) l.set(i, j, 1.0);
        l.set(i, i, -static_cast<double>(g.degree(i)));
    }
    return l;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees = g.degrees();
    p.is_regular = true;
    for (int d : p.degrees)
        if (d != p.degrees[0]) {
            p.is_regular = false;
            break;
        }
    return p;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!seen[v] && g.adjacent(u, v)) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (const auto& [i, ip] : g1.edges())
        for (int j = 0; j < n2; ++j) edges.emplace_back(i * n2 + j, ip * n2 + j);
    for (const auto& [j, jp] : g2.edges())
        for (int i = 0; i < n1; ++i) edges.emplace_back(i * n2 + j, i * n2 + jp);
    return Graph::from_edges(n1 * n2, edges);
}

}  // namespace ctqw
