#pragma once

// Shared graphs and independent oracles for the test suites. The oracles
// here deliberately avoid the spectral engine: the Taylor evolution works on
// the raw matrix, and the six-vertex closed forms are plain arithmetic.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ctqw/graph.hpp"

namespace ctqw::testing {

// five-vertex graph: hub pair {1,2}, vertices 0,3,4 adjacent to both hubs
inline Graph fig1_graph() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

// six-vertex graph: K4 on {1,2,3,4} with 0 on edge (1,2) and 5 on edge (3,4)
inline Graph fig2_graph() {
    return Graph::from_edges(6, {{0, 1},
                                 {0, 2},
                                 {1, 2},
                                 {1, 3},
                                 {1, 4},
                                 {2, 3},
                                 {2, 4},
                                 {3, 4},
                                 {3, 5},
                                 {4, 5}});
}

// seven-vertex graph: C5 head on base edge (0,1), tails 5 and 6 on the pair
inline Graph fig3_graph() {
    return Graph::from_edges(
        7, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 5}, {1, 5}, {0, 6}, {1, 6}});
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        e.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::from_edges(10, e);
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> e;
    for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.vertex_count(), e);
}

// truncated power series sum_{j<=terms} (iMt)^j / j! applied to the start
// basis vector; independent of the spectral evolution path
inline std::vector<std::complex<double>> taylor_evolve(const SymmetricMatrix& m, int start,
                                                       double t, int terms = 20) {
    const int n = m.size();
    std::vector<std::complex<double>> acc(n, {0.0, 0.0});
    std::vector<std::complex<double>> term(n, {0.0, 0.0});
    term[start] = 1.0;
    acc[start] = 1.0;
    for (int j = 1; j <= terms; ++j) {
        std::vector<std::complex<double>> next(n, {0.0, 0.0});
        for (int r = 0; r < n; ++r) {
            std::complex<double> s{0.0, 0.0};
            for (int c = 0; c < n; ++c) s += m(r, c) * term[c];
            next[r] = std::complex<double>(0.0, t / j) * s;
        }
        term = std::move(next);
        for (int r = 0; r < n; ++r) acc[r] += term[r];
    }
    return acc;
}

// direct arithmetic evaluation of the six closed-form probabilities for the
// six-vertex graph started at vertex 0 (p2=p3 and p4=p5 by symmetry)
inline std::vector<double> fig2_closed_form_probabilities(double t) {
    const double s17 = std::sqrt(17.0);
    const double c3 = std::cos(3.0 * t);
    const double cs = std::cos(s17 * t);
    const double cp1 = std::cos((1.0 + s17) / 2.0 * t);
    const double cm1 = std::cos((1.0 - s17) / 2.0 * t);
    const double cp7 = std::cos((7.0 + s17) / 2.0 * t);
    const double cm7 = std::cos((7.0 - s17) / 2.0 * t);
    const double norm = 41616.0;
    const double p1 = (13736.0 + 4624.0 * c3 + 2448.0 * cs + 408.0 * (17.0 - 3.0 * s17) * cp1 +
                       408.0 * (17.0 + 3.0 * s17) * cm1 + 204.0 * (17.0 - 3.0 * s17) * cp7 +
                       204.0 * (17.0 + 3.0 * s17) * cm7) /
                      norm;
    const double p2 = (3536.0 - 2312.0 * c3 - 1224.0 * cs + 408.0 * s17 * cp1 -
                       408.0 * s17 * cm1 - 408.0 * s17 * cp7 + 408.0 * s17 * cm7) /
                      norm;
    const double p4 = (3536.0 - 2312.0 * c3 - 1224.0 * cs - 408.0 * s17 * cp1 +
                       408.0 * s17 * cm1 + 408.0 * s17 * cp7 - 408.0 * s17 * cm7) /
                      norm;
    const double p6 = (13736.0 + 4624.0 * c3 + 2448.0 * cs - 408.0 * (17.0 - 3.0 * s17) * cp1 -
                       408.0 * (17.0 + 3.0 * s17) * cm1 - 204.0 * (17.0 - 3.0 * s17) * cp7 -
                       204.0 * (17.0 + 3.0 * s17) * cm7) /
                      norm;
    return {p1, p2, p2, p4, p4, p6};
}

}  // namespace ctqw::testing
