#include "ctqw/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "ctqw/graph6.hpp"

namespace ctqw {
namespace {

constexpr int kMaxCodeVertices = 11;  // 55 upper-triangle bits fit a word

constexpr int tri(int n) { return n * (n - 1) / 2; }

// Adjacency rows as bitmasks; the workhorse for the hot enumeration paths.
struct SmallGraph {
    int n = 0;
    std::array<std::uint16_t, 16> adj{};
};

SmallGraph to_small(const Graph& g) {
    SmallGraph s;
    s.n = g.vertex_count();
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (i != j && g.adjacent(i, j)) s.adj[i] |= std::uint16_t(1) << j;
    return s;
}

SmallGraph small_from_bits(int n, std::uint64_t bits) {
    SmallGraph s;
    s.n = n;
    const int nbits = tri(n);
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((bits >> (nbits - 1 - b)) & 1u) {
                s.adj[i] |= std::uint16_t(1) << j;
                s.adj[j] |= std::uint16_t(1) << i;
            }
    return s;
}

std::uint64_t encode_perm(const SmallGraph& g, const int* pos_to_vertex) {
    std::uint64_t code = 0;
    for (int j = 1; j < g.n; ++j) {
        const std::uint16_t row = g.adj[pos_to_vertex[j]];
        for (int i = 0; i < j; ++i)
            code = (code << 1) | ((row >> pos_to_vertex[i]) & 1u);
    }
    return code;
}

bool small_connected(const SmallGraph& g) {
    std::uint16_t seen = 1, frontier = 1;
    const std::uint16_t all = static_cast<std::uint16_t>((1u << g.n) - 1);
    while (frontier) {
        std::uint16_t next = 0;
        for (std::uint16_t f = frontier; f;) {
            const int v = std::countr_zero(f);
            f &= static_cast<std::uint16_t>(f - 1);
            next |= g.adj[v];
        }
        frontier = next & static_cast<std::uint16_t>(~seen);
        seen |= next;
        if (seen == all) return true;
    }
    return seen == all;
}

// --- exact minimum over all permutations, with prefix pruning -------------

struct MinCodeSearch {
    const SmallGraph* g;
    int n, nbits;
    std::uint64_t best;
    std::array<int, 16> pos;       // pos[p] = vertex at position p
    std::array<bool, 16> used{};

    void run() {
        best = ~std::uint64_t{0};
        if (nbits < 64) best = (std::uint64_t{1} << nbits) - 1;
        descend(0, 0, 0);
    }

    // placed = positions filled, cur = code prefix of tri(placed) bits
    void descend(int placed, std::uint64_t cur, int cur_bits) {
        if (placed == n) {
            if (cur < best) best = cur;
            return;
        }
        // candidate chunks: adjacency of v against already placed vertices
        std::array<std::pair<std::uint32_t, int>, 16> cand;
        int ncand = 0;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint32_t chunk = 0;
            for (int i = 0; i < placed; ++i)
                chunk = (chunk << 1) | ((g->adj[v] >> pos[i]) & 1u);
            cand[ncand++] = {chunk, v};
        }
        std::sort(cand.begin(), cand.begin() + ncand);
        for (int c = 0; c < ncand; ++c) {
            const auto [chunk, v] = cand[c];
            const std::uint64_t ext = (cur << placed) | chunk;
            const int ext_bits = cur_bits + placed;
            // compare against the same-length prefix of best
            if (ext > (best >> (nbits - ext_bits))) break;  // sorted: rest worse
            pos[placed] = v;
            used[v] = true;
            descend(placed + 1, ext, ext_bits);
            used[v] = false;
        }
    }
};

std::uint64_t min_code_bits(const SmallGraph& g) {
    if (g.n == 1) return 0;
    MinCodeSearch s;
    s.g = &g;
    s.n = g.n;
    s.nbits = tri(g.n);
    s.run();
    return s.best;
}

// --- refinement + individualization canonical form ------------------------

using Partition = std::vector<std::vector<int>>;

// 1-dimensional Weisfeiler-Leman pass to a stable ordered partition. Cell
// order is derived only from prior cell order and neighbor-count keys, so it
// is isomorphism-invariant.
void refine(const SmallGraph& g, Partition& cells) {
    std::array<int, 16> cell_of{};
    for (;;) {
        for (size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
        Partition next;
        next.reserve(cells.size());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            // key: neighbor counts per current cell
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> key(cells.size(), 0);
                std::uint16_t nb = g.adj[v];
                while (nb) {
                    const int u = std::countr_zero(nb);
                    nb &= static_cast<std::uint16_t>(nb - 1);
                    ++key[cell_of[u]];
                }
                keyed.emplace_back(std::move(key), v);
            }
            std::sort(keyed.begin(), keyed.end());
            size_t i = 0;
            while (i < keyed.size()) {
                size_t j = i;
                std::vector<int> group;
                while (j < keyed.size() && keyed[j].first == keyed[i].first)
                    group.push_back(keyed[j++].second);
                next.push_back(std::move(group));
                i = j;
            }
        }
        const bool split = next.size() != cells.size();
        cells = std::move(next);
        if (!split) return;
    }
}

struct CanonSearch {
    const SmallGraph* g;
    int n, nbits;
    std::uint64_t best;

    void consider(const Partition& cells) {
        int perm[16];
        int p = 0;
        for (const auto& cell : cells) perm[p++] = cell[0];
        const std::uint64_t code = encode_perm(*g, perm);
        if (code < best) best = code;
    }

    void search(Partition cells) {
        refine(*g, cells);
        size_t target = cells.size();
        for (size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                target = c;
                break;
            }
        if (target == cells.size()) {
            consider(cells);
            return;
        }
        for (int v : cells[target]) {
            Partition child;
            child.reserve(cells.size() + 1);
            for (size_t c = 0; c < cells.size(); ++c) {
                if (c == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int u : cells[c])
                        if (u != v) rest.push_back(u);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[c]);
                }
            }
            search(std::move(child));
        }
    }
};

std::uint64_t fast_code_bits(const SmallGraph& g) {
    if (g.n == 1) return 0;
    CanonSearch s;
    s.g = &g;
    s.n = g.n;
    s.nbits = tri(g.n);
    s.best = ~std::uint64_t{0};
    std::vector<int> all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;
    s.search({std::move(all)});
    return s.best;
}

void check_code_size(int n, const char* who) {
    if (n < 1 || n > kMaxCodeVertices)
        throw std::invalid_argument(std::string(who) + ": vertex count " + std::to_string(n) +
                                    " outside 1.." + std::to_string(kMaxCodeVertices));
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

CanonicalCode canonical_min_code(const Graph& g) {
    check_code_size(g.vertex_count(), "canonical_min_code");
    return {g.vertex_count(), min_code_bits(to_small(g))};
}

CanonicalCode canonical_code(const Graph& g) {
    check_code_size(g.vertex_count(), "canonical_code");
    return {g.vertex_count(), fast_code_bits(to_small(g))};
}

Graph graph_from_code(const CanonicalCode& code) {
    check_code_size(code.n, "graph_from_code");
    const SmallGraph s = small_from_bits(code.n, code.bits);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
            if ((s.adj[i] >> j) & 1u) edges.emplace_back(i, j);
    return Graph::from_edges(code.n, edges);
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("enumerate_connected: n must be in 1..7, got " +
                                    std::to_string(n));
    const int nbits = tri(n);
    const std::uint64_t total = std::uint64_t{1} << nbits;
    const int nthreads = std::min<int>(resolve_threads(0), 8);

    std::vector<std::vector<std::uint64_t>> found(nthreads);
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            std::unordered_set<std::uint64_t> local;
            for (std::uint64_t mask = t; mask < total; mask += nthreads) {
                const SmallGraph g = small_from_bits(n, mask);
                if (!small_connected(g)) continue;
                local.insert(min_code_bits(g));
            }
            found[t].assign(local.begin(), local.end());
        });
    }
    for (auto& th : pool) th.join();

    std::vector<std::uint64_t> codes;
    for (auto& f : found) codes.insert(codes.end(), f.begin(), f.end());
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t bits : codes) out.push_back(graph_from_code({n, bits}));
    return out;
}

std::vector<CanonicalCode> connected_graph_codes(int n, int threads) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("connected_graph_codes: n must be in 1..10, got " +
                                    std::to_string(n));
    std::vector<std::uint64_t> level = {0};  // K1
    for (int k = 2; k <= n; ++k) {
        const std::vector<std::uint64_t> prev = std::move(level);
        const int nthreads = resolve_threads(threads);
        std::vector<std::vector<std::uint64_t>> parts(nthreads);
        std::vector<std::thread> pool;
        const std::uint16_t mask_limit = static_cast<std::uint16_t>(1u << (k - 1));
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                std::vector<std::uint64_t>& out = parts[t];
                for (size_t idx = t; idx < prev.size(); idx += nthreads) {
                    SmallGraph g = small_from_bits(k - 1, prev[idx]);
                    g.n = k;
                    for (std::uint16_t m = 1; m < mask_limit; ++m) {
                        g.adj[k - 1] = m;
                        for (std::uint16_t nb = m; nb;) {
                            const int u = std::countr_zero(nb);
                            nb &= static_cast<std::uint16_t>(nb - 1);
                            g.adj[u] |= std::uint16_t(1) << (k - 1);
                        }
                        out.push_back(fast_code_bits(g));
                        for (std::uint16_t nb = m; nb;) {
                            const int u = std::countr_zero(nb);
                            nb &= static_cast<std::uint16_t>(nb - 1);
                            g.adj[u] &= static_cast<std::uint16_t>(~(std::uint16_t(1) << (k - 1)));
                        }
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        size_t total = 0;
        for (auto& p : parts) total += p.size();
        level.reserve(total);
        for (auto& p : parts) {
            level.insert(level.end(), p.begin(), p.end());
            p.clear();
            p.shrink_to_fit();
        }
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    std::vector<CanonicalCode> out;
    out.reserve(level.size());
    for (std::uint64_t bits : level) out.push_back({n, bits});
    return out;
}

void write_graph6_list(const std::vector<CanonicalCode>& codes,
                       const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write graph6 file: " + path.string());
    for (const auto& code : codes) out << graph6_encode(graph_from_code(code)) << '\n';
    if (!out) throw std::runtime_error("short write to graph6 file: " + path.string());
}

}  // namespace ctqw
