#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ctqw/enumerate.hpp"
#include "support/fixtures.hpp"

using namespace ctqw;
using namespace ctqw::testing;

namespace {

// the definition, with no pruning: minimum encoding over every permutation
std::uint64_t naive_min_code(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST_CASE("canonical_min_code equals the unpruned permutation minimum") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = random_graph(2 + trial % 5, 0.5, rng);
        CHECK(canonical_min_code(g).bits == naive_min_code(g));
    }
    CHECK(canonical_min_code(complete_graph(6)).bits == naive_min_code(complete_graph(6)));
    CHECK(canonical_min_code(cycle_graph(6)).bits == naive_min_code(cycle_graph(6)));
}

TEST_CASE("canonical codes are permutation invariants") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 3 + trial % 7;
        const Graph g = random_graph(n, 0.4, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = permuted(g, perm);
        CHECK(canonical_min_code(g) == canonical_min_code(h));
        CHECK(canonical_code(g) == canonical_code(h));
    }
}

TEST_CASE("fast canonical form induces the same classes as the oracle form") {
    std::mt19937 rng(13);
    std::vector<Graph> graphs;
    for (int trial = 0; trial < 60; ++trial) graphs.push_back(random_graph(6, 0.5, rng));
    for (size_t a = 0; a < graphs.size(); ++a)
        for (size_t b = a + 1; b < graphs.size(); ++b) {
            const bool same_oracle =
                canonical_min_code(graphs[a]) == canonical_min_code(graphs[b]);
            const bool same_fast = canonical_code(graphs[a]) == canonical_code(graphs[b]);
            CHECK(same_oracle == same_fast);
        }
}

TEST_CASE("graph_from_code round-trips") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(2 + trial % 8, 0.5, rng);
        const CanonicalCode code = canonical_min_code(g);
        CHECK(canonical_min_code(graph_from_code(code)) == code);
    }
}

TEST_CASE("enumerate_connected matches the known counts") {
    CHECK(enumerate_connected(1).size() == 1);
    CHECK(enumerate_connected(2).size() == 1);
    CHECK(enumerate_connected(3).size() == 2);
    CHECK(enumerate_connected(4).size() == 6);
    CHECK(enumerate_connected(5).size() == 21);
    CHECK(enumerate_connected(6).size() == 112);
    CHECK_THROWS_AS(enumerate_connected(8), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_connected(0), std::invalid_argument);
}

TEST_CASE("enumerate_connected yields distinct connected representatives") {
    const auto graphs = enumerate_connected(5);
    std::vector<std::uint64_t> codes;
    for (const Graph& g : graphs) {
        CHECK(is_connected(g));
        codes.push_back(canonical_min_code(g).bits);
    }
    std::sort(codes.begin(), codes.end());
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}

TEST_CASE("level-by-level generator agrees with the oracle enumerator") {
    for (int n = 1; n <= 6; ++n) {
        const auto codes = connected_graph_codes(n, 2);
        const auto oracle = enumerate_connected(n);
        REQUIRE(codes.size() == oracle.size());
        // same classes: map both through the oracle's canonical form
        std::vector<std::uint64_t> a, b;
        for (const auto& c : codes) a.push_back(canonical_min_code(graph_from_code(c)).bits);
        for (const Graph& g : oracle) b.push_back(canonical_min_code(g).bits);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}
