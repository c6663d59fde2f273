#include <doctest.h>

#include <random>

#include "ctqw/enumerate.hpp"
#include "ctqw/equivalence.hpp"
#include "support/fixtures.hpp"

using namespace ctqw;
using namespace ctqw::testing;

TEST_CASE("sampled filter on the worked example") {
    const EquivalenceConfig cfg;
    const auto lap = decompose(fig1_graph(), Generator::Laplacian);
    const auto adj = decompose(fig1_graph(), Generator::Adjacency);
    CHECK(sampled_filter(lap, adj, 0, cfg.filter_times, cfg.filter_tol));
    CHECK_FALSE(sampled_filter(lap, adj, 1, cfg.filter_times, cfg.filter_tol));
    CHECK_FALSE(sampled_filter(lap, adj, 2, cfg.filter_times, cfg.filter_tol));
    CHECK(sampled_filter(lap, adj, 3, cfg.filter_times, cfg.filter_tol));
}

TEST_CASE("no start of the path P3 passes the filter") {
    const EquivalenceConfig cfg;
    const Graph p3 = path_graph(3);
    const auto lap = decompose(p3, Generator::Laplacian);
    const auto adj = decompose(p3, Generator::Adjacency);
    for (int s = 0; s < 3; ++s)
        CHECK_FALSE(sampled_filter(lap, adj, s, cfg.filter_times, cfg.filter_tol));
}

TEST_CASE("classification of the two proved graphs") {
    const EquivalenceReport r5 = classify_start_vertices(fig1_graph());
    CHECK(r5.equivalent_starts == std::vector<int>{0, 3, 4});
    CHECK_FALSE(r5.regular_shortcut);
    CHECK(r5.detail.size() == 5);
    CHECK(r5.detail[1].witness.has_value());
    CHECK_FALSE(r5.detail[0].witness.has_value());

    const EquivalenceReport r6 = classify_start_vertices(fig2_graph());
    CHECK(r6.equivalent_starts == std::vector<int>{0, 5});
}

TEST_CASE("regular graphs classify by the global-phase theorem") {
    const EquivalenceReport r = classify_start_vertices(cycle_graph(4));
    CHECK(r.regular_shortcut);
    CHECK(r.equivalent_starts == std::vector<int>{0, 1, 2, 3});

    const EquivalenceReport k1 = classify_start_vertices(Graph::from_edges(1, {}));
    CHECK(k1.regular_shortcut);
    CHECK(k1.equivalent_starts == std::vector<int>{0});
}

TEST_CASE("classify rejects disconnected graphs") {
    CHECK_THROWS_AS(classify_start_vertices(Graph::from_edges(3, {{0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("every connected irregular graph with up to four vertices fails") {
    for (int n = 3; n <= 4; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            if (degree_profile(g).is_regular) continue;
            CHECK(classify_start_vertices(g).equivalent_starts.empty());
        }
    }
}

TEST_CASE("filter soundness: certified starts always pass the filter") {
    const EquivalenceConfig cfg;
    std::mt19937 rng(61);
    int certified_seen = 0;
    std::vector<Graph> pool{fig1_graph(), fig2_graph(), fig3_graph()};
    for (int trial = 0; trial < 40; ++trial) pool.push_back(random_graph(5 + trial % 3, 0.5, rng));
    for (const Graph& g : pool) {
        if (!is_connected(g) || degree_profile(g).is_regular) continue;
        const auto lap = decompose(g, Generator::Laplacian);
        const auto adj = decompose(g, Generator::Adjacency);
        const double scale = std::max(lap.spectral_scale(), adj.spectral_scale());
        const double cluster_tol = cfg.cluster_tol_rel * std::max(1.0, scale);
        const SignatureConfig sig_cfg{cluster_tol, cfg.drop_tol};
        for (int s = 0; s < g.vertex_count(); ++s) {
            bool all_equal = true;
            for (int v = 0; v < g.vertex_count() && all_equal; ++v)
                all_equal = signatures_equal(cosine_signature(lap, s, v, sig_cfg),
                                             cosine_signature(adj, s, v, sig_cfg),
                                             cfg.coeff_tol, cluster_tol);
            if (all_equal) {
                ++certified_seen;
                CHECK(sampled_filter(lap, adj, s, cfg.filter_times, cfg.filter_tol));
            }
        }
    }
    CHECK(certified_seen >= 6);  // the fixtures alone certify 0/3/4, 0/5, 0/5/6
}

TEST_CASE("classification is deterministic") {
    const EquivalenceReport a = classify_start_vertices(fig3_graph());
    const EquivalenceReport b = classify_start_vertices(fig3_graph());
    CHECK(a.equivalent_starts == b.equivalent_starts);
    CHECK(a.equivalent_starts == std::vector<int>{3, 5, 6});  // head tip and both tails
}
