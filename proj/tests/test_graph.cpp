#include <doctest.h>

#include <random>

#include "ctqw/graph.hpp"
#include "support/fixtures.hpp"

using namespace ctqw;
using namespace ctqw::testing;

TEST_CASE("from_edges builds the five-vertex example") {
    const Graph g = fig1_graph();
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 7);
    CHECK(g.degrees() == std::vector<int>{2, 4, 4, 2, 2});
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_FALSE(g.adjacent(0, 0));
}

TEST_CASE("from_edges edge cases") {
    const Graph single = Graph::from_edges(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    const Graph k2 = Graph::from_edges(2, {{0, 1}, {1, 0}});
    CHECK(k2.edge_count() == 1);  // duplicates collapse

    CHECK_THROWS_WITH_AS(Graph::from_edges(3, {{0, 3}}),
                         doctest::Contains("(0,3)"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_edges(3, {{1, 1}}),
                         doctest::Contains("self-loop (1,1)"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
}

TEST_CASE("laplacian matches the printed matrices") {
    const SymmetricMatrix l5 = laplacian(fig1_graph());
    const double expect5[5][5] = {{-2, 1, 1, 0, 0},
                                  {1, -4, 1, 1, 1},
                                  {1, 1, -4, 1, 1},
                                  {0, 1, 1, -2, 0},
                                  {0, 1, 1, 0, -2}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(l5(i, j) == expect5[i][j]);

    const SymmetricMatrix l6 = laplacian(fig2_graph());
    for (int i = 0; i < 6; ++i) {
        double row = 0.0;
        for (int j = 0; j < 6; ++j) row += l6(i, j);
        CHECK(row == 0.0);
    }
    CHECK(l6(0, 0) == -2);
    CHECK(l6(1, 1) == -4);
    CHECK(l6(5, 5) == -2);

    const SymmetricMatrix lk2 = laplacian(Graph::from_edges(2, {{0, 1}}));
    CHECK(lk2(0, 0) == -1);
    CHECK(lk2(0, 1) == 1);
    CHECK(lk2(1, 1) == -1);

    const SymmetricMatrix l1 = laplacian(Graph::from_edges(1, {}));
    CHECK(l1(0, 0) == 0);
}

TEST_CASE("laplacian row sums vanish on random graphs") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(2 + trial % 12, 0.4, rng);
        const SymmetricMatrix l = laplacian(g);
        for (int i = 0; i < g.vertex_count(); ++i) {
            double row = 0.0;
            for (int j = 0; j < g.vertex_count(); ++j) row += l(i, j);
            CHECK(row == 0.0);
        }
    }
}

TEST_CASE("degree_profile") {
    const auto p1 = degree_profile(fig1_graph());
    CHECK(p1.degrees == std::vector<int>{2, 4, 4, 2, 2});
    CHECK_FALSE(p1.is_regular);

    const auto p2 = degree_profile(fig2_graph());
    CHECK(p2.degrees == std::vector<int>{2, 4, 4, 4, 4, 2});
    CHECK_FALSE(p2.is_regular);

    const auto p3 = degree_profile(cycle_graph(5));
    CHECK(p3.degrees == std::vector<int>(5, 2));
    CHECK(p3.is_regular);

    CHECK(degree_profile(Graph::from_edges(1, {})).is_regular);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(fig1_graph()));
    CHECK_FALSE(is_connected(Graph::from_edges(2, {})));
    CHECK(is_connected(Graph::from_edges(1, {})));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("cartesian product") {
    const Graph k2 = Graph::from_edges(2, {{0, 1}});
    const Graph square = cartesian_product(k2, k2);
    CHECK(square.vertex_count() == 4);
    CHECK(square.edge_count() == 4);
    CHECK(degree_profile(square).is_regular);  // C4

    const Graph doubled = cartesian_product(fig1_graph(), k2);
    CHECK(doubled.vertex_count() == 10);
    CHECK(doubled.edge_count() == 19);

    const Graph f12 = cartesian_product(fig3_graph(), k2);
    CHECK(f12.vertex_count() == 14);

    // deg((i,j)) = deg_1(i) + deg_2(j)
    std::mt19937 rng(99);
    const Graph a = random_graph(5, 0.5, rng);
    const Graph b = random_graph(4, 0.5, rng);
    const Graph prod = cartesian_product(a, b);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(prod.degree(i * 4 + j) == a.degree(i) + b.degree(j));
}
