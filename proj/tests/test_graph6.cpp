#include <doctest.h>

#include <fstream>
#include <random>

#include "ctqw/graph6.hpp"
#include "support/fixtures.hpp"

using namespace ctqw;
using namespace ctqw::testing;

TEST_CASE("graph6 decodes the hand-encoded records") {
    const Graph k3 = graph6_decode("Bw");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    const Graph k2 = graph6_decode("A_");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.adjacent(0, 1));

    const Graph k1 = graph6_decode("@");
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);
}

TEST_CASE("graph6 encodes the hand-encoded records") {
    CHECK(graph6_encode(complete_graph(3)) == "Bw");
    CHECK(graph6_encode(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(graph6_encode(Graph::from_edges(1, {})) == "@");
}

TEST_CASE("graph6 parse errors carry the byte offset") {
    CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
    CHECK_THROWS_AS(graph6_decode("B"), Graph6Error);     // too short for n=3
    CHECK_THROWS_AS(graph6_decode("Bww"), Graph6Error);   // too long
    CHECK_THROWS_AS(graph6_decode("A!"), Graph6Error);    // '!' = 33 < 63
    CHECK_THROWS_AS(graph6_decode(std::string("A") + char(127)), Graph6Error);

    try {
        graph6_decode("A!");
        FAIL("expected Graph6Error");
    } catch (const Graph6Error& e) {
        CHECK(e.byte_offset == 1);
    }

    // K2 with a nonzero pad bit: '_' is 100000, 'o' is 110000
    try {
        graph6_decode("Ao");
        FAIL("expected Graph6Error");
    } catch (const Graph6Error& e) {
        CHECK(std::string(e.what()).find("padding") != std::string::npos);
        CHECK(e.byte_offset == 1);
    }
}

TEST_CASE("graph6 encode rejects n > 62") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < 63; ++i) e.emplace_back(i, i + 1);
    CHECK_THROWS_AS(graph6_encode(Graph::from_edges(63, e)), std::invalid_argument);
}

TEST_CASE("graph6 round-trip is the identity on random graphs") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> size(1, 62);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = random_graph(size(rng), density(rng), rng);
        const std::string rec = graph6_encode(g);
        CHECK(graph6_decode(rec) == g);
        CHECK(graph6_encode(graph6_decode(rec)) == rec);
    }
}

TEST_CASE("graph6 file reader skips the format header") {
    const auto path = std::filesystem::temp_directory_path() / "ctqw_g6_header_test.g6";
    {
        std::ofstream out(path);
        out << ">>graph6<<\n" << "Bw\n" << "A_\n\n";
    }
    const auto lines = read_graph6_lines(path);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "Bw");
    CHECK(lines[1] == "A_");

    {
        std::ofstream out(path);
        out << ">>graph6<<Bw\nA_\n";  // header glued to the first record
    }
    const auto glued = read_graph6_lines(path);
    REQUIRE(glued.size() == 2);
    CHECK(glued[0] == "Bw");
    std::filesystem::remove(path);
}
