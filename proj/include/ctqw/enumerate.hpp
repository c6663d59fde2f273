#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "ctqw/graph.hpp"

namespace ctqw {

// Isomorphism-invariant encoding of a graph on n <= 11 vertices: the
// upper-triangle bits in graph6 column order, first bit most significant,
// packed into a single word. Codes are only comparable at equal n.
struct CanonicalCode {
    int n = 0;
    std::uint64_t bits = 0;
    auto operator<=>(const CanonicalCode&) const = default;
};

// Minimum encoding over all n! vertex permutations (branch-and-bound over
// position assignments, exact). The reference canonical form; n <= 11.
CanonicalCode canonical_min_code(const Graph& g);

// Fast canonical form via equitable refinement plus individualization.
// Same partition into isomorphism classes as canonical_min_code but a
// different representative; never compare the two code spaces. n <= 11.
CanonicalCode canonical_code(const Graph& g);

Graph graph_from_code(const CanonicalCode& code);

// One representative per isomorphism class of simple connected graphs on n
// vertices, deduplicated with canonical_min_code over every labeled graph.
// Deliberately brute force; capped at n = 7 (853 classes).
std::vector<Graph> enumerate_connected(int n);

// Sorted canonical_code values of all connected isomorphism classes on n
// vertices, built level by level: every connected graph arises by deleting a
// non-cut vertex, so augmenting each (n-1)-class by one vertex with every
// nonempty neighborhood covers all classes. n <= 10 (n = 10 needs ~1.5 GB).
std::vector<CanonicalCode> connected_graph_codes(int n, int threads = 0);

void write_graph6_list(const std::vector<CanonicalCode>& codes,
                       const std::filesystem::path& path);

}  // namespace ctqw
