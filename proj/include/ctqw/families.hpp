#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ctqw/graph.hpp"

namespace ctqw {

// The eight constructive families. Cycle-length parameters must be odd and
// >= 3; bounds are checked by generate().

// chain of K4 blocks with an odd cycle grown onto each end edge
struct F1 {
    int left_cycle;
    int k4_count;
    int right_cycle;
};
// odd head cycle, optional K4 chain, two tail vertices
struct F2 {
    int head_cycle;
    int k4_count;
};
// two tail gadgets bridged by two equal-length paths
struct F3 {
    int bridge_internal;
};
// M independent exterior vertices fully joined to a C_{M-2} interior
struct F4 {
    int exterior;
};
// three odd cycles sharing one adjacent vertex pair
struct F5 {
    int c1;
    int c2;
    int c3;
};
// Cartesian product of a known-good base with K2
struct F6 {
    Graph base;
    std::vector<int> base_starts;
};
// two C4s whose connecting edge is extended into an odd cycle
struct F7 {
    int odd_cycle;
};
// K_i core surrounded by 2i-1 exterior vertices adjacent to every core vertex
struct F8 {
    int core;
};

using FamilySpec = std::variant<F1, F2, F3, F4, F5, F6, F7, F8>;

struct FamilyInstance {
    Graph graph;
    std::vector<int> designated_starts;
    std::string label;
};

// Builds the graph and the start vertices the family designates. Throws
// std::invalid_argument when a parameter is out of bounds.
FamilyInstance generate(const FamilySpec& spec);

// CLI descriptor grammar, e.g. "F1:9,3,13", "F2:9,2", "F3:5", "F4:M=8",
// "F5:7,9,11", "F6:base=<graph6>", "F7:9", "F8:i=5". F6 gets its base start
// set from the classifier.
FamilySpec parse_family_descriptor(const std::string& descriptor);

}  // namespace ctqw
