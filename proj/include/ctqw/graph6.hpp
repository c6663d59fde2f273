#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctqw/graph.hpp"

namespace ctqw {

// Parse failure in a graph6 record; byte_offset points at the offending byte.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset(byte_offset) {}
    size_t byte_offset;
};

// Decodes one graph6 record (short form, n <= 62): size byte n+63, then the
// upper-triangle bits in column order (0,1),(0,2),(1,2),(0,3),... packed six
// per byte, each byte offset by 63, trailing pad bits zero.
Graph graph6_decode(std::string_view line);

// Canonical byte-exact inverse of graph6_decode. Throws std::invalid_argument
// for n > 62 (the multi-byte size forms are out of scope).
std::string graph6_encode(const Graph& g);

// All records of a graph6 text file, one per line; an optional ">>graph6<<"
// header line is skipped. Blank trailing lines are ignored.
std::vector<std::string> read_graph6_lines(const std::filesystem::path& path);

}  // namespace ctqw
