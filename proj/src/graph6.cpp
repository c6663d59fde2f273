#include "ctqw/graph6.hpp"

#include <fstream>

namespace ctqw {

Graph graph6_decode(std::string_view line) {
    if (line.empty()) throw Graph6Error("graph6: empty record", 0);
    const unsigned char size_byte = static_cast<unsigned char>(line[0]);
    if (size_byte < 63 || size_byte > 126)
        throw Graph6Error("graph6: size byte outside 63..126", 0);
    if (size_byte == 126)
        throw Graph6Error("graph6: multi-byte size form unsupported (n > 62)", 0);
    const int n = size_byte - 63;
    if (n < 1) throw Graph6Error("graph6: vertex count must be >= 1", 0);

    const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    const size_t nbytes = (nbits + 5) / 6;
    if (line.size() != 1 + nbytes)
        throw Graph6Error("graph6: record length " + std::to_string(line.size()) +
                              ", expected " + std::to_string(1 + nbytes) + " for n=" +
                              std::to_string(n),
                          line.size() > 1 + nbytes ? 1 + nbytes : line.size());

    std::vector<std::pair<int, int>> edges;
    size_t bit = 0;
    for (size_t b = 0; b < nbytes; ++b) {
        const unsigned char raw = static_cast<unsigned char>(line[1 + b]);
        if (raw < 63 || raw > 126)
            throw Graph6Error("graph6: data byte outside 63..126", 1 + b);
        const unsigned value = raw - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            const bool set = (value >> k) & 1u;
            if (bit >= nbits) {
                if (set) throw Graph6Error("graph6: nonzero padding bit", 1 + b);
                continue;
            }
            if (set) {
                // bit index -> column-order pair (i, j), j the column
                size_t r = bit;
                int j = 1;
                while (r >= static_cast<size_t>(j)) r -= j++;
                edges.emplace_back(static_cast<int>(r), j);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62)
        throw std::invalid_argument("graph6_encode: n > 62 unsupported (got " +
                                    std::to_string(n) + ")");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    unsigned acc = 0;
    int acc_bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++acc_bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                acc_bits = 0;
            }
        }
    }
    if (acc_bits > 0) out.push_back(static_cast<char>((acc << (6 - acc_bits)) + 63));
    return out;
}

std::vector<std::string> read_graph6_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first && line.rfind(">>graph6<<", 0) == 0) {
            line.erase(0, 10);
            first = false;
            if (line.empty()) continue;
        }
        first = false;
        if (line.empty()) continue;
        lines.push_back(line);
    }
    return lines;
}

}  // namespace ctqw
