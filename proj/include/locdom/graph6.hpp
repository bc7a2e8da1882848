#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "locdom/graph.hpp"

namespace locdom {

// Parse error carrying the byte offset into the input line.
struct Graph6Error : std::runtime_error {
    std::size_t offset;
    Graph6Error(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (byte offset " + std::to_string(off) + ")"), offset(off) {}
};

// Decode one graph6 line. The optional ">>graph6<<" header is accepted.
// Supports the short (n <= 62) and medium (n <= 258047) length headers;
// the long form is rejected. Strict: padding bits must be zero and no
// trailing bytes may follow the edge data.
Graph parse_graph6(std::string_view line);

// Canonical graph6 encoding (short header whenever n <= 62, no ">>graph6<<"
// prefix). Throws std::invalid_argument for n > 258047.
std::string encode_graph6(const Graph& g);

}  // namespace locdom
