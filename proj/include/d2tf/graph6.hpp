#ifndef D2TF_GRAPH6_HPP
#define D2TF_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "d2tf/graph.hpp"

namespace d2tf {

// Parse failure; `offset` is the byte position within the input line.
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6: byte " + std::to_string(offset) + ": " + what),
          offset(offset) {}
    std::size_t offset;
};

// One graph per line, 6-bit bytes offset by 63, adjacency bits in
// column-major upper-triangle order, zero padding. A trailing newline in
// `line` is tolerated.
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

}  // namespace d2tf

#endif
