#pragma once

// Text formats for getting graphs in and out of the tools.
//
// Edge-list format: first line "n m", then exactly m lines "u v" with
// 0-based ids.  The parser is strict: self-loops, repeated edges,
// out-of-range ids, malformed lines and trailing content are errors, not
// warnings.
//
// graph6 is accepted as an alternative input encoding (one graph per line,
// optional ">>graph6<<" prefix).

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "doily/graph.hpp"

namespace doily {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class GraphFormat { edge_list, graph6 };

// Parses "edgelist" / "graph6"; throws ParseError otherwise.
GraphFormat parse_format(std::string_view name);

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

Graph parse_graph6(std::string_view line);

// Reads one graph in the given format from the stream.
Graph read_graph(std::istream& in, GraphFormat format);

}  // namespace doily
