#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "rgl/graph.hpp"

namespace rgl {

// graph6: size prefix N(n) then the upper triangle read column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, offset 63.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing newline.
Graph from_graph6(std::string_view text);
/// One graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// "n=<order>" header, then one "u v" line per edge.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

/// Reads a graph from a file; the format is sniffed ("n=" prefix means edge
/// list, otherwise graph6 on the first line).
Graph read_graph_file(const std::string& path);

}  // namespace rgl
