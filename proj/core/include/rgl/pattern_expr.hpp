#pragma once

#include <string>
#include <string_view>

#include "rgl/graph.hpp"
#include "rgl/pattern.hpp"

namespace rgl {

// Pattern text:
//   K<p>                 clique
//   K(a1,...,ap)         complete multipartite
//   F(n)                 fan K1 + n K2
//   B(k,t)               book
//   S(m)                 star K_{1,m}
//   K1+<n>*<graph>       K1 + nH
//   <n>*<graph>          nH
//   g6:<graph6>          explicit graph
//   @<path>              explicit graph read from a file
// where <graph> is a name (K<p>, P<n>, C<n>, E<n> for edgeless), a graph6
// string, or @<path>. Names contain digits and graph6 never does, which keeps
// the two apart.

/// Throws ParseError carrying the offending character offset.
Pattern parse_pattern(std::string_view text);

/// Canonical text; parse_pattern(format_pattern(p)) == p.
std::string format_pattern(const Pattern& pattern);

/// The <graph> production on its own.
Graph parse_graph_expr(std::string_view text);
std::string format_graph_expr(const Graph& g);

}  // namespace rgl
