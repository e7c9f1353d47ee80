#pragma once

#include <vector>

#include "rgl/graph.hpp"

namespace rgl {

/// Maximum-cardinality matching of the subgraph induced on `within`
/// (Edmonds' augmenting paths with blossom contraction). Edges are returned
/// with host labels, u < v, sorted.
std::vector<Edge> maximum_matching(const Graph& g, const VertexSet& within);
std::vector<Edge> maximum_matching(const Graph& g);

}  // namespace rgl
