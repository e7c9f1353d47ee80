#pragma once

#include <span>
#include <vector>

#include "rgl/graph.hpp"

namespace rgl {

Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,m}, centre is vertex 0.
Graph star_graph(int m);
/// Parts occupy consecutive label blocks in the order given.
Graph complete_multipartite(std::span<const int> parts);

Graph complement(const Graph& g);
/// g1 on labels 0..|g1|-1, g2 shifted after it.
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Disjoint union plus every edge between the two sides.
Graph join(const Graph& g1, const Graph& g2);
/// n disjoint copies of h.
Graph union_copies(const Graph& h, int n);

/// Vertices Z_mu, i ~ j iff (i - j) mod mu lies in `connection_set`.
/// The set must be closed under negation and must not contain 0.
Graph circulant(int mu, std::span<const int> connection_set);

/// The residues {+-k, +-(k+1), ..., +-(2k-1)} mod mu.
std::vector<int> sidorenko_connection_set(int mu, int k);

/// Bipartite graph on X = {0..lambda-1}, Y = {lambda..2*lambda-1} where x_i is
/// joined to y_{(i+s) mod lambda} for s = 0..degree-1. degree-regular.
Graph bipartite_circulant(int lambda, int degree);

}  // namespace rgl
