#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rgl/vertex_set.hpp"

namespace rgl {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..order-1. Adjacency is one
/// bit row per vertex; the relation is kept symmetric and irreflexive by
/// every mutator.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const { return static_cast<int>(rows_.size()); }
  bool has_edge(int u, int v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].size(); }
  int degree_in(int v, const VertexSet& s) const { return rows_[v].intersection_size(s); }
  VertexSet vertices() const { return VertexSet::prefix(order()); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  long long edge_count() const;
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  int max_degree() const;
  int min_degree() const;
  std::vector<int> degree_sequence() const;

  /// Edges with both ends in s.
  long long edges_within(const VertexSet& s) const;
  /// Edges with one end in a and the other in b; a and b disjoint.
  long long edges_between(const VertexSet& a, const VertexSet& b) const;

  /// Subgraph induced on `keep`, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const int> keep) const;
  Graph induced(const VertexSet& keep) const;
  /// Copy with vertex v renamed to perm[v]; perm must be a permutation.
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;
  std::vector<VertexSet> rows_;
};

}  // namespace rgl
