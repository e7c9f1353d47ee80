#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rgl/graph.hpp"

namespace rgl {

inline constexpr int kDenseMaxOrder = 64;

/// Adjacency as one 64-bit mask per vertex; order at most 64. Used by the
/// canonical labeller and the enumerator, where word-sized rows keep the
/// inner loops cheap.
struct DenseGraph {
  int n = 0;
  std::array<std::uint64_t, kDenseMaxOrder> rows{};

  bool has_edge(int u, int v) const { return (rows[u] >> v) & 1U; }
  void add_edge(int u, int v) {
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;
};

DenseGraph to_dense(const Graph& g);
Graph to_graph(const DenseGraph& g);

using Permutation = std::vector<int>;

struct CanonicalLabeling {
  /// position[v] is v's index in the canonical ordering.
  std::vector<int> position;
  /// Adjacency rows of the relabelled graph, row i for canonical index i.
  std::vector<std::uint64_t> code;
  /// Automorphisms met during the search (image maps). They generate a
  /// subgroup of Aut(g); callers must not assume the whole group.
  std::vector<Permutation> automorphisms;
};

/// Canonical labelling by partition refinement and individualisation, with
/// orbit pruning from discovered automorphisms. `colors`, when non-empty,
/// gives an initial vertex colouring; colour classes keep their relative
/// order, so two coloured graphs get equal codes iff they are isomorphic by
/// a colour-preserving map.
CanonicalLabeling canonical_labeling(const DenseGraph& g, std::span<const int> colors = {});

/// Canonically relabelled copy of g (order <= 64).
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace rgl
