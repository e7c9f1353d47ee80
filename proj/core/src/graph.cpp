#include "rgl/graph.hpp"

#include <algorithm>
#include <string>

#include "rgl/error.hpp"

namespace rgl {

Graph::Graph(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw ResourceLimit("graph order " + std::to_string(order) + " outside [0, " +
                        std::to_string(kMaxOrder) + "]");
  }
  rows_.resize(static_cast<std::size_t>(order));
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside graph of order " +
                          std::to_string(order()));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  rows_[u].insert(v);
  rows_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u].erase(v);
  rows_[v].erase(u);
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (const auto& r : rows_) twice += r.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v)) out.emplace_back(u, v);
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& r : rows_) best = std::max(best, r.size());
  return best;
}

int Graph::min_degree() const {
  if (rows_.empty()) return 0;
  int best = order();
  for (const auto& r : rows_) best = std::min(best, r.size());
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.size());
  return out;
}

long long Graph::edges_within(const VertexSet& s) const {
  long long twice = 0;
  for (int v = s.first(); v >= 0; v = s.next(v)) twice += rows_[v].intersection_size(s);
  return twice / 2;
}

long long Graph::edges_between(const VertexSet& a, const VertexSet& b) const {
  long long total = 0;
  for (int v = a.first(); v >= 0; v = a.next(v)) total += rows_[v].intersection_size(b);
  return total;
}

Graph Graph::induced(std::span<const int> keep) const {
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  auto vs = keep.to_vector();
  return induced(vs);
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order()) {
    throw InvalidArgument("relabel permutation has wrong length");
  }
  VertexSet seen;
  for (int p : perm) {
    check_vertex(p);
    if (seen.contains(p)) throw InvalidArgument("relabel map is not a permutation");
    seen.insert(p);
  }
  Graph out(order());
  for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace rgl
