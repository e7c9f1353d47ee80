#include "rgl/constructors.hpp"

#include <numeric>
#include <set>
#include <string>

#include "rgl/error.hpp"

namespace rgl {

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int m) {
  if (m < 0) throw InvalidArgument("star size must be non-negative");
  Graph g(m + 1);
  for (int v = 1; v <= m; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_multipartite(std::span<const int> parts) {
  long long total = 0;
  for (int a : parts) {
    if (a < 0) throw InvalidArgument("multipartite part sizes must be non-negative");
    total += a;
  }
  if (total > kMaxOrder) throw ResourceLimit("complete multipartite graph exceeds order cap");
  Graph g(static_cast<int>(total));
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) part_of.push_back(static_cast<int>(i));
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int shift = g1.order();
  Graph out(g1.order() + g2.order());
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  for (auto [u, v] : g2.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph out = disjoint_union(g1, g2);
  for (int u = 0; u < g1.order(); ++u)
    for (int v = 0; v < g2.order(); ++v) out.add_edge(u, g1.order() + v);
  return out;
}

Graph union_copies(const Graph& h, int n) {
  if (n < 0) throw InvalidArgument("copy count must be non-negative");
  if (static_cast<long long>(h.order()) * n > kMaxOrder) {
    throw ResourceLimit("union of copies exceeds order cap");
  }
  Graph out(0);
  for (int i = 0; i < n; ++i) out = disjoint_union(out, h);
  return out;
}

Graph circulant(int mu, std::span<const int> connection_set) {
  if (mu < 1) throw InvalidArgument("circulant order must be positive");
  std::set<int> residues;
  for (int d : connection_set) residues.insert(((d % mu) + mu) % mu);
  if (residues.contains(0)) throw InvalidArgument("connection set contains 0 mod mu");
  for (int d : residues) {
    if (!residues.contains((mu - d) % mu)) {
      throw InvalidArgument("connection set is not closed under negation mod " +
                            std::to_string(mu));
    }
  }
  Graph g(mu);
  for (int i = 0; i < mu; ++i)
    for (int d : residues) {
      const int j = (i + d) % mu;
      if (i < j) g.add_edge(i, j);
    }
  return g;
}

std::vector<int> sidorenko_connection_set(int mu, int k) {
  if (k < 1) throw InvalidArgument("Sidorenko parameter k must be positive");
  std::vector<int> out;
  for (int d = k; d <= 2 * k - 1; ++d) {
    out.push_back(d % mu);
    out.push_back(((-d) % mu + mu) % mu);
  }
  return out;
}

Graph bipartite_circulant(int lambda, int degree) {
  if (lambda < 1) throw InvalidArgument("bipartite circulant side must be positive");
  if (degree < 0 || degree > lambda) {
    throw InvalidArgument("bipartite circulant degree " + std::to_string(degree) +
                          " outside [0, " + std::to_string(lambda) + "]");
  }
  Graph g(2 * lambda);
  for (int x = 0; x < lambda; ++x)
    for (int s = 0; s < degree; ++s) g.add_edge(x, lambda + (x + s) % lambda);
  return g;
}

}  // namespace rgl
