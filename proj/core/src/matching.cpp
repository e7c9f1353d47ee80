#include "rgl/matching.hpp"

#include <algorithm>
#include <queue>

namespace rgl {

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.order()),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        used_(n_, false),
        in_blossom_(n_, false) {}

  std::vector<int> run() {
    // Greedy start; augmenting search finishes the job.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      const auto& nb = g_.neighbors(v);
      for (int u = nb.first(); u >= 0; u = nb.next(u)) {
        if (match_[u] == -1) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_augmenting_path(v);
      while (end != -1) {
        const int pv = parent_[end];
        const int next = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = next;
      }
    }
    return match_;
  }

 private:
  int lowest_common_ancestor(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      const auto& nb = g_.neighbors(v);
      for (int to = nb.first(); to >= 0; to = nb.next(to)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

std::vector<Edge> maximum_matching(const Graph& g, const VertexSet& within) {
  const auto labels = within.to_vector();
  const Graph sub = g.induced(labels);
  const auto mate = Blossom(sub).run();
  std::vector<Edge> out;
  for (int v = 0; v < sub.order(); ++v)
    if (mate[v] > v) out.emplace_back(labels[v], labels[mate[v]]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> maximum_matching(const Graph& g) { return maximum_matching(g, g.vertices()); }

}  // namespace rgl
