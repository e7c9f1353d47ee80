#include "rgl/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "rgl/error.hpp"
#include "rgl/graph_io.hpp"

namespace rgl {

DenseGraph to_dense(const Graph& g) {
  if (g.order() > kDenseMaxOrder) throw ResourceLimit("dense graphs hold at most 64 vertices");
  DenseGraph d;
  d.n = g.order();
  for (auto [u, v] : g.edges()) d.add_edge(u, v);
  return d;
}

Graph to_graph(const DenseGraph& d) {
  Graph g(d.n);
  for (int u = 0; u < d.n; ++u)
    for (int v = u + 1; v < d.n; ++v)
      if (d.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

namespace {

using Cells = std::vector<std::uint64_t>;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Labeller {
 public:
  explicit Labeller(const DenseGraph& g) : g_(g) {}

  CanonicalLabeling run(Cells cells) {
    std::vector<int> prefix;
    visit(std::move(cells), prefix);
    CanonicalLabeling out;
    out.position.assign(static_cast<std::size_t>(g_.n), 0);
    for (int i = 0; i < g_.n; ++i) out.position[best_order_[i]] = i;
    out.code = best_code_;
    out.automorphisms = std::move(autos_);
    return out;
  }

 private:
  // Splits every cell by neighbour counts into each splitter cell until the
  // ordered partition is equitable. Sub-cells are ordered by count, so the
  // outcome commutes with relabelling.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t si = 0; si < cells.size(); ++si) {
        const std::uint64_t splitter = cells[si];
        Cells next;
        next.reserve(cells.size() + 4);
        for (std::uint64_t cell : cells) {
          if (std::has_single_bit(cell)) {
            next.push_back(cell);
            continue;
          }
          std::array<std::uint64_t, kDenseMaxOrder + 1> by_count{};
          int lo = kDenseMaxOrder;
          int hi = 0;
          for (std::uint64_t rest = cell; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int c = std::popcount(g_.rows[v] & splitter);
            by_count[c] |= std::uint64_t{1} << v;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          if (lo == hi) {
            next.push_back(cell);
            continue;
          }
          changed = true;
          for (int c = lo; c <= hi; ++c)
            if (by_count[c]) next.push_back(by_count[c]);
        }
        cells = std::move(next);
      }
    }
  }

  void visit(Cells cells, std::vector<int>& prefix) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (std::has_single_bit(cells[i])) continue;
      if (target == cells.size() || std::popcount(cells[i]) < std::popcount(cells[target])) target = i;
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> tried;
    for (std::uint64_t rest = cells[target]; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (!tried.empty() && equivalent_to_tried(v, tried, prefix)) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back(std::uint64_t{1} << v);
          child.push_back(cells[i] & ~(std::uint64_t{1} << v));
        } else {
          child.push_back(cells[i]);
        }
      }
      prefix.push_back(v);
      visit(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  // True if v shares an orbit with a tried vertex under the automorphisms
  // found so far that fix every individualised vertex.
  bool equivalent_to_tried(int v, const std::vector<int>& tried, const std::vector<int>& prefix) const {
    if (autos_.empty()) return false;
    UnionFind uf(g_.n);
    for (const auto& a : autos_) {
      bool fixes = true;
      for (int x : prefix)
        if (a[x] != x) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < g_.n; ++x) uf.unite(x, a[x]);
    }
    for (int t : tried)
      if (uf.find(t) == uf.find(v)) return true;
    return false;
  }

  void leaf(const Cells& cells) {
    std::vector<int> order(cells.size());
    std::vector<int> pos(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      order[i] = std::countr_zero(cells[i]);
      pos[order[i]] = static_cast<int>(i);
    }
    std::vector<std::uint64_t> code(cells.size(), 0);
    for (int i = 0; i < g_.n; ++i) {
      std::uint64_t row = 0;
      for (std::uint64_t rest = g_.rows[order[i]]; rest; rest &= rest - 1)
        row |= std::uint64_t{1} << pos[std::countr_zero(rest)];
      code[i] = row;
    }
    if (best_code_.empty()) {
      first_order_ = order;
      first_code_ = code;
      best_order_ = order;
      best_code_ = code;
      return;
    }
    if (code == first_code_) record_automorphism(order, first_order_);
    if (code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    } else if (code == best_code_ && best_code_ != first_code_) {
      record_automorphism(order, best_order_);
    }
  }

  // Two leaves with equal codes: the vertex at position i in one maps to the
  // vertex at position i in the other.
  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    Permutation a(static_cast<std::size_t>(g_.n));
    for (int i = 0; i < g_.n; ++i) a[from[i]] = to[i];
    autos_.push_back(std::move(a));
  }

  const DenseGraph& g_;
  std::vector<int> first_order_;
  std::vector<std::uint64_t> first_code_;
  std::vector<int> best_order_;
  std::vector<std::uint64_t> best_code_;
  std::vector<Permutation> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const DenseGraph& g, std::span<const int> colors) {
  if (g.n < 0 || g.n > kDenseMaxOrder) throw ResourceLimit("canonical labelling limited to order 64");
  if (g.n == 0) return {};
  Cells cells;
  if (colors.empty()) {
    cells.push_back(g.n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1));
  } else {
    if (static_cast<int>(colors.size()) != g.n) throw InvalidArgument("colour vector has wrong length");
    std::map<int, std::uint64_t> classes;
    for (int v = 0; v < g.n; ++v) classes[colors[v]] |= std::uint64_t{1} << v;
    for (const auto& [c, mask] : classes) cells.push_back(mask);
  }
  return Labeller(g).run(std::move(cells));
}

Graph canonical_form(const Graph& g) {
  const auto lab = canonical_labeling(to_dense(g));
  return g.relabeled(lab.position);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_labeling(to_dense(a)).code == canonical_labeling(to_dense(b)).code;
}

}  // namespace rgl
