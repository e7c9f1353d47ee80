#include "rgl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "rgl/canonical.hpp"
#include "rgl/constructors.hpp"
#include "rgl/error.hpp"

namespace rgl {

namespace {

// Upper triangle in graph6 column order, one bit per pair.
std::uint64_t pack(const DenseGraph& g) {
  std::uint64_t code = 0;
  int bit = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) code |= std::uint64_t{1} << bit;
  return code;
}

DenseGraph unpack(int n, std::uint64_t code) {
  DenseGraph g;
  g.n = n;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((code >> bit) & 1U) g.add_edge(i, j);
  return g;
}

// Isomorphism-invariant vertex key: degree, then neighbour degree sum, then
// triangles through the vertex.
std::vector<int> vertex_keys(const DenseGraph& g) {
  std::vector<int> keys(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    int degree_sum = 0;
    int triangles = 0;
    for (std::uint64_t rest = g.rows[v]; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      degree_sum += std::popcount(g.rows[u]);
      triangles += std::popcount(g.rows[u] & g.rows[v]);
    }
    keys[v] = (std::popcount(g.rows[v]) * 4096 + degree_sum) * 4096 + triangles / 2;
  }
  return keys;
}

bool same_orbit_by_automorphisms(const CanonicalLabeling& lab, int a, int b, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : lab.automorphisms)
    for (int x = 0; x < n; ++x) {
      const int rx = find(x);
      const int ry = find(perm[x]);
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  return find(a) == find(b);
}

// Children of `parent` that pass the canonical-deletion test, one per
// isomorphism class, in ascending neighbourhood-mask order.
template <class Visit>
bool expand_parent(const DenseGraph& parent, Visit&& visit) {
  const int m = parent.n;
  const int n = m + 1;
  std::set<std::vector<std::uint64_t>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    DenseGraph child = parent;
    child.n = n;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) child.add_edge(m, std::countr_zero(rest));

    const auto keys = vertex_keys(child);
    const int top = *std::max_element(keys.begin(), keys.end());
    if (keys[m] != top) continue;

    const auto lab = canonical_labeling(child, keys);
    const int deletion = static_cast<int>(
        std::find(lab.position.begin(), lab.position.end(), n - 1) - lab.position.begin());
    if (deletion != m && !same_orbit_by_automorphisms(lab, m, deletion, n)) {
      // Fall back to an exact orbit test: individualise each vertex and
      // compare coloured canonical codes.
      auto marked = [&](int x) {
        std::vector<int> colors(keys.begin(), keys.end());
        for (auto& c : colors) c *= 2;
        colors[x] += 1;
        return canonical_labeling(child, colors).code;
      };
      if (marked(m) != marked(deletion)) continue;
    }
    if (!seen.insert(lab.code).second) continue;
    if (!visit(child)) return false;
  }
  return true;
}

class LevelCache {
 public:
  static LevelCache& instance() {
    static LevelCache cache;
    return cache;
  }

  /// Packed isomorph-free representatives of the given order (<= 9).
  const std::vector<std::uint64_t>& level(int order) {
    std::lock_guard lock(mu_);
    while (static_cast<int>(levels_.size()) <= order) {
      const int next = static_cast<int>(levels_.size());
      std::vector<std::uint64_t> out;
      if (next <= 1) {
        out.push_back(0);
      } else {
        for (std::uint64_t code : levels_[next - 1]) {
          expand_parent(unpack(next - 1, code), [&](const DenseGraph& c) {
            out.push_back(pack(c));
            return true;
          });
        }
      }
      levels_.push_back(std::move(out));
    }
    return levels_[order];
  }

 private:
  LevelCache() { levels_.push_back({0}); }
  std::mutex mu_;
  std::vector<std::vector<std::uint64_t>> levels_;
};

void check_caps(int order, EnumerationMode mode) {
  const int cap = mode == EnumerationMode::kIsomorphFree ? kIsomorphFreeOrderCap : kAllLabeledOrderCap;
  if (order < 0 || order > cap) {
    throw InvalidArgument("enumeration order " + std::to_string(order) + " outside [0, " +
                          std::to_string(cap) + "] for this mode");
  }
}

// Streams isomorph-free graphs of `order` whose parent index falls in the
// shard (index % shards == shard). Visit receives (parent index, graph).
template <class Visit>
void for_each_isomorph_free(int order, int shard, int shards, Visit&& visit) {
  if (order <= 1) {
    if (shard == 0) visit(std::size_t{0}, DenseGraph{order, {}});
    return;
  }
  const auto& parents = LevelCache::instance().level(order - 1);
  for (std::size_t i = static_cast<std::size_t>(shard); i < parents.size(); i += static_cast<std::size_t>(shards)) {
    const bool go_on = expand_parent(unpack(order - 1, parents[i]),
                                     [&](const DenseGraph& c) { return visit(i, c); });
    if (!go_on) return;
  }
}

}  // namespace

long long for_each_graph(int order, EnumerationMode mode, const std::function<bool(const Graph&)>& visit) {
  check_caps(order, mode);
  long long count = 0;
  if (mode == EnumerationMode::kAllLabeled) {
    const int pairs = order * (order - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      ++count;
      if (!visit(to_graph(unpack(order, mask)))) break;
    }
    return count;
  }
  for_each_isomorph_free(order, 0, 1, [&](std::size_t, const DenseGraph& g) {
    ++count;
    return visit(to_graph(g));
  });
  return count;
}

std::vector<Graph> enumerate_graphs(int order, EnumerationMode mode) {
  std::vector<Graph> out;
  for_each_graph(order, mode, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

long long count_graphs(int order, EnumerationMode mode) {
  check_caps(order, mode);
  if (mode == EnumerationMode::kAllLabeled) return 1LL << (order * (order - 1) / 2);
  if (order <= kIsomorphFreeOrderCap - 1) {
    return order == 0 ? 1 : static_cast<long long>(LevelCache::instance().level(order).size());
  }
  long long count = 0;
  for_each_isomorph_free(order, 0, 1, [&](std::size_t, const DenseGraph&) {
    ++count;
    return true;
  });
  return count;
}

namespace {

bool is_counterexample(const Graph& g, const Pattern& red, const Pattern& blue, const DetectOptions& opts) {
  return arrowing_counterexample_check(g, red, blue, opts).counterexample();
}

}  // namespace

ArrowResult arrow_check(int order, const Pattern& red, const Pattern& blue, const OracleOptions& opts) {
  check_caps(order, opts.mode);
  ArrowResult result;
  if (opts.mode == EnumerationMode::kAllLabeled || opts.jobs <= 1) {
    for_each_graph(order, opts.mode, [&](const Graph& g) {
      ++result.graphs_checked;
      if (opts.progress && result.graphs_checked % 100000 == 0) {
        opts.progress("order " + std::to_string(order) + ": " + std::to_string(result.graphs_checked) +
                      " graphs checked");
      }
      if (is_counterexample(g, red, blue, opts.detect)) {
        result.counterexample = g;
        return false;
      }
      return true;
    });
    result.arrows = !result.counterexample.has_value();
    return result;
  }

  // Sharded sweep over parents; the least (parent, child) counterexample wins
  // so the answer matches the sequential run.
  const int shards = opts.jobs;
  struct ShardResult {
    std::size_t parent = SIZE_MAX;
    std::optional<Graph> graph;
    long long checked = 0;
    std::string error;
  };
  std::vector<ShardResult> results(static_cast<std::size_t>(shards));
  LevelCache::instance().level(std::max(order - 1, 0));
  std::vector<std::thread> workers;
  for (int s = 0; s < shards; ++s) {
    workers.emplace_back([&, s] {
      auto& r = results[static_cast<std::size_t>(s)];
      try {
        for_each_isomorph_free(order, s, shards, [&](std::size_t parent, const DenseGraph& d) {
          ++r.checked;
          const Graph g = to_graph(d);
          if (is_counterexample(g, red, blue, opts.detect)) {
            r.parent = parent;
            r.graph = g;
            return false;
          }
          return true;
        });
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    });
  }
  for (auto& w : workers) w.join();
  const ShardResult* best = nullptr;
  for (const auto& r : results) {
    if (!r.error.empty()) throw ResourceLimit(r.error);
    result.graphs_checked += r.checked;
    if (r.graph && (!best || r.parent < best->parent)) best = &r;
  }
  if (best) result.counterexample = best->graph;
  result.arrows = !result.counterexample.has_value();
  return result;
}

SearchOutcome ramsey_search(const Pattern& red, const Pattern& blue, int n_max, const OracleOptions& opts) {
  const int cap = opts.mode == EnumerationMode::kIsomorphFree ? kIsomorphFreeOrderCap : kAllLabeledOrderCap;
  if (n_max < 1 || n_max > cap) {
    throw InvalidArgument("ramsey search limit " + std::to_string(n_max) + " outside [1, " +
                          std::to_string(cap) + "]");
  }
  SearchOutcome out;
  for (int order = 1; order <= n_max; ++order) {
    ArrowResult r;
    try {
      r = arrow_check(order, red, blue, opts);
    } catch (const ResourceLimit& e) {
      out.status = SearchOutcome::Status::kInconclusive;
      out.value = order;
      out.note = e.what();
      return out;
    }
    out.checked_orders.push_back(order);
    if (opts.progress) {
      opts.progress("order " + std::to_string(order) + ": " + (r.arrows ? "arrows" : "counterexample") +
                    " after " + std::to_string(r.graphs_checked) + " graphs");
    }
    if (r.arrows) {
      out.status = SearchOutcome::Status::kExact;
      out.value = order;
      return out;
    }
    out.counterexamples.emplace_back(order, std::move(*r.counterexample));
  }
  out.status = SearchOutcome::Status::kLowerBound;
  out.value = n_max + 1;
  out.note = "no order up to the limit arrows";
  return out;
}

}  // namespace rgl
