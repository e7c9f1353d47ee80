#include "rgl/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rgl/constructors.hpp"
#include "rgl/error.hpp"

namespace rgl {

namespace {

VertexSet to_set(const std::vector<int>& part) {
  VertexSet s;
  for (int v : part) s.insert(v);
  return s;
}

std::vector<VertexSet> part_sets(const VertexPartition& p) {
  std::vector<VertexSet> sets;
  sets.reserve(p.parts.size());
  for (const auto& part : p.parts) sets.push_back(to_set(part));
  return sets;
}

// Index of the part holding each vertex.
std::vector<int> owner_of(const VertexPartition& p, int order) {
  std::vector<int> owner(static_cast<std::size_t>(order), -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    for (int v : p.parts[i]) owner[v] = static_cast<int>(i);
  return owner;
}

}  // namespace

long long VertexPartition::total_internal_edges() const {
  return std::accumulate(internal_edges.begin(), internal_edges.end(), 0LL);
}

VertexPartition make_partition(const Graph& g, std::vector<std::vector<int>> parts) {
  VertexSet seen;
  int covered = 0;
  for (auto& part : parts) {
    std::sort(part.begin(), part.end());
    for (int v : part) {
      if (v < 0 || v >= g.order()) throw InvalidArgument("partition vertex " + std::to_string(v) + " out of range");
      if (seen.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " appears in two parts");
      seen.insert(v);
      ++covered;
    }
  }
  if (covered != g.order()) throw InvalidArgument("partition does not cover every vertex");

  VertexPartition out;
  out.parts = std::move(parts);
  for (const auto& part : out.parts) {
    const VertexSet s = to_set(part);
    out.internal_edges.push_back(g.edges_within(s));
    int dmax = 0;
    for (int v : part) dmax = std::max(dmax, g.degree_in(v, s));
    out.internal_degree_max.push_back(dmax);
  }
  return out;
}

Majorization degree_majorization(const Graph& g) {
  Majorization out;
  std::vector<std::vector<int>> parts;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    int pivot = -1;
    int best = -1;
    for (int v = rest.first(); v >= 0; v = rest.next(v)) {
      const int d = g.degree_in(v, rest);
      if (d > best) {
        best = d;
        pivot = v;
      }
    }
    out.pivots.push_back(pivot);
    VertexSet inside = rest & g.neighbors(pivot);
    parts.push_back((rest - inside).to_vector());
    rest = inside;
  }
  out.partition = make_partition(g, std::move(parts));
  return out;
}

bool is_locally_optimal(const Graph& g, const VertexPartition& partition) {
  const auto sets = part_sets(partition);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int v : partition.parts[i]) {
      const int own = g.degree_in(v, sets[i]);
      for (std::size_t j = 0; j < sets.size(); ++j)
        if (j != i && g.degree_in(v, sets[j]) < own) return false;
    }
  return true;
}

VertexPartition refine_min_internal(const Graph& g, const VertexPartition& start, int* moves) {
  if (start.part_count() < 2) throw InvalidArgument("refinement needs at least two parts");
  auto sets = part_sets(start);
  auto owner = owner_of(start, g.order());
  int made = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < g.order() && !moved; ++v) {
      const int i = owner[v];
      const int own = g.degree_in(v, sets[i]);
      for (int j = 0; j < static_cast<int>(sets.size()); ++j) {
        if (j == i || g.degree_in(v, sets[j]) >= own) continue;
        sets[i].erase(v);
        sets[j].insert(v);
        owner[v] = j;
        ++made;
        moved = true;
        break;
      }
    }
  }
  if (moves) *moves = made;
  std::vector<std::vector<int>> parts;
  for (const auto& s : sets) parts.push_back(s.to_vector());
  return make_partition(g, std::move(parts));
}

bool StabilityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const StabilityCheck& c) { return c.pass; });
}

StabilityReport stability_report(const Graph& g, const VertexPartition& partition, double epsilon, int a2) {
  if (!(epsilon > 0 && epsilon < 1)) throw InvalidArgument("epsilon must lie in (0, 1)");
  if (partition.part_count() < 1) throw InvalidArgument("partition has no parts");
  if (a2 < 1) throw InvalidArgument("a2 must be at least 1");

  StabilityReport r;
  r.epsilon = epsilon;
  r.p = partition.part_count() + 1;
  r.order = g.order();
  const double p = r.p;
  const double n = r.order;
  r.gamma = std::min(1.0 / (2 * p * p), epsilon / 2);
  r.eta_log10 = -10 * p * std::log10(p) + std::log10(epsilon);
  r.min_degree = g.order() ? g.min_degree() : 0;
  r.min_degree_required = (1 - 1 / (p - 1) - r.gamma) * n;
  r.min_degree_hypothesis = r.min_degree >= r.min_degree_required;

  const auto sets = part_sets(partition);
  const int k = partition.part_count();

  StabilityCheck internal{"internal edges", false, static_cast<double>(partition.total_internal_edges()),
                          epsilon * n * (n - 1) / 2};
  internal.pass = internal.value <= internal.bound;
  r.checks.push_back(internal);

  StabilityCheck balance{"part balance", true, 0, std::sqrt(2 * epsilon) * n};
  for (const auto& part : partition.parts)
    balance.value = std::max(balance.value, std::abs(static_cast<double>(part.size()) - n / (p - 1)));
  balance.pass = balance.value <= balance.bound;
  r.checks.push_back(balance);

  // Worst ratio e(V_i, V_j) / (|V_i| |V_j|) over non-empty pairs.
  StabilityCheck density{"cross density", true, 1, 1 - p * p * epsilon};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const double full = static_cast<double>(partition.parts[i].size()) * partition.parts[j].size();
      if (full == 0) continue;
      density.value = std::min(density.value, g.edges_between(sets[i], sets[j]) / full);
    }
  density.pass = density.value >= density.bound;
  r.checks.push_back(density);

  StabilityCheck local{"local optimality", true, 0, 0};
  for (int i = 0; i < k; ++i)
    for (int v : partition.parts[i]) {
      const int own = g.degree_in(v, sets[i]);
      for (int j = 0; j < k; ++j)
        if (j != i && g.degree_in(v, sets[j]) < own) local.value += 1;
    }
  local.pass = local.value == 0;
  r.checks.push_back(local);

  StabilityCheck ceiling{"internal degree ceiling", true, 0, static_cast<double>(a2 - 1)};
  for (int d : partition.internal_degree_max) ceiling.value = std::max(ceiling.value, static_cast<double>(d));
  ceiling.pass = ceiling.value <= ceiling.bound;
  r.checks.push_back(ceiling);
  return r;
}

BigInt clique_count_lower(int p, int s, long long z) {
  if (p < 2) throw InvalidArgument("p must be at least 2");
  if (s < 1) throw InvalidArgument("s must be at least 1");
  const BigInt square = BigInt(s) * s;
  if (z < 0 || BigInt(z) >= square) throw InvalidArgument("missing edge count z must satisfy 0 <= z < s^2");
  BigInt out = square - z;
  for (int i = 0; i < p - 2; ++i) out *= s;
  return out;
}

CliqueCountCheck lemma1_check(const Graph& g, int p, int s) {
  if (p < 2 || s < 1) throw InvalidArgument("need p >= 2 and s >= 1");
  if (g.order() != p * s) throw InvalidArgument("graph order must equal p*s");
  for (auto [u, v] : g.edges())
    if (u / s == v / s) throw InvalidArgument("edge inside a part: not a subgraph of K_p(s)");
  CliqueCountCheck c;
  const long long cross = static_cast<long long>(s) * s * p * (p - 1) / 2;
  c.z = cross - g.edge_count();
  c.count = count_cliques(g, p);
  c.applicable = c.z < static_cast<long long>(s) * s;
  if (c.applicable) {
    c.bound = clique_count_lower(p, s, c.z);
    c.pass = c.count >= c.bound;
  } else {
    c.pass = true;
  }
  return c;
}

std::optional<Embedding> supersaturated_embed(const Graph& g, const std::vector<int>& parts, int last_part_cap,
                                              const DetectOptions& opts) {
  const int p = static_cast<int>(parts.size());
  if (p < 2) throw InvalidArgument("need at least two parts");
  if (!std::is_sorted(parts.begin(), parts.end()) || parts.front() < 1) {
    throw InvalidArgument("parts must be positive and sorted ascending");
  }
  if (last_part_cap < parts.back()) throw InvalidArgument("last part cap must be at least a_p");

  long long examined = 0;
  VertexSet pool = g.vertices();
  std::vector<std::vector<int>> chosen;
  for (int i = 0; i + 1 < p; ++i) {
    const int size = parts[i];
    const int remaining = p - 1 - i;  // cliques needed below this level
    const std::vector<int> cand = pool.to_vector();
    if (static_cast<int>(cand.size()) < size) return std::nullopt;

    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    BigInt best_score = 0;
    std::vector<int> best_set;
    VertexSet best_pool;
    const int m = static_cast<int>(cand.size());
    while (true) {
      if (++examined > opts.node_budget) throw ResourceLimit("supersaturated descent exceeded its budget");
      VertexSet common = pool;
      for (int t : idx) common &= g.neighbors(cand[t]);
      BigInt score = remaining == 1 ? BigInt(common.size()) : count_cliques(g.induced(common), remaining);
      if (score > best_score) {
        best_score = score;
        best_set.clear();
        for (int t : idx) best_set.push_back(cand[t]);
        best_pool = common;
      }
      // Next combination in lexicographic order.
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == m - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int q = pos + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
    }
    if (best_score == 0) return std::nullopt;
    chosen.push_back(std::move(best_set));
    pool = best_pool;
  }
  if (pool.size() < last_part_cap) return std::nullopt;
  std::vector<int> last = pool.to_vector();
  last.resize(static_cast<std::size_t>(last_part_cap));
  chosen.push_back(std::move(last));

  std::vector<int> pattern_parts(parts.begin(), parts.end() - 1);
  pattern_parts.push_back(last_part_cap);
  Embedding e{Pattern::complete_multipartite(pattern_parts), std::move(chosen)};
  std::string why;
  if (!validate_embedding(g, e, &why)) throw std::logic_error("descent produced an invalid embedding: " + why);
  return e;
}

bool ProofAudit::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.pass; });
}

ProofAudit proof_audit(const Graph& g, int p, int h_order, long long n, long long ell,
                       const VertexPartition& partition) {
  if (p < 2) throw InvalidArgument("p must be at least 2");
  if (partition.part_count() != p - 1) throw InvalidArgument("partition must have p-1 parts");
  if (h_order < 1 || n < 1) throw InvalidArgument("H and n must be non-empty");
  if (ell < h_order) throw InvalidArgument("l must be at least |H|");

  ProofAudit a;
  a.order = g.order();
  a.p = p;
  a.h = h_order;
  a.n = n;
  a.ell = ell;
  const long long big_n = g.order();
  a.two_m = big_n * (ell - h_order);
  a.m = a.two_m / 2.0;
  a.s_threshold = std::sqrt(static_cast<double>(a.two_m));
  a.t_threshold = (2 + std::sqrt(2.0)) * std::sqrt(a.m) + static_cast<double>(ell - h_order);
  a.size_deviation_bound = 2 * std::sqrt(a.m);

  const auto sets = part_sets(partition);
  const int k = p - 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      a.z += static_cast<long long>(partition.parts[i].size()) * static_cast<long long>(partition.parts[j].size()) -
             g.edges_between(sets[i], sets[j]);
    }

  // Part sizes: ((p-1)|V_i| - N)^2 <= 4 (p-1)^2 m = 2 (p-1)^2 (2m).
  AuditCheck sizes{"part sizes within 2 sqrt(m) of N/(p-1)", true, ""};
  for (int i = 0; i < k; ++i) {
    const long long size = static_cast<long long>(partition.parts[i].size());
    a.size_deviation.push_back(static_cast<double>(size) - static_cast<double>(big_n) / k);
    const BigInt dev = BigInt(k) * size - big_n;
    if (dev * dev > BigInt(2) * k * k * a.two_m) {
      sizes.pass = false;
      sizes.detail = "part " + std::to_string(i) + " has size " + std::to_string(size);
    }
  }
  a.checks.push_back(sizes);

  AuditCheck missing{"cross non-edges z <= 2m", a.z <= a.two_m,
                     "z = " + std::to_string(a.z) + ", 2m = " + std::to_string(a.two_m)};
  a.checks.push_back(missing);

  AuditCheck internal{"internal degree <= sqrt(2m)", true, ""};
  AuditCheck cross{"cross degree >= |V_j| - t", true, ""};
  for (int i = 0; i < k; ++i)
    for (int v : partition.parts[i]) {
      const long long d = g.degree_in(v, sets[i]);
      if (internal.pass && d * d > a.two_m) {
        internal.pass = false;
        internal.detail = "vertex " + std::to_string(v) + " has " + std::to_string(d) + " internal neighbours";
      }
      for (int j = 0; j < k; ++j) {
        if (j == i || !cross.pass) continue;
        // x = |V_j| - d_{V_j}(v) - (l - h) must satisfy x <= (2 + sqrt 2) sqrt(m),
        // i.e. x^2 <= (3 + 2 sqrt 2) 2m when x > 0.
        const BigInt x = BigInt(static_cast<long long>(partition.parts[j].size())) - g.degree_in(v, sets[j]) -
                         (ell - h_order);
        if (x <= 0) continue;
        const BigInt y = x * x - BigInt(3) * a.two_m;
        if (y > 0 && y * y > BigInt(8) * a.two_m * a.two_m) {
          cross.pass = false;
          cross.detail = "vertex " + std::to_string(v) + " misses too much of part " + std::to_string(j);
        }
      }
    }
  a.checks.push_back(internal);
  a.checks.push_back(cross);

  a.kp_free = clique_number(g) < p;
  a.locally_optimal = is_locally_optimal(g, partition);
  const long long cap = static_cast<long long>(h_order) * (n - 1) + ell;
  a.parts_within_degree_bound = std::all_of(partition.parts.begin(), partition.parts.end(),
                                            [&](const auto& part) { return static_cast<long long>(part.size()) <= cap; });
  return a;
}

}  // namespace rgl
