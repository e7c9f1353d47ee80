#include "rgl/detectors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "rgl/constructors.hpp"
#include "rgl/error.hpp"
#include "rgl/matching.hpp"

namespace rgl {

long long default_node_budget() {
  if (const char* env = std::getenv("RGL_NODE_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultNodeBudget;
}

namespace {

class Budget {
 public:
  explicit Budget(long long limit) : limit_(limit) {}
  /// False once the budget is spent; callers unwind immediately.
  bool tick() {
    if (++nodes_ > limit_) exhausted_ = true;
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  long long nodes() const { return nodes_; }

 private:
  long long limit_;
  long long nodes_ = 0;
  bool exhausted_ = false;
};

Detection finish(const Budget& budget, std::optional<Embedding> e) {
  Detection d;
  d.nodes = budget.nodes();
  if (e) {
    d.status = DetectStatus::kFound;
    d.embedding = std::move(e);
  } else {
    d.status = budget.exhausted() ? DetectStatus::kBudgetExhausted : DetectStatus::kAbsent;
  }
  return d;
}

// Enumerates injective maps of a pattern graph into host vertices drawn from
// an allowed set, preserving pattern edges. Pattern vertices are matched in a
// connectivity-first order so that candidate sets shrink early.
class Monomorphism {
 public:
  Monomorphism(const Graph& host, const Graph& pattern, Budget& budget)
      : host_(host), pat_(pattern), budget_(budget), image_(pattern.order(), -1) {}

  /// Calls visit(image) for each embedding with pattern vertex `anchor`
  /// mapped to `anchor_image` (anchor -1: unconstrained). Stops and returns
  /// true as soon as visit returns true.
  template <class Visit>
  bool for_each(const VertexSet& allowed, int anchor, int anchor_image, Visit&& visit) {
    order_ = match_order(anchor);
    allowed_ = allowed;
    anchor_ = anchor;
    anchor_image_ = anchor_image;
    std::fill(image_.begin(), image_.end(), -1);
    return extend(0, VertexSet{}, visit);
  }

 private:
  std::vector<int> match_order(int anchor) const {
    const int k = pat_.order();
    std::vector<int> order;
    std::vector<bool> placed(k, false);
    std::vector<int> links(k, 0);
    for (int step = 0; step < k; ++step) {
      int best = -1;
      if (step == 0 && anchor >= 0) {
        best = anchor;
      } else {
        for (int x = 0; x < k; ++x) {
          if (placed[x]) continue;
          if (best < 0 || links[x] > links[best] ||
              (links[x] == links[best] && pat_.degree(x) > pat_.degree(best)))
            best = x;
        }
      }
      placed[best] = true;
      order.push_back(best);
      const auto& nb = pat_.neighbors(best);
      for (int y = nb.first(); y >= 0; y = nb.next(y)) ++links[y];
    }
    return order;
  }

  template <class Visit>
  bool extend(std::size_t depth, VertexSet used, Visit& visit) {
    if (!budget_.tick()) return false;
    if (depth == order_.size()) return visit(image_);
    const int x = order_[depth];
    VertexSet cand = allowed_ - used;
    const auto& pnb = pat_.neighbors(x);
    for (int y = pnb.first(); y >= 0; y = pnb.next(y))
      if (image_[y] >= 0) cand &= host_.neighbors(image_[y]);
    if (x == anchor_) {
      if (!cand.contains(anchor_image_)) return false;
      cand = VertexSet{anchor_image_};
    }
    const int need_degree = pat_.degree(x);
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      if (host_.degree(v) < need_degree) continue;
      image_[x] = v;
      used.insert(v);
      if (extend(depth + 1, used, visit)) return true;
      used.erase(v);
      image_[x] = -1;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pat_;
  Budget& budget_;
  std::vector<int> image_;
  std::vector<int> order_;
  VertexSet allowed_;
  int anchor_ = -1;
  int anchor_image_ = -1;
};

// Places `copies` disjoint copies of h inside `free`. The least free vertex
// is either covered by the next copy or left out for good, so each packing
// is reached without permuting the copies.
class Packer {
 public:
  Packer(const Graph& host, const Graph& h, Budget& budget)
      : host_(host), h_(h), budget_(budget) {}

  bool pack(const VertexSet& free, int copies, std::vector<std::vector<int>>& out) {
    if (copies == 0) return true;
    if (free.size() < copies * h_.order()) return false;
    if (!budget_.tick()) return false;
    const int u = free.first();
    for (int x = 0; x < h_.order(); ++x) {
      Monomorphism mono(host_, h_, budget_);
      const bool done = mono.for_each(free, x, u, [&](const std::vector<int>& image) {
        VertexSet rest = free;
        for (int v : image) rest.erase(v);
        out.push_back(image);
        if (pack(rest, copies - 1, out)) return true;
        out.pop_back();
        return budget_.exhausted();
      });
      if (done) return !budget_.exhausted();
      if (budget_.exhausted()) return false;
    }
    VertexSet rest = free;
    rest.erase(u);
    return pack(rest, copies, out);
  }

 private:
  const Graph& host_;
  const Graph& h_;
  Budget& budget_;
};

bool find_clique(const Graph& g, VertexSet cand, int need, std::vector<int>& chosen, Budget& b) {
  if (need == 0) return true;
  if (!b.tick()) return false;
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    if (cand.size() < need) return false;
    cand.erase(v);
    chosen.push_back(v);
    if (find_clique(g, cand & g.neighbors(v), need - 1, chosen, b)) return true;
    chosen.pop_back();
    if (b.exhausted()) return false;
  }
  return false;
}

// Complete multipartite search. Parts are filled largest first; each part is
// drawn from the common neighbourhood of everything already placed. Equal
// sized parts are interchangeable, so their least vertices must increase.
class MultipartiteSearch {
 public:
  MultipartiteSearch(const Graph& g, std::vector<int> sizes, Budget& b)
      : g_(g), sizes_(std::move(sizes)), b_(b), chosen_(sizes_.size()), suffix_(sizes_.size() + 1, 0) {
    for (int i = static_cast<int>(sizes_.size()) - 1; i >= 0; --i)
      suffix_[i] = suffix_[i + 1] + sizes_[i];
  }

  bool run() { return start_part(0, g_.vertices(), -1); }
  const std::vector<std::vector<int>>& chosen() const { return chosen_; }

 private:
  bool start_part(std::size_t i, const VertexSet& cand, int lower) {
    if (i == sizes_.size()) return true;
    if (!feasible(cand, i)) return false;
    return pick(i, cand, cand, lower);
  }

  // Degree-based necessary condition for fitting parts i.. into `pool`: a
  // vertex of a part of size s needs (total - s) neighbours in the pool, and
  // every part no larger than s needs such vertices too.
  bool feasible(const VertexSet& pool, std::size_t i) const {
    const int total = suffix_[i];
    if (pool.size() < total) return false;
    std::vector<int> rest(sizes_.begin() + static_cast<std::ptrdiff_t>(i), sizes_.end());
    std::sort(rest.begin(), rest.end());
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(pool.size()));
    for (int v = pool.first(); v >= 0; v = pool.next(v)) degrees.push_back(g_.degree_in(v, pool));
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    int covered = 0;
    for (int s : rest) {
      covered += s;
      const int need = total - s;
      // degrees is descending: the covered-th largest degree must reach need.
      if (degrees[static_cast<std::size_t>(covered - 1)] < need) return false;
    }
    return true;
  }

  bool pick(std::size_t i, VertexSet avail, const VertexSet& later, int lower) {
    auto& part = chosen_[i];
    if (static_cast<int>(part.size()) == sizes_[i]) {
      const int next_lower =
          (i + 1 < sizes_.size() && sizes_[i + 1] == sizes_[i]) ? part.front() : -1;
      return start_part(i + 1, later, next_lower);
    }
    if (!b_.tick()) return false;
    const int need_here = sizes_[i] - static_cast<int>(part.size());
    for (int v = avail.first(); v >= 0; v = avail.next(v)) {
      if (avail.size() < need_here) return false;
      avail.erase(v);
      if (v <= lower) continue;
      const VertexSet next_later = later & g_.neighbors(v);
      if (!feasible(next_later, i + 1)) continue;
      part.push_back(v);
      if (pick(i, avail, next_later, -1)) return true;
      part.pop_back();
      if (b_.exhausted()) return false;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> sizes_;
  Budget& b_;
  std::vector<std::vector<int>> chosen_;
  std::vector<int> suffix_;
};

std::optional<Embedding> search_multipartite(const Graph& host, const Pattern& pattern,
                                             const std::vector<int>& parts, Budget& b, bool join_split);

// Vertex sets of the connected components of the complement. The host is
// the join of the subgraphs they induce.
std::vector<VertexSet> complement_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp;
    VertexSet frontier{unseen.first()};
    unseen -= frontier;
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next;
      for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= unseen - g.neighbors(v);
      unseen -= next;
      frontier = next;
    }
    out.push_back(comp);
  }
  return out;
}

// Complete multipartite search in a join G_1 + ... + G_q. Every cross-factor
// pair is an edge, so an embedding is a split of each part size a_i into
// pieces x_ij >= 0, where the non-empty pieces inside factor j must form a
// complete multipartite subgraph of G_j. Factors are tried one at a time with
// the remaining sizes memoised.
class JoinSplit {
 public:
  JoinSplit(const Graph& host, std::vector<VertexSet> comps, const std::vector<int>& parts, Budget& b)
      : parts_(parts), b_(b), chosen_(parts.size()) {
    for (const auto& c : comps) {
      factors_.push_back(Factor{host.induced(c), c.to_vector(), {}});
    }
    // Factor capacities from the back, for a cheap size bound.
    capacity_.assign(factors_.size() + 1, 0);
    for (int j = static_cast<int>(factors_.size()) - 1; j >= 0; --j)
      capacity_[j] = capacity_[j + 1] + factors_[j].graph.order();
  }

  bool run() { return place(0, parts_); }
  const std::vector<std::vector<int>>& chosen() const { return chosen_; }

 private:
  struct Factor {
    Graph graph;
    std::vector<int> labels;
    std::map<std::vector<int>, std::optional<std::vector<std::vector<int>>>> cache;
  };

  bool place(std::size_t j, const std::vector<int>& rest) {
    const int total = std::accumulate(rest.begin(), rest.end(), 0);
    if (total == 0) return true;
    if (j == factors_.size() || total > capacity_[j]) return false;
    if (!b_.tick()) return false;
    if (dead_.count({j, rest})) return false;
    std::vector<int> piece(rest.size(), 0);
    if (choose(j, rest, piece, 0, factors_[j].graph.order())) return true;
    if (!b_.exhausted()) dead_.insert({j, rest});
    return false;
  }

  // Enumerates pieces x <= rest with sum at most the factor order, largest
  // pieces first so that dense factors are used eagerly.
  bool choose(std::size_t j, const std::vector<int>& rest, std::vector<int>& piece, std::size_t i, int room) {
    if (b_.exhausted()) return false;
    if (i == rest.size()) {
      const auto embedded = factor_embedding(j, piece);
      if (!embedded) return false;
      std::vector<int> next(rest);
      for (std::size_t k = 0; k < rest.size(); ++k) next[k] -= piece[k];
      if (!place(j + 1, next)) return false;
      for (std::size_t k = 0; k < rest.size(); ++k)
        chosen_[k].insert(chosen_[k].end(), (*embedded)[k].begin(), (*embedded)[k].end());
      return true;
    }
    for (int x = std::min(rest[i], room); x >= 0; --x) {
      piece[i] = x;
      if (choose(j, rest, piece, i + 1, room - x)) return true;
    }
    piece[i] = 0;
    return false;
  }

  // Host vertices per part index for the pieces inside factor j, or nullopt
  // when the factor does not contain them.
  std::optional<std::vector<std::vector<int>>> factor_embedding(std::size_t j, const std::vector<int>& piece) {
    auto& f = factors_[j];
    auto it = f.cache.find(piece);
    if (it != f.cache.end()) return it->second;
    std::optional<std::vector<std::vector<int>>> result;
    std::vector<int> idx;
    for (std::size_t k = 0; k < piece.size(); ++k)
      if (piece[k] > 0) idx.push_back(static_cast<int>(k));
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int c) { return piece[a] < piece[c]; });
    std::vector<std::vector<int>> roles(piece.size());
    if (idx.empty()) {
      result = roles;
    } else {
      std::vector<int> sizes;
      for (int k : idx) sizes.push_back(piece[k]);
      const Pattern sub = Pattern::complete_multipartite(sizes);
      if (auto e = search_multipartite(f.graph, sub, sizes, b_, false)) {
        for (std::size_t r = 0; r < idx.size(); ++r)
          for (int v : e->roles[r]) roles[idx[r]].push_back(f.labels[v]);
        result = roles;
      }
    }
    if (!b_.exhausted()) f.cache.emplace(piece, result);
    return result;
  }

  std::vector<int> parts_;
  Budget& b_;
  std::vector<Factor> factors_;
  std::vector<int> capacity_;
  std::set<std::pair<std::size_t, std::vector<int>>> dead_;
  std::vector<std::vector<int>> chosen_;
};

// Hosts below this order are searched directly; the split only pays off on
// the larger joined constructions.
constexpr int kJoinSplitMinOrder = 24;
constexpr long long kJoinSplitMaxPieces = 200000;

std::optional<Embedding> search_multipartite(const Graph& host, const Pattern& pattern,
                                             const std::vector<int>& parts, Budget& b, bool join_split) {
  if (join_split && host.order() >= kJoinSplitMinOrder && parts.size() >= 2) {
    long long pieces = 1;
    for (int a : parts) pieces = std::min(pieces * (a + 1), kJoinSplitMaxPieces + 1);
    auto comps = complement_components(host);
    if (comps.size() >= 2 && pieces <= kJoinSplitMaxPieces) {
      JoinSplit split(host, std::move(comps), parts, b);
      if (!split.run()) return std::nullopt;
      Embedding e{pattern, split.chosen()};
      for (auto& role : e.roles) std::sort(role.begin(), role.end());
      return e;
    }
  }
  // Search order: pattern part indices by descending size.
  std::vector<int> order(parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return parts[x] > parts[y]; });
  std::vector<int> sizes;
  for (int idx : order) sizes.push_back(parts[idx]);
  MultipartiteSearch search(host, sizes, b);
  if (!search.run()) return std::nullopt;
  Embedding e{pattern, std::vector<std::vector<int>>(parts.size())};
  for (std::size_t k = 0; k < order.size(); ++k) e.roles[order[k]] = search.chosen()[k];
  return e;
}

bool find_book(const Graph& g, VertexSet ext, const VertexSet& common, int k, int pages,
               std::vector<int>& spine, Budget& b) {
  if (static_cast<int>(spine.size()) == k) return true;
  if (!b.tick()) return false;
  for (int v = ext.first(); v >= 0; v = ext.next(v)) {
    ext.erase(v);
    const VertexSet next_common = common & g.neighbors(v);
    const int still = k - static_cast<int>(spine.size()) - 1;
    if (next_common.size() < still + pages) continue;
    spine.push_back(v);
    if (find_book(g, ext & g.neighbors(v), next_common, k, pages, spine, b)) return true;
    spine.pop_back();
    if (b.exhausted()) return false;
  }
  return false;
}

std::vector<int> take_first(const VertexSet& s, int count) {
  std::vector<int> out;
  for (int v = s.first(); v >= 0 && static_cast<int>(out.size()) < count; v = s.next(v)) out.push_back(v);
  return out;
}

bool is_k2(const Graph& h) { return h.order() == 2 && h.edge_count() == 1; }

Detection k1_packing(const Graph& host, const Graph& h, int n, const DetectOptions& opts,
                     bool allow_matching) {
  if (n < 1 || h.order() < 1) throw InvalidArgument("K1+nH packing needs n >= 1 and |H| >= 1");
  Budget b(opts.node_budget);
  const Pattern pattern = Pattern::join_one(h, n);
  if (allow_matching && is_k2(h)) {
    for (int v = 0; v < host.order(); ++v) {
      if (!b.tick()) break;
      if (host.degree(v) < 2 * n) continue;
      const auto m = maximum_matching(host, host.neighbors(v));
      if (static_cast<int>(m.size()) < n) continue;
      Embedding e{pattern, {{v}}};
      for (int i = 0; i < n; ++i) e.roles.push_back({m[i].first, m[i].second});
      return finish(b, std::move(e));
    }
    return finish(b, std::nullopt);
  }
  Packer packer(host, h, b);
  for (int v = 0; v < host.order(); ++v) {
    if (host.degree(v) < n * h.order()) continue;
    std::vector<std::vector<int>> copies;
    if (packer.pack(host.neighbors(v), n, copies)) {
      Embedding e{pattern, {{v}}};
      for (auto& c : copies) e.roles.push_back(std::move(c));
      return finish(b, std::move(e));
    }
    if (b.exhausted()) break;
  }
  return finish(b, std::nullopt);
}

}  // namespace

bool validate_embedding(const Graph& host, const Embedding& e, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const auto roles = pattern_roles(e.pattern);
  if (roles.size() != e.roles.size()) return fail("role count mismatch");
  std::vector<int> flat;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (static_cast<int>(e.roles[i].size()) != roles[i]) {
      return fail("role " + std::to_string(i) + " has wrong size");
    }
    flat.insert(flat.end(), e.roles[i].begin(), e.roles[i].end());
  }
  VertexSet seen;
  for (int v : flat) {
    if (v < 0 || v >= host.order()) return fail("vertex " + std::to_string(v) + " out of range");
    if (seen.contains(v)) return fail("vertex " + std::to_string(v) + " used twice");
    seen.insert(v);
  }
  const Graph pat = build_pattern(e.pattern);
  for (auto [x, y] : pat.edges()) {
    if (!host.has_edge(flat[x], flat[y])) {
      return fail("missing host edge " + std::to_string(flat[x]) + "-" + std::to_string(flat[y]));
    }
  }
  return true;
}

Detection find_embedding(const Graph& host, const Pattern& pattern, const DetectOptions& opts) {
  if (const auto* j = pattern.get_if<Pattern::JoinOne>()) return find_k1_packing(host, j->h, j->n, opts);

  Budget b(opts.node_budget);
  if (const auto* c = pattern.get_if<Pattern::Clique>()) {
    std::vector<int> chosen;
    if (find_clique(host, host.vertices(), c->p, chosen, b)) return finish(b, Embedding{pattern, {chosen}});
    return finish(b, std::nullopt);
  }
  if (const auto* m = pattern.get_if<Pattern::CompleteMultipartite>()) {
    return finish(b, search_multipartite(host, pattern, m->parts, b, opts.join_split));
  }
  if (const auto* bk = pattern.get_if<Pattern::Book>()) {
    std::vector<int> spine;
    const VertexSet all = host.vertices();
    if (find_book(host, all, all, bk->k, bk->t - bk->k, spine, b)) {
      VertexSet common = all;
      for (int v : spine) common &= host.neighbors(v);
      return finish(b, Embedding{pattern, {spine, take_first(common, bk->t - bk->k)}});
    }
    return finish(b, std::nullopt);
  }
  if (const auto* s = pattern.get_if<Pattern::Star>()) {
    for (int v = 0; v < host.order(); ++v) {
      if (!b.tick()) break;
      if (host.degree(v) >= s->m) return finish(b, Embedding{pattern, {{v}, take_first(host.neighbors(v), s->m)}});
    }
    return finish(b, std::nullopt);
  }
  if (const auto* u = pattern.get_if<Pattern::Union>()) {
    Packer packer(host, u->h, b);
    std::vector<std::vector<int>> copies;
    if (packer.pack(host.vertices(), u->n, copies)) return finish(b, Embedding{pattern, copies});
    return finish(b, std::nullopt);
  }
  const auto& g = std::get<Pattern::Explicit>(pattern.variant()).g;
  if (g.order() > host.order()) return finish(b, std::nullopt);
  Monomorphism mono(host, g, b);
  std::optional<Embedding> found;
  mono.for_each(host.vertices(), -1, -1, [&](const std::vector<int>& image) {
    found = Embedding{pattern, {image}};
    return true;
  });
  return finish(b, found);
}

Detection find_k1_packing(const Graph& host, const Graph& h, int n, const DetectOptions& opts) {
  return k1_packing(host, h, n, opts, true);
}

Detection find_k1_packing_backtracking(const Graph& host, const Graph& h, int n,
                                       const DetectOptions& opts) {
  return k1_packing(host, h, n, opts, false);
}

namespace {

// Pivoting clique enumeration: every clique of the candidate set is some held
// set plus a subset of the pivots collected along one root-to-leaf path.
class PivotCounter {
 public:
  PivotCounter(const Graph& g, int p) : g_(g), p_(p) {}

  void run(const VertexSet& cand, int held, int pivots) {
    if (held > p_ || held + pivots + cand.size() < p_) return;
    if (cand.empty()) {
      ++leaves_[{pivots, p_ - held}];
      return;
    }
    int pivot = -1;
    int best = -1;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      const int d = g_.degree_in(v, cand);
      if (d > best) {
        best = d;
        pivot = v;
      }
    }
    run(cand & g_.neighbors(pivot), held, pivots + 1);
    VertexSet rest = cand;
    const VertexSet branch = cand - g_.neighbors(pivot);
    for (int v = branch.first(); v >= 0; v = branch.next(v)) {
      if (v == pivot) continue;
      run(rest & g_.neighbors(v), held + 1, pivots);
      rest.erase(v);
    }
  }

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& [key, count] : leaves_) {
      const auto [pivots, need] = key;
      if (need < 0 || need > pivots) continue;
      BigInt c = 1;
      for (int i = 0; i < need; ++i) c = c * (pivots - i) / (i + 1);
      sum += c * count;
    }
    return sum;
  }

 private:
  const Graph& g_;
  int p_;
  std::map<std::pair<int, int>, unsigned long long> leaves_;
};

int max_clique_rec(const Graph& g, VertexSet cand, int size, int best) {
  if (cand.empty()) return std::max(best, size);
  // Greedy colouring bound on the candidate set.
  {
    VertexSet uncolored = cand;
    int colors = 0;
    while (!uncolored.empty()) {
      ++colors;
      VertexSet avail = uncolored;
      while (!avail.empty()) {
        const int v = avail.first();
        uncolored.erase(v);
        avail.erase(v);
        avail -= g.neighbors(v);
      }
    }
    if (size + colors <= best) return best;
  }
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    if (size + cand.size() <= best) break;
    cand.erase(v);
    best = max_clique_rec(g, cand & g.neighbors(v), size + 1, best);
  }
  return best;
}

}  // namespace

BigInt count_cliques(const Graph& host, int p) {
  if (p < 1) throw InvalidArgument("clique size must be positive");
  PivotCounter counter(host, p);
  counter.run(host.vertices(), 0, 0);
  return counter.total();
}

int clique_number(const Graph& g) { return max_clique_rec(g, g.vertices(), 0, 0); }

ArrowVerdict arrowing_counterexample_check(const Graph& host, const Pattern& red,
                                           const Pattern& blue, const DetectOptions& opts) {
  auto red_hit = find_embedding(host, red, opts);
  if (red_hit.status == DetectStatus::kBudgetExhausted) {
    throw ResourceLimit("node budget exhausted while searching for " + describe(red));
  }
  if (red_hit.found()) return {ArrowVerdict::Kind::kContainsRed, std::move(red_hit.embedding)};
  auto blue_hit = find_embedding(complement(host), blue, opts);
  if (blue_hit.status == DetectStatus::kBudgetExhausted) {
    throw ResourceLimit("node budget exhausted while searching complement for " + describe(blue));
  }
  if (blue_hit.found()) {
    return {ArrowVerdict::Kind::kComplementContainsBlue, std::move(blue_hit.embedding)};
  }
  return {ArrowVerdict::Kind::kValidCounterexample, std::nullopt};
}

}  // namespace rgl
