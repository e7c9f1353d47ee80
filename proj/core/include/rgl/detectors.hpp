#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rgl/graph.hpp"
#include "rgl/pattern.hpp"

namespace rgl {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr long long kDefaultNodeBudget = 100'000'000;

/// kDefaultNodeBudget unless the RGL_NODE_BUDGET environment variable holds a
/// positive integer.
long long default_node_budget();

struct DetectOptions {
  long long node_budget = default_node_budget();
  /// Complete multipartite patterns in larger hosts whose complement is
  /// disconnected are solved factor by factor. Off forces plain search.
  bool join_split = true;
};

/// A pattern placed in a host: one host-vertex list per role of
/// pattern_roles(pattern), listed in build_pattern() vertex order.
struct Embedding {
  Pattern pattern;
  std::vector<std::vector<int>> roles;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

enum class DetectStatus { kFound, kAbsent, kBudgetExhausted };

struct Detection {
  DetectStatus status = DetectStatus::kAbsent;
  std::optional<Embedding> embedding;
  long long nodes = 0;

  bool found() const { return status == DetectStatus::kFound; }
  bool absent() const { return status == DetectStatus::kAbsent; }
};

/// Re-checks an embedding against the host alone: role sizes, label range,
/// disjointness, and every edge of build_pattern(pattern). On failure the
/// reason is written to `why` when given.
bool validate_embedding(const Graph& host, const Embedding& e, std::string* why = nullptr);

/// Decides whether `host` contains `pattern` as a (not necessarily induced)
/// subgraph. Vertices are tried in ascending label order, so the result is
/// reproducible for a fixed labelling. Every pattern variant is supported;
/// JoinOne and Union route through the packing search.
Detection find_embedding(const Graph& host, const Pattern& pattern, const DetectOptions& opts = {});

/// K_1 + n*h inside host: an apex v and n disjoint copies of h in N(v).
/// h = K_2 is solved per apex by maximum matching; other h by exact
/// backtracking packing.
Detection find_k1_packing(const Graph& host, const Graph& h, int n, const DetectOptions& opts = {});

/// Same question answered by backtracking packing for every h, including
/// K_2. Exposed so the matching route can be cross-checked.
Detection find_k1_packing_backtracking(const Graph& host, const Graph& h, int n,
                                       const DetectOptions& opts = {});

/// Number of p-vertex cliques, counted with pivoting (each clique is
/// represented once as held vertices plus a subset of pivots).
BigInt count_cliques(const Graph& host, int p);

/// Size of a largest clique.
int clique_number(const Graph& g);

struct ArrowVerdict {
  enum class Kind { kContainsRed, kComplementContainsBlue, kValidCounterexample };
  Kind kind;
  std::optional<Embedding> embedding;

  bool counterexample() const { return kind == Kind::kValidCounterexample; }
};

/// Classifies host against the pair (red in host, blue in complement). A
/// valid counterexample certifies r(red, blue) > host.order(). Throws
/// ResourceLimit when either detector runs out of budget.
ArrowVerdict arrowing_counterexample_check(const Graph& host, const Pattern& red,
                                           const Pattern& blue, const DetectOptions& opts = {});

}  // namespace rgl
