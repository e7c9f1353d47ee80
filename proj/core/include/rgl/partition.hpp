#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rgl/detectors.hpp"
#include "rgl/graph.hpp"

namespace rgl {

/// Ordered disjoint parts covering the vertex set, with per-part internal
/// edge counts and maximum internal degrees.
struct VertexPartition {
  std::vector<std::vector<int>> parts;
  std::vector<long long> internal_edges;
  std::vector<int> internal_degree_max;

  int part_count() const { return static_cast<int>(parts.size()); }
  long long total_internal_edges() const;
};

/// Validates that `parts` partition V(g) (empty parts allowed) and fills the
/// per-part counts. Each part is sorted.
VertexPartition make_partition(const Graph& g, std::vector<std::vector<int>> parts);

struct Majorization {
  VertexPartition partition;
  /// v_1, ..., v_r; they always form a clique.
  std::vector<int> pivots;
};

/// Repeatedly takes the vertex of maximum degree inside the remaining set R
/// (least label on ties), splits off R \ N(v) as the next part and recurses
/// into R n N(v) until nothing is left.
Majorization degree_majorization(const Graph& g);

/// First-improvement local search: scanning vertices by label and targets by
/// part index, moves v from V_i to V_j whenever d_{V_j}(v) < d_{V_i}(v). Each
/// move lowers the internal edge count, so at most e(g) moves happen. On
/// return every v in V_i has d_{V_i}(v) <= d_{V_j}(v) for all j.
VertexPartition refine_min_internal(const Graph& g, const VertexPartition& start, int* moves = nullptr);

/// True when every v in V_i has d_{V_i}(v) <= d_{V_j}(v) for all j != i.
bool is_locally_optimal(const Graph& g, const VertexPartition& partition);

struct StabilityCheck {
  std::string name;
  bool pass = false;
  /// Worst observed value and the bound it is compared with.
  double value = 0;
  double bound = 0;
};

struct StabilityReport {
  double epsilon = 0;
  /// Partition has p - 1 parts.
  int p = 0;
  int order = 0;
  /// gamma = min{1/(2p^2), eps/2}; eta = p^{-10p} eps (recorded, not enforced).
  double gamma = 0;
  double eta_log10 = 0;
  /// Minimum degree of g against (1 - 1/(p-1) - gamma) N.
  int min_degree = 0;
  double min_degree_required = 0;
  bool min_degree_hypothesis = false;
  /// internal edges, part balance, cross density, local optimality, and the
  /// internal degree ceiling a2 - 1, in that order.
  std::vector<StabilityCheck> checks;

  bool all_pass() const;
};

StabilityReport stability_report(const Graph& g, const VertexPartition& partition, double epsilon, int a2);

/// s^{p-2} (s^2 - z): the least number of K_p in a spanning subgraph of
/// K_p(s) missing z cross edges. Rejects z >= s^2.
BigInt clique_count_lower(int p, int s, long long z);

struct CliqueCountCheck {
  long long z = 0;
  /// False when z >= s^2 (the bound says nothing).
  bool applicable = false;
  BigInt bound = 0;
  BigInt count = 0;
  bool pass = false;
};

/// g must be a spanning subgraph of K_p(s) with part i on labels
/// [i s, (i+1) s). Compares the K_p count with clique_count_lower.
CliqueCountCheck lemma1_check(const Graph& g, int p, int s);

/// Greedy descent for K_p(a_1, ..., a_{p-1}, last_part_cap): at each level
/// picks the a_i-set in the current candidate pool whose common
/// neighbourhood holds the most cliques on the remaining part count
/// (lexicographically first on ties), then recurses into that neighbourhood.
/// A miss means only that this procedure found nothing. Throws ResourceLimit
/// when the number of examined subsets exceeds the budget.
std::optional<Embedding> supersaturated_embed(const Graph& g, const std::vector<int>& parts, int last_part_cap,
                                              const DetectOptions& opts = {});

struct AuditCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ProofAudit {
  int order = 0;
  int p = 0;
  int h = 0;
  long long n = 0;
  long long ell = 0;
  /// 2m = N (l - h); m itself may be a half-integer.
  long long two_m = 0;
  double m = 0;
  long long z = 0;
  double s_threshold = 0;  // sqrt(2m)
  double t_threshold = 0;  // (2 + sqrt 2) sqrt(m) + l - h
  /// |V_i| - N/(p-1) per part.
  std::vector<double> size_deviation;
  double size_deviation_bound = 0;  // 2 sqrt(m)
  std::vector<AuditCheck> checks;
  /// Hypotheses the derivation relies on, evaluated on (g, partition).
  bool kp_free = false;
  bool locally_optimal = false;
  bool parts_within_degree_bound = false;

  bool all_pass() const;
};

/// Recomputes the counting quantities of the goodness argument for a
/// concrete graph and (p-1)-part partition. All inequalities are decided in
/// exact integer arithmetic; nothing is asserted about hypotheses.
ProofAudit proof_audit(const Graph& g, int p, int h_order, long long n, long long ell,
                       const VertexPartition& partition);

}  // namespace rgl
