#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rgl/detectors.hpp"
#include "rgl/graph.hpp"
#include "rgl/pattern.hpp"

namespace rgl {

/// Every connected graph on `order` vertices.
struct AnyConnected {
  int order;
  friend bool operator==(const AnyConnected&, const AnyConnected&) = default;
};

/// Every K_1 + F with |F| = f_order.
struct AnyJoinOne {
  int f_order;
  friend bool operator==(const AnyJoinOne&, const AnyJoinOne&) = default;
};

/// What the complement of a witness must avoid. The symbolic forms are
/// checked by sufficient structural criteria on the complement:
///   AnyConnected{h}: every component has fewer than h vertices.
///   AnyJoinOne{f}:   maximum degree at most f - 1.
using BlueTarget = std::variant<Pattern, AnyConnected, AnyJoinOne>;

std::string describe(const BlueTarget& blue);

enum class StepOutcome { kPass, kFail, kInconclusive };

struct TranscriptStep {
  std::string name;
  StepOutcome outcome = StepOutcome::kPass;
  std::string detail;
  friend bool operator==(const TranscriptStep&, const TranscriptStep&) = default;
};

struct Certificate {
  Graph witness;
  Pattern red_avoided = Pattern::clique(1);
  BlueTarget blue_avoided = AnyConnected{1};
  /// Always witness.order() + 1: a verified certificate shows r >= this.
  long long claimed_bound = 0;
  std::string construction_tag;
  /// Construction inputs, e.g. {"p", 3}, {"a2", 2}.
  std::vector<std::pair<std::string, long long>> parameters;
  /// Vertex blocks of the construction (one per joined copy); empty when the
  /// construction has no natural partition.
  std::vector<std::vector<int>> construction_parts;
  std::vector<TranscriptStep> transcript;
  bool pass = false;
};

/// Complete (p-1)-partite graph with parts of size h_order-1; its
/// complement (p-1) K_{h_order-1} has no connected h_order-vertex subgraph.
Certificate burr_witness(int p, int h_order);

/// A triangle-free degree-regular graph on `order` vertices.
///   order even: bipartite circulant on two sides of order/2.
///   degree even (order odd): circulant on Z_order with connection set
///   {+-k, ..., +-(2k-1)}, k = degree/2, which needs order >= 3 degree - 2.
/// Rejects odd order with odd degree, degree >= order, and the odd-order
/// case below the margin.
Graph regular_triangle_free(int order, int degree);

/// Which construction regular_triangle_free(order, degree) uses:
/// "edgeless", "bipartite-circulant" or "sidorenko-circulant".
std::string regular_triangle_free_method(int order, int degree);

/// (p-1) copies of an (a2-1)-regular triangle-free graph L, all cross edges
/// present. L has order f + a2 - 1 when that or a2 - 1 is even, otherwise
/// f + a2 - 2 (bipartite). Avoids K_p(1, a2, ..., a2) in red; the
/// complement has maximum degree at most f - 1, so no K_1 + F with |F| = f.
Certificate multipartite_k1_witness(int p, int a2, int f_order);

/// gamma1 joined with an (a2-1)-regular bipartite graph on f + a2 - 1
/// vertices (f + a2 - 2 when that is odd). `parts` is a_1 <= ... <= a_p with
/// a_1 = 1; gamma1 should avoid K_{p-1}(a_1..a_{p-1}) and have complement
/// free of every K_1 + F, |F| = f. The transcript records that the bipartite
/// half contains no K_{s,t} with s + t >= a2 + 1.
Certificate stacked_join_witness(const Graph& gamma1, const std::vector<int>& parts, int f_order);

struct VerifyOptions {
  DetectOptions detect;
  /// Replaces a symbolic blue target with a concrete pattern.
  std::optional<Pattern> concrete_blue;
};

/// Re-checks red absence (detector), blue absence in the complement
/// (criterion or detector) and the bound arithmetic. Fills the transcript
/// and pass flag. A detector budget overrun is recorded as inconclusive and
/// fails the certificate.
Certificate verify_certificate(Certificate cert, const VerifyOptions& opts = {});

/// Whether the bipartite graph g contains K_{s,t} (s on either side).
bool contains_complete_bipartite(const Graph& g, int s, int t);

std::string to_string(StepOutcome o);

}  // namespace rgl
