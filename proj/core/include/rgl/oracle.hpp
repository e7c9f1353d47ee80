#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rgl/detectors.hpp"
#include "rgl/graph.hpp"
#include "rgl/pattern.hpp"

namespace rgl {

enum class EnumerationMode { kAllLabeled, kIsomorphFree };

inline constexpr int kIsomorphFreeOrderCap = 10;
inline constexpr int kAllLabeledOrderCap = 7;

/// Streams every graph of the given order. All-labelled mode walks the
/// 2^C(n,2) edge masks (bit i is the i-th pair in graph6 column order);
/// isomorph-free mode yields one representative per class by canonical
/// augmentation (vertex addition with a canonical-deletion test). Order is
/// deterministic in both modes. `visit` returns false to stop early.
/// Returns the number of graphs visited.
long long for_each_graph(int order, EnumerationMode mode,
                         const std::function<bool(const Graph&)>& visit);

std::vector<Graph> enumerate_graphs(int order, EnumerationMode mode);
long long count_graphs(int order, EnumerationMode mode);

struct OracleOptions {
  EnumerationMode mode = EnumerationMode::kIsomorphFree;
  DetectOptions detect;
  /// Worker threads for isomorph-free sweeps; results do not depend on it.
  int jobs = 1;
  /// Optional side channel for progress lines.
  std::function<void(const std::string&)> progress;
};

struct ArrowResult {
  /// True when every graph of the order contains red or has blue in its
  /// complement.
  bool arrows = false;
  /// First failing graph in enumeration order when !arrows.
  std::optional<Graph> counterexample;
  long long graphs_checked = 0;
};

/// Throws ResourceLimit when a detector exhausts its budget, InvalidArgument
/// above the enumeration caps.
ArrowResult arrow_check(int order, const Pattern& red, const Pattern& blue,
                        const OracleOptions& opts = {});

struct SearchOutcome {
  enum class Status { kExact, kLowerBound, kInconclusive };
  Status status = Status::kInconclusive;
  /// Exact value, or the certified lower bound r >= value.
  int value = 0;
  /// Orders whose arrow check ran to completion.
  std::vector<int> checked_orders;
  /// (N, graph) pairs, each graph certifying r > N.
  std::vector<std::pair<int, Graph>> counterexamples;
  std::string note;
};

/// Runs arrow checks for N = 1, 2, ... up to n_max. The first order that
/// arrows is the exact value. Reaching n_max without arrowing yields a
/// lower bound of n_max + 1; a detector budget overrun yields
/// kInconclusive.
SearchOutcome ramsey_search(const Pattern& red, const Pattern& blue, int n_max,
                            const OracleOptions& opts = {});

}  // namespace rgl
