#pragma once

#include "rgl/graph.hpp"

namespace rgl {

struct ChromaticData {
  int chi;
  /// Minimum colour-class size over all proper chi-colourings.
  int surplus;
  friend bool operator==(const ChromaticData&, const ChromaticData&) = default;
};

inline constexpr int kDefaultChromaticOrderCap = 20;

/// Exact chromatic number and chromatic surplus by backtracking. Throws
/// ResourceLimit when g.order() exceeds `order_cap`, InvalidArgument on the
/// empty graph.
ChromaticData chromatic_data(const Graph& g, int order_cap = kDefaultChromaticOrderCap);

}  // namespace rgl
