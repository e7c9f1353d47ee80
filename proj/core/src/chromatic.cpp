#include "rgl/chromatic.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "rgl/error.hpp"

namespace rgl {

namespace {

// Colours are introduced in order of first use, so vertex 0 always takes
// colour 0 and each colouring is visited once up to colour renaming.
class Colorer {
 public:
  Colorer(const Graph& g, int colors) : g_(g), k_(colors), color_(g.order(), -1) {}

  bool exists() {
    mode_ = Mode::kExists;
    return extend(0, 0);
  }

  int min_class_size() {
    mode_ = Mode::kSurplus;
    best_ = g_.order();
    sizes_.assign(static_cast<std::size_t>(k_), 0);
    extend(0, 0);
    return best_;
  }

 private:
  enum class Mode { kExists, kSurplus };

  bool usable(int v, int c) const {
    const auto& nb = g_.neighbors(v);
    for (int u = nb.first(); u >= 0 && u < v; u = nb.next(u))
      if (color_[u] == c) return false;
    return true;
  }

  bool extend(int v, int used) {
    const int n = g_.order();
    if (mode_ == Mode::kSurplus && used == k_) {
      // Class sizes only grow from here on.
      if (*std::min_element(sizes_.begin(), sizes_.end()) >= best_) return false;
    }
    if (n - v < k_ - used) return false;
    if (v == n) {
      if (used < k_) return false;
      if (mode_ == Mode::kExists) return true;
      best_ = std::min(best_, *std::min_element(sizes_.begin(), sizes_.end()));
      return best_ == 1;
    }
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (!usable(v, c)) continue;
      color_[v] = c;
      if (mode_ == Mode::kSurplus) ++sizes_[c];
      const bool stop = extend(v + 1, std::max(used, c + 1));
      if (mode_ == Mode::kSurplus) --sizes_[c];
      color_[v] = -1;
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
  std::vector<int> sizes_;
  int best_ = 0;
  Mode mode_ = Mode::kExists;
};

}  // namespace

ChromaticData chromatic_data(const Graph& g, int order_cap) {
  if (g.order() < 1) throw InvalidArgument("chromatic data needs a non-empty graph");
  if (g.order() > order_cap) {
    throw ResourceLimit("exact colouring capped at order " + std::to_string(order_cap) +
                        ", got " + std::to_string(g.order()));
  }
  int chi = 1;
  while (!Colorer(g, chi).exists()) ++chi;
  return {chi, Colorer(g, chi).min_class_size()};
}

}  // namespace rgl
