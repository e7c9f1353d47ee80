#include <gtest/gtest.h>

#include <random>

#include "rgl/constructors.hpp"
#include "rgl/detectors.hpp"
#include "rgl/error.hpp"
#include "rgl/graph_io.hpp"
#include "rgl/matching.hpp"
#include "rgl/oracle.hpp"
#include "support/reference.hpp"

namespace rgl {
namespace {

using testing::ref_contains;

Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph octahedron() {
  const int parts[] = {2, 2, 2};
  return complete_multipartite(parts);
}

TEST(FindEmbedding, Examples) {
  EXPECT_TRUE(find_embedding(cycle_graph(5), Pattern::clique(3)).absent());
  const int k33[] = {3, 3};
  EXPECT_TRUE(find_embedding(complete_multipartite(k33), Pattern::complete_multipartite({2, 2})).found());
  const Detection d = find_embedding(octahedron(), Pattern::complete_multipartite({1, 2, 2}));
  ASSERT_TRUE(d.found());
  EXPECT_TRUE(validate_embedding(octahedron(), *d.embedding));
}

TEST(FindEmbedding, AgreesWithReferenceSearch) {
  const std::vector<Pattern> patterns = {
      Pattern::clique(3),
      Pattern::clique(4),
      Pattern::complete_multipartite({1, 2}),
      Pattern::complete_multipartite({2, 2}),
      Pattern::complete_multipartite({1, 1, 2}),
      Pattern::complete_multipartite({1, 2, 2}),
      Pattern::book(2, 4),
      Pattern::book(1, 3),
      Pattern::star(3),
      Pattern::fan(2),
      Pattern::join_one(path_graph(3), 1),
      Pattern::union_of(complete_graph(2), 3),
      Pattern::union_of(path_graph(3), 2),
      Pattern::explicit_graph(cycle_graph(5)),
      Pattern::explicit_graph(path_graph(4)),
  };
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph host = random_graph(n, 0.3 + 0.1 * static_cast<double>(trial % 5), rng);
    for (const Pattern& p : patterns) {
      const Detection d = find_embedding(host, p);
      ASSERT_NE(d.status, DetectStatus::kBudgetExhausted);
      EXPECT_EQ(d.found(), ref_contains(host, build_pattern(p))) << describe(p) << " in " << to_graph6(host);
      if (d.found()) {
        std::string why;
        EXPECT_TRUE(validate_embedding(host, *d.embedding, &why)) << why;
      }
    }
  }
}

TEST(FindEmbedding, CliqueMatchesCountOnAllSmallGraphs) {
  for (int n = 1; n <= 7; ++n) {
    for_each_graph(n, EnumerationMode::kIsomorphFree, [&](const Graph& g) {
      for (int p = 1; p <= 5; ++p) {
        EXPECT_EQ(find_embedding(g, Pattern::clique(p)).found(), count_cliques(g, p) > 0);
      }
      return true;
    });
  }
}

TEST(FindEmbedding, DeterministicLeastLabels) {
  const Detection a = find_embedding(complete_graph(6), Pattern::clique(3));
  ASSERT_TRUE(a.found());
  EXPECT_EQ(a.embedding->roles, (std::vector<std::vector<int>>{{0, 1, 2}}));
  const Detection b = find_embedding(complete_graph(6), Pattern::clique(3));
  EXPECT_EQ(*a.embedding, *b.embedding);
}

TEST(FindEmbedding, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(103);
  const std::vector<Pattern> patterns = {Pattern::clique(3), Pattern::complete_multipartite({1, 2, 2}),
                                         Pattern::fan(2), Pattern::book(2, 4)};
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(8, 0.4, rng);
    for (const Pattern& p : patterns) {
      const bool before = find_embedding(g, p).found();
      Graph h = g;
      const int u = static_cast<int>(rng() % 8);
      const int v = (u + 1 + static_cast<int>(rng() % 7)) % 8;
      h.add_edge(u, v);
      if (before) EXPECT_TRUE(find_embedding(h, p).found());
    }
  }
}

TEST(FindEmbedding, BudgetExhaustionIsDistinctFromAbsent) {
  DetectOptions tiny;
  tiny.node_budget = 3;
  const Detection d = find_embedding(complete_multipartite(std::vector<int>{6, 6, 6}),
                                     Pattern::complete_multipartite({3, 3, 4}), tiny);
  EXPECT_EQ(d.status, DetectStatus::kBudgetExhausted);
  EXPECT_FALSE(d.found());
  EXPECT_FALSE(d.absent());
}

// Hosts that are joins of random factors exercise the per-factor split; the
// result must agree with the single search over the whole host.
TEST(FindEmbedding, JoinSplitAgreesWithDirectSearch) {
  std::mt19937_64 rng(107);
  const std::vector<Pattern> patterns = {
      Pattern::complete_multipartite({1, 2, 2}), Pattern::complete_multipartite({1, 3, 3}),
      Pattern::complete_multipartite({2, 2, 3}), Pattern::complete_multipartite({1, 2, 2, 2}),
      Pattern::complete_multipartite({1, 1, 4}), Pattern::complete_multipartite({3, 3, 3})};
  DetectOptions split;
  DetectOptions direct;
  direct.join_split = false;
  int found = 0;
  int absent = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Graph host(0);
    const int factors = 2 + static_cast<int>(rng() % 2);
    for (int f = 0; f < factors; ++f) {
      const int n = (factors == 2 ? 12 : 8) + static_cast<int>(rng() % 5);
      host = join(host, random_graph(n, 0.15 + 0.05 * static_cast<double>(rng() % 4), rng));
    }
    ASSERT_GE(host.order(), 24);
    for (const Pattern& p : patterns) {
      const Detection a = find_embedding(host, p, split);
      const Detection b = find_embedding(host, p, direct);
      ASSERT_NE(a.status, DetectStatus::kBudgetExhausted);
      ASSERT_NE(b.status, DetectStatus::kBudgetExhausted);
      EXPECT_EQ(a.found(), b.found()) << describe(p) << " in " << to_graph6(host);
      if (a.found()) {
        EXPECT_TRUE(validate_embedding(host, *a.embedding));
        ++found;
      } else {
        ++absent;
      }
    }
  }
  EXPECT_GT(found, 0);
  EXPECT_GT(absent, 0);
}

TEST(ValidateEmbedding, RejectsBrokenMaps) {
  const Graph c4 = cycle_graph(4);
  std::string why;
  EXPECT_FALSE(validate_embedding(c4, Embedding{Pattern::clique(3), {{0, 1, 2}}}, &why));
  EXPECT_NE(why.find("missing host edge"), std::string::npos);
  EXPECT_FALSE(validate_embedding(c4, Embedding{Pattern::clique(2), {{0, 0}}}, &why));
  EXPECT_FALSE(validate_embedding(c4, Embedding{Pattern::clique(2), {{0, 9}}}, &why));
  EXPECT_FALSE(validate_embedding(c4, Embedding{Pattern::clique(2), {{0}}}, &why));
  EXPECT_TRUE(validate_embedding(c4, Embedding{Pattern::clique(2), {{0, 1}}}));
}

TEST(K1Packing, Examples) {
  EXPECT_TRUE(find_k1_packing(complete_graph(5), complete_graph(2), 2).found());
  const int k23[] = {2, 3};
  EXPECT_TRUE(find_k1_packing(complete_multipartite(k23), complete_graph(2), 1).absent());
  const Graph two_k4 = union_copies(complete_graph(4), 2);
  EXPECT_TRUE(find_k1_packing(complement(two_k4), complete_graph(2), 2).absent());
  EXPECT_THROW(find_k1_packing(complete_graph(3), complete_graph(2), 0), InvalidArgument);
}

TEST(K1Packing, MatchingAndBacktrackingAgreeOnAllGraphsUpToOrder8) {
  const Graph k2 = complete_graph(2);
  for (int n = 1; n <= 8; ++n) {
    for_each_graph(n, EnumerationMode::kIsomorphFree, [&](const Graph& g) {
      for (int copies = 1; copies <= 3; ++copies) {
        const Detection fast = find_k1_packing(g, k2, copies);
        const Detection slow = find_k1_packing_backtracking(g, k2, copies);
        EXPECT_EQ(fast.found(), slow.found()) << to_graph6(g) << " n=" << copies;
        if (fast.found()) EXPECT_TRUE(validate_embedding(g, *fast.embedding));
        if (slow.found()) EXPECT_TRUE(validate_embedding(g, *slow.embedding));
      }
      return true;
    });
  }
}

TEST(K1Packing, GeneralHAgreesWithReference) {
  std::mt19937_64 rng(109);
  const std::vector<std::pair<Graph, int>> cases = {
      {path_graph(3), 1}, {path_graph(3), 2}, {complete_graph(3), 1}, {edgeless_graph(2), 2}};
  for (int trial = 0; trial < 150; ++trial) {
    const Graph host = random_graph(4 + static_cast<int>(rng() % 5), 0.55, rng);
    for (const auto& [h, copies] : cases) {
      const Detection d = find_k1_packing(host, h, copies);
      EXPECT_EQ(d.found(), ref_contains(host, build_pattern(Pattern::join_one(h, copies))));
    }
  }
}

// Size of a maximum matching by trying every edge subset of a tiny graph.
int ref_matching_size(const Graph& g) {
  const auto edges = g.edges();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << edges.size()); ++mask) {
    VertexSet used;
    int size = 0;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      const auto [u, v] = edges[i];
      if (used.contains(u) || used.contains(v)) ok = false;
      used.insert(u);
      used.insert(v);
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

TEST(Matching, MaximumOnRandomGraphs) {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 7), 0.35, rng);
    if (g.edge_count() > 16) continue;
    const auto m = maximum_matching(g);
    VertexSet used;
    for (auto [u, v] : m) {
      EXPECT_TRUE(g.has_edge(u, v));
      EXPECT_FALSE(used.contains(u) || used.contains(v));
      used.insert(u);
      used.insert(v);
    }
    EXPECT_EQ(static_cast<int>(m.size()), ref_matching_size(g)) << to_graph6(g);
  }
}

TEST(Matching, OddCyclesNeedBlossoms) {
  EXPECT_EQ(maximum_matching(cycle_graph(5)).size(), 2U);
  EXPECT_EQ(maximum_matching(cycle_graph(9)).size(), 4U);
  // Two triangles joined by a path: perfect matching exists only through a blossom.
  Graph g(6);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}}) g.add_edge(u, v);
  EXPECT_EQ(maximum_matching(g).size(), 3U);
  EXPECT_EQ(maximum_matching(complete_graph(40)).size(), 20U);
}

TEST(Matching, RestrictedToSubset) {
  const Graph g = complete_graph(6);
  const auto m = maximum_matching(g, VertexSet{0, 1, 2});
  ASSERT_EQ(m.size(), 1U);
  EXPECT_LT(m[0].first, 3);
  EXPECT_LT(m[0].second, 3);
}

TEST(CountCliques, Examples) {
  EXPECT_EQ(count_cliques(complete_graph(4), 3), 4);
  EXPECT_EQ(count_cliques(octahedron(), 3), 8);
  Graph oct = octahedron();
  oct.remove_edge(0, 2);
  EXPECT_EQ(count_cliques(oct, 3), 6);
  EXPECT_EQ(count_cliques(complete_graph(60), 30), BigInt("118264581564861424"));
  EXPECT_EQ(count_cliques(edgeless_graph(5), 1), 5);
}

TEST(CountCliques, AgreesWithReference) {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(3 + static_cast<int>(rng() % 9), 0.5, rng);
    for (int p = 1; p <= 5; ++p) EXPECT_EQ(count_cliques(g, p), testing::ref_count_cliques(g, p));
    EXPECT_EQ(clique_number(g), testing::ref_clique_number(g));
  }
}

TEST(Arrowing, Examples) {
  const int k44[] = {4, 4};
  EXPECT_TRUE(arrowing_counterexample_check(complete_multipartite(k44), Pattern::clique(3), Pattern::fan(2))
                  .counterexample());
  const ArrowVerdict red = arrowing_counterexample_check(complete_graph(5), Pattern::clique(3), Pattern::star(9));
  EXPECT_EQ(red.kind, ArrowVerdict::Kind::kContainsRed);
  ASSERT_TRUE(red.embedding);
  EXPECT_TRUE(arrowing_counterexample_check(cycle_graph(4), Pattern::clique(3), Pattern::star(2)).counterexample());
  const ArrowVerdict blue = arrowing_counterexample_check(edgeless_graph(3), Pattern::clique(3), Pattern::star(2));
  EXPECT_EQ(blue.kind, ArrowVerdict::Kind::kComplementContainsBlue);
}

TEST(Arrowing, BudgetExhaustionRaises) {
  DetectOptions tiny;
  tiny.node_budget = 2;
  EXPECT_THROW(arrowing_counterexample_check(complete_multipartite(std::vector<int>{6, 6, 6}),
                                             Pattern::complete_multipartite({3, 3, 4}), Pattern::clique(2), tiny),
               ResourceLimit);
}

}  // namespace
}  // namespace rgl
