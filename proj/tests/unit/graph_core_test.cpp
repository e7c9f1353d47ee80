#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "rgl/canonical.hpp"
#include "rgl/chromatic.hpp"
#include "rgl/constructors.hpp"
#include "rgl/error.hpp"
#include "rgl/graph.hpp"
#include "rgl/graph_io.hpp"
#include "rgl/pattern.hpp"
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

TEST(VertexSet, IteratesInAscendingOrderAcrossWords) {
  VertexSet s{0, 63, 64, 200, 511};
  EXPECT_EQ(s.size(), 5);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{0, 63, 64, 200, 511}));
  EXPECT_EQ(s.next(64), 200);
  EXPECT_EQ(s.next(511), -1);
  EXPECT_EQ(VertexSet::prefix(70).size(), 70);
  EXPECT_TRUE(VertexSet{}.empty());
  EXPECT_EQ(VertexSet{}.first(), -1);
}

TEST(VertexSet, SetAlgebra) {
  VertexSet a{1, 2, 3}, b{2, 3, 4};
  EXPECT_EQ((a & b), (VertexSet{2, 3}));
  EXPECT_EQ((a | b), (VertexSet{1, 2, 3, 4}));
  EXPECT_EQ((a - b), (VertexSet{1}));
  EXPECT_EQ(a.intersection_size(b), 2);
  EXPECT_TRUE((VertexSet{2}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
}

TEST(Graph, BasicInvariants) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_EQ(g.min_degree(), 0);
  g.remove_edge(1, 0);
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_EQ(Graph(0).order(), 0);
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), InvalidArgument);
  EXPECT_THROW(g.add_edge(0, 3), InvalidArgument);
  EXPECT_THROW(Graph(kMaxOrder + 1), ResourceLimit);
}

TEST(Graph, InducedAndRelabeled) {
  const Graph c5 = cycle_graph(5);
  const std::vector<int> keep{0, 1, 2};
  const Graph p3 = c5.induced(keep);
  EXPECT_EQ(p3.edge_count(), 2);
  const std::vector<int> perm{4, 3, 2, 1, 0};
  EXPECT_TRUE(are_isomorphic(c5, c5.relabeled(perm)));
  EXPECT_EQ(c5.edges_within(VertexSet{0, 1, 2}), 2);
  EXPECT_EQ(c5.edges_between(VertexSet{0}, VertexSet{1, 4}), 2);
}

TEST(BuildPattern, Examples) {
  EXPECT_EQ(build_pattern(Pattern::clique(3)).edge_count(), 3);
  const Graph f2 = build_pattern(Pattern::join_one(complete_graph(2), 2));
  EXPECT_EQ(f2.order(), 5);
  EXPECT_EQ(f2.edge_count(), 6);
  const Graph oct = build_pattern(Pattern::complete_multipartite({2, 2, 2}));
  EXPECT_EQ(oct.order(), 6);
  EXPECT_EQ(oct.edge_count(), 12);
  EXPECT_EQ(testing::ref_count_cliques(oct, 3), 8);
  EXPECT_THROW(Pattern::book(3, 3), InvalidArgument);
}

TEST(BuildPattern, MultipartitePartsNormalized) {
  EXPECT_EQ(Pattern::complete_multipartite({3, 1, 2}), Pattern::complete_multipartite({1, 2, 3}));
}

TEST(BuildPattern, JoinOneCounts) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph h = random_graph(1 + static_cast<int>(rng() % 5), 0.5, rng);
    const int n = 1 + static_cast<int>(rng() % 4);
    const Graph g = build_pattern(Pattern::join_one(h, n));
    EXPECT_EQ(g.order(), 1 + n * h.order());
    EXPECT_EQ(g.edge_count(), n * h.edge_count() + n * h.order());
  }
}

TEST(BuildPattern, BookIsCliqueJoinedToIndependentSet) {
  const Graph b = build_pattern(Pattern::book(2, 5));
  EXPECT_EQ(b.order(), 5);
  // K2 plus 3 pages: 1 + 2*3 edges.
  EXPECT_EQ(b.edge_count(), 7);
  EXPECT_TRUE(are_isomorphic(b, join(complete_graph(2), edgeless_graph(3))));
  EXPECT_TRUE(are_isomorphic(build_pattern(Pattern::star(3)), join(complete_graph(1), edgeless_graph(3))));
}

TEST(Constructors, ComplementExamples) {
  EXPECT_EQ(complement(complete_graph(3)).edge_count(), 0);
  EXPECT_EQ(complement(edgeless_graph(5)), complete_graph(5));
  const Graph c4c = complement(cycle_graph(4));
  EXPECT_EQ(c4c.edge_count(), 2);
  EXPECT_TRUE(c4c.has_edge(0, 2));
  EXPECT_TRUE(c4c.has_edge(1, 3));
}

TEST(Constructors, ComplementIsInvolutive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(static_cast<int>(rng() % 20), 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(complement(g), testing::ref_complement(g));
  }
}

TEST(Constructors, JoinEdgeCount) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph a = random_graph(static_cast<int>(rng() % 8), 0.5, rng);
    const Graph b = random_graph(static_cast<int>(rng() % 8), 0.5, rng);
    EXPECT_EQ(join(a, b).edge_count(),
              a.edge_count() + b.edge_count() + static_cast<long long>(a.order()) * b.order());
  }
  EXPECT_EQ(join(complete_graph(2), complete_graph(3)), complete_graph(5));
  const int k23[] = {2, 3};
  EXPECT_EQ(join(edgeless_graph(2), edgeless_graph(3)), complete_multipartite(k23));
  EXPECT_EQ(join(complete_graph(1), union_copies(complete_graph(2), 2)).edge_count(), 6);
}

TEST(Constructors, CirculantExamples) {
  const int pm1[] = {1, 7};
  const Graph c8 = circulant(8, pm1);
  EXPECT_TRUE(are_isomorphic(c8, cycle_graph(8)));
  const int pm1_3[] = {1, 2};
  EXPECT_TRUE(ref_contains(circulant(3, pm1_3), complete_graph(3)));
  const int k2[] = {2, 3, 7, 8};
  const Graph g = circulant(10, k2);
  EXPECT_EQ(g.min_degree(), 4);
  EXPECT_EQ(g.max_degree(), 4);
  EXPECT_EQ(testing::ref_count_cliques(g, 3), 0);
  const int zero[] = {0, 1};
  EXPECT_THROW(circulant(5, zero), InvalidArgument);
  const int open[] = {1};
  EXPECT_THROW(circulant(5, open), InvalidArgument);
}

TEST(Constructors, SidorenkoCirculantTriangleFreeAboveMargin) {
  for (int k = 1; k <= 4; ++k) {
    for (int mu = 6 * k - 2; mu <= 40; ++mu) {
      const auto set = sidorenko_connection_set(mu, k);
      const Graph g = circulant(mu, set);
      EXPECT_EQ(g.min_degree(), 2 * k) << mu << " " << k;
      EXPECT_EQ(g.max_degree(), 2 * k) << mu << " " << k;
      EXPECT_EQ(testing::ref_count_cliques(g, 3), 0) << mu << " " << k;
    }
  }
}

TEST(Constructors, BipartiteCirculant) {
  const Graph ten = bipartite_circulant(5, 2);
  EXPECT_TRUE(are_isomorphic(ten, cycle_graph(10)));
  EXPECT_TRUE(are_isomorphic(bipartite_circulant(4, 1), union_copies(complete_graph(2), 4)));
  const Graph six = bipartite_circulant(6, 3);
  EXPECT_EQ(six.edge_count(), 18);
  EXPECT_THROW(bipartite_circulant(3, 4), InvalidArgument);
  for (int lambda = 1; lambda <= 12; ++lambda) {
    for (int d = 1; d <= lambda; ++d) {
      const Graph g = bipartite_circulant(lambda, d);
      EXPECT_EQ(g.min_degree(), d);
      EXPECT_EQ(g.max_degree(), d);
      EXPECT_EQ(testing::ref_count_cliques(g, 3), 0);
    }
  }
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_data(complete_graph(3)), (ChromaticData{3, 1}));
  const int k23[] = {2, 3};
  EXPECT_EQ(chromatic_data(complete_multipartite(k23)), (ChromaticData{2, 2}));
  EXPECT_EQ(chromatic_data(cycle_graph(5)), (ChromaticData{3, 1}));
  EXPECT_EQ(chromatic_data(edgeless_graph(4)), (ChromaticData{1, 4}));
  EXPECT_THROW(chromatic_data(complete_graph(25)), ResourceLimit);
}

// Brute force: try every assignment of k colours.
ChromaticData ref_chromatic(const Graph& g) {
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    int best = -1;
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= k;
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      for (int i = 0; i < n; ++i, c /= k) colour[i] = static_cast<int>(c % k);
      bool proper = true;
      for (int u = 0; u < n && proper; ++u)
        for (int v = u + 1; v < n && proper; ++v)
          if (g.has_edge(u, v) && colour[u] == colour[v]) proper = false;
      if (!proper) continue;
      std::vector<int> sizes(static_cast<std::size_t>(k), 0);
      for (int x : colour) ++sizes[x];
      const int smallest = *std::min_element(sizes.begin(), sizes.end());
      if (smallest > 0) best = best < 0 ? smallest : std::min(best, smallest);
    }
    if (best > 0) return {k, best};
  }
  return {0, 0};
}

TEST(Chromatic, MatchesBruteForceOnSmallRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 7), 0.45, rng);
    EXPECT_EQ(chromatic_data(g), ref_chromatic(g)) << to_graph6(g);
  }
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(path_graph(5)), testing::ref_graph6(path_graph(5)));
  EXPECT_EQ(from_graph6("Dhc"), cycle_graph(5));
}

TEST(Graph6, LargeOrderHeader) {
  const Graph g = cycle_graph(100);
  const std::string text = to_graph6(g);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(from_graph6(text), g);
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("C"), ParseError);
  EXPECT_THROW(from_graph6("C~~"), ParseError);
  EXPECT_THROW(from_graph6("C\x01"), ParseError);
}

TEST(Graph6, StreamReaderSkipsBlankLines) {
  std::istringstream in("C~\n\nDhc\n");
  const auto graphs = read_graph6_stream(in);
  ASSERT_EQ(graphs.size(), 2U);
  EXPECT_EQ(graphs[1], cycle_graph(5));
}

TEST(EdgeList, RoundTrip) {
  const Graph g = cycle_graph(6);
  const std::string text = to_edge_list(g);
  EXPECT_EQ(text.rfind("n=6\n", 0), 0U);
  EXPECT_EQ(from_edge_list(text), g);
  EXPECT_THROW(from_edge_list("3 4\n"), ParseError);
  EXPECT_THROW(from_edge_list("n=3\n0 5\n"), ParseError);
}

TEST(Dot, MentionsEveryEdge) {
  const std::string dot = to_dot(path_graph(3), "P");
  EXPECT_NE(dot.find("graph P"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2"), std::string::npos);
}

TEST(Canonical, IsomorphismInvariantForm) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = random_graph(n, 0.5, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_graph6(g), canonical_graph6(g.relabeled(perm)));
    EXPECT_TRUE(are_isomorphic(g, g.relabeled(perm)));
  }
  EXPECT_FALSE(are_isomorphic(path_graph(4), star_graph(3)));
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), union_copies(complete_graph(3), 2)));
}

TEST(Canonical, AutomorphismsOfCycle) {
  const CanonicalLabeling lab = canonical_labeling(to_dense(cycle_graph(5)));
  // Generators of the dihedral group; each must preserve adjacency.
  const DenseGraph d = to_dense(cycle_graph(5));
  for (const auto& perm : lab.automorphisms)
    for (int u = 0; u < 5; ++u)
      for (int v = 0; v < 5; ++v) EXPECT_EQ(d.has_edge(u, v), d.has_edge(perm[u], perm[v]));
}

}  // namespace
}  // namespace rgl
