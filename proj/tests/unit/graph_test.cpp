#include <gtest/gtest.h>

#include "lapspec/canonical.hpp"
#include "lapspec/graph.hpp"
#include "oracles.hpp"

namespace lapspec {
namespace {

Graph K(int k) { return make_named(Family::kComplete, k); }
Graph E(int k) { return make_named(Family::kEmpty, k); }
Graph P(int k) { return make_named(Family::kPath, k); }
Graph C(int k) { return make_named(Family::kCycle, k); }
Graph S(int k) { return make_named(Family::kStar, k); }

bool iso(const Graph& a, const Graph& b) { return oracle::isomorphic(a, b); }

TEST(Families, StarFour) {
  const Graph s = S(4);
  EXPECT_EQ(s.order(), 4);
  EXPECT_EQ(s.edge_count(), 3);
  int max_degree = 0;
  for (int v = 0; v < 4; ++v) max_degree = std::max(max_degree, s.degree(v));
  EXPECT_EQ(max_degree, 3);
  const int parts[] = {3, 1};
  EXPECT_TRUE(iso(s, complete_multipartite(parts)));
}

TEST(Families, DegenerateOrderOne) {
  EXPECT_EQ(K(1), P(1));
  EXPECT_EQ(K(1), E(1));
  EXPECT_EQ(K(1).edge_count(), 0);
}

TEST(Families, Butterfly) {
  const Graph f = make_named(Family::kFriendship, 2);
  EXPECT_EQ(f.order(), 5);
  EXPECT_EQ(f.edge_count(), 6);
  EXPECT_TRUE(iso(f, join(K(1), disjoint_union(K(2), K(2)))));
}

TEST(Families, Sizes) {
  EXPECT_EQ(K(5).edge_count(), 10);
  EXPECT_EQ(P(5).edge_count(), 4);
  EXPECT_EQ(C(5).edge_count(), 5);
  EXPECT_EQ(E(5).edge_count(), 0);
  const int parts[] = {1, 1, 2};
  EXPECT_EQ(complete_multipartite(parts).edge_count(), 5);
}

TEST(Families, DomainErrors) {
  EXPECT_THROW(make_named(Family::kCycle, 2), GraphError);
  EXPECT_THROW(make_named(Family::kComplete, 0), GraphError);
  EXPECT_THROW(make_named(Family::kPath, -1), GraphError);
  EXPECT_THROW(make_named(Family::kFriendship, 0), GraphError);
  EXPECT_THROW(make_named(Family::kComplete, 65), GraphError);
  EXPECT_THROW(complete_multipartite(std::vector<int>{2, 0}), GraphError);
}

TEST(Construction, RejectsLoopsAndAsymmetry) {
  const std::uint64_t loop[] = {1};
  EXPECT_THROW(Graph::from_rows(loop), GraphError);
  const std::uint64_t asym[] = {2, 0};
  EXPECT_THROW(Graph::from_rows(asym), GraphError);
  const std::uint64_t stray[] = {4, 0};
  EXPECT_THROW(Graph::from_rows(stray), GraphError);
  EXPECT_THROW(GraphBuilder(3).add_edge(1, 1), GraphError);
  EXPECT_THROW(GraphBuilder(3).add_edge(0, 3), GraphError);
}

TEST(Union, Examples) {
  const Graph a = disjoint_union(K(1), K(2));
  EXPECT_EQ(a.order(), 3);
  EXPECT_EQ(a.edge_count(), 1);
  EXPECT_FALSE(is_connected(a));

  const Graph b = disjoint_union(K(2), K(2));
  EXPECT_EQ(b.order(), 4);
  EXPECT_EQ(b.edge_count(), 2);

  EXPECT_TRUE(iso(disjoint_union(K(1), K(3)), complement(S(4))));
}

TEST(Union, RejectsOversize) {
  EXPECT_THROW(disjoint_union(E(40), E(30)), GraphError);
  EXPECT_NO_THROW(disjoint_union(E(40), E(24)));
}

TEST(Join, Examples) {
  EXPECT_TRUE(iso(join(K(1), E(3)), S(4)));
  const Graph diamond = join(K(2), E(2));
  EXPECT_EQ(diamond.edge_count(), 5);
  EXPECT_EQ(join(K(1), K(1)), K(2));
}

TEST(Join, LabelsFirstOperandFirst) {
  const Graph g = join(P(3), E(2));
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(3, 4));
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 5; ++v) EXPECT_TRUE(g.adjacent(u, v));
  }
}

TEST(Complement, Examples) {
  EXPECT_TRUE(iso(complement(C(4)), disjoint_union(K(2), K(2))));
  EXPECT_EQ(complement(K(5)), E(5));
  const Graph ladder = cartesian_product(P(2), P(3));
  const Graph q = complement(ladder);
  EXPECT_EQ(q.edge_count(), 15 - 7);
  EXPECT_TRUE(is_connected(q));
}

TEST(Cartesian, Examples) {
  const Graph ladder = cartesian_product(P(2), P(3));
  EXPECT_EQ(ladder.order(), 6);
  EXPECT_EQ(ladder.edge_count(), 7);
  EXPECT_TRUE(iso(cartesian_product(K(2), K(2)), C(4)));
  const Graph g = join(P(3), E(2));
  EXPECT_EQ(cartesian_product(K(1), g), g);
  EXPECT_EQ(cartesian_product(g, K(1)), g);
}

TEST(Cartesian, AdjacencyRule) {
  const Graph a = P(3), b = C(4);
  const Graph g = cartesian_product(a, b);
  const int nb = b.order();
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < nb; ++y2) {
          const bool expected = (x1 == x2 && b.adjacent(y1, y2)) || (y1 == y2 && a.adjacent(x1, x2));
          EXPECT_EQ(g.adjacent(x1 * nb + y1, x2 * nb + y2), expected);
        }
  EXPECT_THROW(cartesian_product(E(9), E(8)), GraphError);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(C(5)));
  EXPECT_FALSE(is_connected(disjoint_union(K(2), K(2))));
  EXPECT_TRUE(is_connected(join(E(3), E(4))));
  EXPECT_TRUE(is_connected(K(1)));
  const auto comps = connected_components(disjoint_union(P(2), disjoint_union(K(1), K(3))));
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[1], std::vector<int>{2});
  EXPECT_EQ(comps[2], (std::vector<int>{3, 4, 5}));
}

TEST(Relabel, InducedAndRelabeled) {
  const Graph p = P(4);
  const Graph r = p.relabeled(std::vector<int>{3, 2, 1, 0});
  EXPECT_EQ(r, p);
  const Graph s = p.induced(std::vector<int>{0, 1, 3});
  EXPECT_EQ(s.edge_count(), 1);
  EXPECT_THROW(p.relabeled(std::vector<int>{0, 0, 1, 2}), GraphError);
}

// Random property checks with a fixed seed.

TEST(GraphProperties, JoinIsComplementOfUnionOfComplements) {
  oracle::GraphGen gen(11);
  for (int t = 0; t < 300; ++t) {
    const Graph a = gen.random(gen.order(1, 7)), b = gen.random(gen.order(1, 7));
    EXPECT_EQ(join(a, b), complement(disjoint_union(complement(a), complement(b))));
  }
}

TEST(GraphProperties, ComplementInvolutionAndEdgeCount) {
  oracle::GraphGen gen(12);
  for (int t = 0; t < 300; ++t) {
    const int n = gen.order(1, 12);
    const Graph g = gen.random(n);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(complement(g).edge_count(), n * (n - 1) / 2 - g.edge_count());
  }
}

TEST(GraphProperties, UnionAndJoinCommuteUpToIsomorphism) {
  oracle::GraphGen gen(13);
  for (int t = 0; t < 200; ++t) {
    const Graph a = gen.random(gen.order(1, 5)), b = gen.random(gen.order(1, 5));
    EXPECT_EQ(canonical_form(disjoint_union(a, b)), canonical_form(disjoint_union(b, a)));
    EXPECT_EQ(canonical_form(join(a, b)), canonical_form(join(b, a)));
  }
}

TEST(GraphProperties, CartesianEdgeCount) {
  oracle::GraphGen gen(14);
  for (int t = 0; t < 300; ++t) {
    const Graph a = gen.random(gen.order(1, 8)), b = gen.random(gen.order(1, 8));
    const Graph g = cartesian_product(a, b);
    EXPECT_EQ(g.order(), a.order() * b.order());
    EXPECT_EQ(g.edge_count(), a.order() * b.edge_count() + b.order() * a.edge_count());
  }
}

TEST(GraphProperties, ConnectivityMatchesDfs) {
  oracle::GraphGen gen(15);
  for (int t = 0; t < 500; ++t) {
    const Graph g = gen.random(gen.order(1, 20), 0.15);
    EXPECT_EQ(is_connected(g), oracle::connected_by_dfs(g));
  }
}

}  // namespace
}  // namespace lapspec
