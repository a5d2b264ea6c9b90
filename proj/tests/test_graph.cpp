#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "topobound/coloring.hpp"
#include "topobound/error.hpp"
#include "topobound/graph.hpp"
#include "topobound/set_system.hpp"

using namespace topobound;

TEST(Dimacs, ParsesTriangle) {
  const Graph g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(g, complete_graph(3));
}

TEST(Dimacs, AcceptsCommentsAndIsolatedVertices) {
  const Graph g = parse_dimacs("c two points\np edge 2 0\n");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_TRUE(g.has_isolated_vertex());
}

TEST(Dimacs, RejectsSelfLoopAndGarbage) {
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 1 1\n"), InvalidArgument);
  EXPECT_THROW(parse_dimacs("e 1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 1 3\n"), InvalidArgument);
  EXPECT_THROW(parse_dimacs("p edge 2 1\nx 1 2\n"), ParseError);
}

TEST(Dimacs, RoundTrips) {
  const Graph g = random_graph(9, 0.4, 17);
  EXPECT_EQ(parse_dimacs(to_dimacs(g)), g);
}

TEST(Generators, CompleteAndCycle) {
  EXPECT_EQ(complete_graph(4).edge_count(), 6u);
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(c5.edge_count(), 5u);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2u);
  const Graph k1 = complete_graph(1);
  EXPECT_EQ(k1.vertex_count(), 1u);
  EXPECT_EQ(k1.edge_count(), 0u);
}

TEST(Generators, RandomGraphIsDeterministicAndHasNoIsolatedVertex) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph a = random_graph(7, 0.3, seed);
    EXPECT_EQ(a, random_graph(7, 0.3, seed));
    EXPECT_FALSE(a.has_isolated_vertex());
  }
}

TEST(CommonNeighbors, CycleExamples) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(members_of(common_neighbors(c5, std::vector<int>{0})), (std::vector<int>{1, 4}));
  EXPECT_EQ(members_of(common_neighbors(c5, std::vector<int>{1, 4})), (std::vector<int>{0}));
  EXPECT_EQ(common_neighbors(c5, std::vector<int>{}), c5.all_vertices());
}

TEST(CommonNeighbors, MatchesOracle) {
  const Graph g = random_graph(8, 0.5, 3);
  for (oracle::Mask a = 0; a < (1u << 8); ++a) {
    std::vector<int> members;
    for (int v = 0; v < 8; ++v) {
      if (a >> v & 1) members.push_back(v);
    }
    oracle::Mask got = 0;
    for (int v : members_of(common_neighbors(g, members))) got |= oracle::Mask{1} << v;
    EXPECT_EQ(got, oracle::common_neighbors(g, a));
  }
}

TEST(FourCycle, Detection) {
  EXPECT_TRUE(has_four_cycle(complete_graph(4)));
  EXPECT_TRUE(has_four_cycle(cycle_graph(4)));
  EXPECT_FALSE(has_four_cycle(cycle_graph(5)));
  EXPECT_FALSE(has_four_cycle(path_graph(6)));
  EXPECT_FALSE(has_four_cycle(kneser_graph_of(all_k_subsets(5, 2))));
}

TEST(Coloring, GreedyExamples) {
  const Graph c5 = cycle_graph(5);
  const Coloring c = greedy_coloring(c5, {0, 1, 2, 3, 4});
  EXPECT_EQ(c.colors_used, 3);
  EXPECT_TRUE(is_proper(c5, c));
  for (int m = 1; m <= 6; ++m) {
    EXPECT_EQ(greedy_coloring(complete_graph(m), degree_order(complete_graph(m))).colors_used, m);
  }
  const Graph petersen = kneser_graph_of(all_k_subsets(5, 2));
  const Coloring p = greedy_coloring(petersen, degree_order(petersen));
  EXPECT_GE(p.colors_used, 3);
  EXPECT_TRUE(is_proper(petersen, p));
}

TEST(Coloring, ExactExamples) {
  EXPECT_EQ(exact_chromatic_number(complete_graph(4)), 4);
  EXPECT_EQ(exact_chromatic_number(kneser_graph_of(all_k_subsets(5, 2))), 3);
  EXPECT_EQ(exact_chromatic_number(kneser_graph_of(stable_subsets(6, 2))), 4);
  EXPECT_EQ(exact_chromatic_number(cycle_graph(7)), 3);
  EXPECT_EQ(exact_chromatic_number(cycle_graph(8)), 2);
}

TEST(Coloring, ExactMatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, 0.5, rng());
    const Coloring c = exact_coloring(g);
    EXPECT_TRUE(is_proper(g, c));
    EXPECT_EQ(c.colors_used, oracle::chromatic_number(g));
  }
}

TEST(Coloring, BudgetExhaustionThrows) {
  EXPECT_THROW(exact_chromatic_number(kneser_graph_of(all_k_subsets(7, 2)), 5), BudgetExhausted);
}

TEST(Homomorphism, Checks) {
  const Graph c5 = cycle_graph(5);
  const Coloring c = greedy_coloring(c5, {0, 1, 2, 3, 4});
  EXPECT_TRUE(check_homomorphism(coloring_as_map(c5, c)));
  EXPECT_TRUE(check_homomorphism(identity_map(c5)));
  VertexMap constant{complete_graph(2), complete_graph(2), {0, 0}};
  EXPECT_FALSE(check_homomorphism(constant));
  VertexMap partial{complete_graph(2), complete_graph(2), {0}};
  EXPECT_THROW(check_homomorphism(partial), InvalidArgument);
}

TEST(Homomorphism, ComposeIsPointwise) {
  const Graph c5 = cycle_graph(5);
  const VertexMap f = coloring_as_map(c5, greedy_coloring(c5, {0, 1, 2, 3, 4}));
  const VertexMap id = identity_map(f.target);
  const VertexMap h = compose(id, f);
  EXPECT_EQ(h.images, f.images);
  EXPECT_TRUE(check_homomorphism(h));
}
