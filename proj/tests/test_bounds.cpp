#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "topobound/bounds.hpp"
#include "topobound/coloring.hpp"
#include "topobound/cyclic_polytope.hpp"
#include "topobound/error.hpp"

using namespace topobound;

TEST(CyclicPolytope, PolygonFacets) {
  const CyclicFaceTable t = cyclic_polytope_facets(2, 5);
  EXPECT_EQ(t.facets, (std::vector<std::vector<int>>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}));
}

TEST(CyclicPolytope, FacetCountsMatchUpperBoundTheorem) {
  EXPECT_EQ(cyclic_polytope_facets(4, 7).facets.size(), 14u);
  EXPECT_EQ(cyclic_polytope_facets(3, 6).facets.size(), 8u);
  EXPECT_EQ(cyclic_polytope_facets(5, 8).facets.size(), 20u);
}

TEST(CyclicPolytope, EvennessMatchesGeometry) {
  for (int d = 2; d <= 5; ++d) {
    for (int n = d + 1; n <= 8; ++n) {
      auto expected = oracle::cyclic_facets_geometric(d, n);
      auto got = cyclic_polytope_facets(d, n).facets;
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expected) << "d=" << d << " n=" << n;
      for (const auto& f : got) EXPECT_TRUE(satisfies_evenness(f, n));
    }
  }
}

TEST(CyclicPolytope, FaceTestMatchesFacetContainment) {
  for (int d = 2; d <= 5; ++d) {
    for (int n = d + 1; n <= 8; ++n) {
      const auto facets = cyclic_polytope_facets(d, n).facets;
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i) {
          if (mask >> i & 1) s.push_back(i + 1);
        }
        const bool expected = std::any_of(facets.begin(), facets.end(), [&](const std::vector<int>& f) {
          return std::includes(f.begin(), f.end(), s.begin(), s.end());
        });
        EXPECT_EQ(is_cyclic_face(s, d, n), expected) << "d=" << d << " n=" << n << " mask=" << mask;
      }
    }
  }
}

TEST(CyclicPolytope, RejectsBadDimensions) {
  EXPECT_THROW(cyclic_polytope_facets(1, 5), InvalidArgument);
  EXPECT_THROW(cyclic_polytope_facets(5, 5), InvalidArgument);
}

TEST(Barany, StableSystems) {
  EXPECT_EQ(barany_bound_cyclic(stable_subsets(5, 2)), std::optional<int>(3));
  EXPECT_EQ(barany_bound_cyclic(stable_subsets(8, 2)), std::optional<int>(6));
}

TEST(Barany, AllPairsOfFour) {
  const auto d = barany_bound_cyclic(all_k_subsets(4, 2));
  ASSERT_TRUE(d);
  // K is four points; C_2(4) is a quadrilateral containing them, so d = 2.
  EXPECT_EQ(*d, 2);
  EXPECT_LE(*d, exact_chromatic_number(kneser_graph_of(all_k_subsets(4, 2))));
}

TEST(Hierarchy, Petersen) {
  const BoundsReport r = hierarchy_report(kneser_graph_of(all_k_subsets(5, 2)), all_k_subsets(5, 2));
  EXPECT_EQ(r.dolnikov_kriz, std::optional<int>(3));
  EXPECT_EQ(r.chi_exact, std::optional<int>(3));
  EXPECT_EQ(r.lovasz_lower, std::optional<int>(3));
  EXPECT_EQ(r.presentation, "given");
  EXPECT_FALSE(r.any_fail());
  EXPECT_FALSE(r.incomplete);
}

TEST(Hierarchy, Schrijver82) {
  const BoundsReport r = hierarchy_report(kneser_graph_of(stable_subsets(8, 2)), stable_subsets(8, 2));
  EXPECT_EQ(r.dolnikov_kriz, std::optional<int>(4));
  EXPECT_EQ(r.barany, std::optional<int>(6));
  EXPECT_EQ(r.chi_exact, std::optional<int>(6));
  EXPECT_FALSE(r.any_fail());
}

TEST(Hierarchy, PentagonUsesCliqueCover) {
  const BoundsReport r = hierarchy_report(cycle_graph(5), std::nullopt);
  EXPECT_EQ(r.presentation, "clique_cover");
  ASSERT_TRUE(r.lovasz_lower);
  EXPECT_LE(*r.lovasz_lower, 3);
  ASSERT_TRUE(r.c4free);
  EXPECT_TRUE(r.c4free->verified);
  EXPECT_LE(r.c4free->image_dimension, 1);
  const Verdict* v = r.find("c4free_index_le_1");
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->status, VerdictStatus::pass);
}

TEST(Hierarchy, CompleteGraphsHaveTightGap) {
  for (int m = 2; m <= 5; ++m) {
    const BoundsReport r = hierarchy_report(complete_graph(m), std::nullopt);
    EXPECT_EQ(r.chi_exact, std::optional<int>(m));
    EXPECT_FALSE(r.any_fail()) << m;
  }
}

TEST(Hierarchy, TinyCapMarksIncomplete) {
  ReportOptions options;
  options.cap = 8;
  const BoundsReport r = hierarchy_report(kneser_graph_of(all_k_subsets(5, 2)), std::nullopt, options);
  EXPECT_TRUE(r.incomplete);
  EXPECT_FALSE(r.omitted.empty());
}

TEST(Hierarchy, RejectsIsolatedVertices) {
  EXPECT_THROW(hierarchy_report(Graph(3, {{0, 1}}), std::nullopt), PreconditionError);
}

TEST(Hierarchy, RejectsWrongPresentation) {
  EXPECT_THROW(hierarchy_report(cycle_graph(5), all_k_subsets(5, 2)), InvalidArgument);
}

TEST(Hierarchy, BoundsNeverExceedChromaticNumber) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 25; ++i) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph g = random_graph(n, 0.5, rng());
    const BoundsReport r = hierarchy_report(g, std::nullopt);
    const int chi = oracle::chromatic_number(g);
    EXPECT_EQ(r.chi_exact, std::optional<int>(chi));
    if (r.lovasz_lower) EXPECT_LE(*r.lovasz_lower, chi);
    if (r.dolnikov_kriz) EXPECT_LE(*r.dolnikov_kriz, chi);
    if (r.barany) EXPECT_LE(*r.barany, chi);
    EXPECT_FALSE(r.any_fail());
  }
}
