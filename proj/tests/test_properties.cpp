#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "topobound/boxes.hpp"
#include "topobound/coloring.hpp"
#include "topobound/constructions.hpp"
#include "topobound/homology.hpp"

using namespace topobound;

namespace {

SimplicialComplex random_complex(std::mt19937_64& rng, int n) {
  std::vector<Label> labels;
  for (int i = 0; i < n; ++i) labels.push_back(Label::atom(i));
  std::vector<Face> gens;
  for (int v = 0; v < n; ++v) gens.push_back({static_cast<VertexId>(v)});
  const int count = 1 + static_cast<int>(rng() % 5);
  for (int j = 0; j < count; ++j) {
    Face f;
    for (int v = 0; v < n; ++v) {
      if (rng() % 2) f.push_back(static_cast<VertexId>(v));
    }
    if (!f.empty()) gens.push_back(f);
  }
  return SimplicialComplex::from_generators(std::move(labels), std::move(gens));
}

}  // namespace

TEST(Properties, SubdivisionPreservesHomology) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 25; ++i) {
    const auto k = random_complex(rng, 3 + static_cast<int>(rng() % 4));
    EXPECT_EQ(betti_gf2(materialize(*barycentric_subdivision(k))), betti_gf2(k));
  }
}

TEST(Properties, SuspensionShiftsHomology) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 25; ++i) {
    auto k = std::make_shared<const SimplicialComplex>(random_complex(rng, 3 + static_cast<int>(rng() % 4)));
    const BettiProfile base = betti_gf2(*k);
    const BettiProfile susp = betti_gf2(materialize(*suspension(k)));
    EXPECT_EQ(susp.at(0), 0u);
    for (int d = 0; d <= k->dimension(); ++d) EXPECT_EQ(susp.at(d + 1), base.at(d));
  }
}

TEST(Properties, DeletedJoinIsFreeAndIntervalOrdered) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 25; ++i) {
    const auto k = random_complex(rng, 3 + static_cast<int>(rng() % 3));
    const Z2Complex dj = deleted_join(k);
    EXPECT_TRUE(dj.is_free());
    const IndexInterval iv = index_interval(dj);
    ASSERT_TRUE(iv.upper);
    EXPECT_LE(iv.lower, *iv.upper);
  }
}

TEST(Properties, BoxIsSubcomplexOfB0) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(3 + static_cast<int>(rng() % 4), 0.5, rng());
    const auto b = box_complex(g, BoxVariant::B);
    const auto b0 = box_complex(g, BoxVariant::B0);
    const auto check = verify_z2_map(b, b0, b.complex().vertex_labels());
    EXPECT_TRUE(check.verdict);
  }
}

TEST(Properties, FunctorCompositionLaw) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(3 + static_cast<int>(rng() % 5), 0.5, rng());
    const VertexMap f = coloring_as_map(g, greedy_coloring(g, degree_order(g)));
    const int m = static_cast<int>(f.target.vertex_count());
    std::vector<int> inclusion(m);
    for (int v = 0; v < m; ++v) inclusion[v] = v;
    const VertexMap h{f.target, complete_graph(m + 1), inclusion};
    const auto bf = box_functor_map(f);
    const auto bh = box_functor_map(h);
    const auto bhf = box_functor_map(compose(h, f));
    const auto target_h = box_complex(h.source, BoxVariant::B);
    for (std::size_t v = 0; v < bf.size(); ++v) {
      const auto id = target_h.complex().find_vertex(bf[v]);
      ASSERT_TRUE(id);
      EXPECT_EQ(bh[*id], bhf[v]);
    }
  }
}

TEST(Properties, LovaszBoundBelowChromaticNumber) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(3 + static_cast<int>(rng() % 5), 0.5, rng());
    const IndexInterval iv = index_interval(box_complex(g, BoxVariant::B));
    EXPECT_LE(iv.lower + 2, oracle::chromatic_number(g));
  }
}
