#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "topobound/boxes.hpp"
#include "topobound/gf2.hpp"
#include "topobound/homology.hpp"

using namespace topobound;

namespace {

SparseMatrixGF2 random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density_pct) {
  SparseMatrixGF2 m;
  m.rows = rows;
  m.columns.resize(cols);
  for (auto& c : m.columns) {
    for (std::uint32_t r = 0; r < rows; ++r) {
      if (static_cast<int>(rng() % 100) < density_pct) c.push_back(r);
    }
  }
  return m;
}

std::vector<oracle::Mask> as_rows(const SparseMatrixGF2& m) {
  // Columns become oracle rows: rank is the same for the transpose.
  std::vector<oracle::Mask> rows;
  for (const auto& c : m.columns) {
    oracle::Mask r = 0;
    for (auto i : c) r |= oracle::Mask{1} << i;
    rows.push_back(r);
  }
  return rows;
}

std::vector<Label> atoms(int n) {
  std::vector<Label> out;
  for (int i = 0; i < n; ++i) out.push_back(Label::atom(i));
  return out;
}

SimplicialComplex from_masks(int n, const std::vector<oracle::Mask>& gens) {
  std::vector<Face> faces;
  for (auto g : gens) {
    Face f;
    for (int v = 0; v < n; ++v) {
      if (g >> v & 1) f.push_back(static_cast<VertexId>(v));
    }
    faces.push_back(f);
  }
  return SimplicialComplex::from_generators(atoms(n), faces);
}

std::set<oracle::Mask> face_masks(const SimplicialComplex& k) {
  std::set<oracle::Mask> out{0};
  k.for_each_face([&](FaceView f) {
    oracle::Mask m = 0;
    for (auto v : f) m |= oracle::Mask{1} << v;
    out.insert(m);
  });
  return out;
}

}  // namespace

TEST(Gf2Rank, DenseAndSparseMatchSpanOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = 1 + rng() % 40;
    const std::size_t cols = 1 + rng() % 18;
    const auto m = random_matrix(rng, rows, cols, 5 + static_cast<int>(rng() % 60));
    const std::size_t expected = oracle::span_rank(as_rows(m));
    EXPECT_EQ(gf2_rank(m, RankStrategy::dense), expected);
    EXPECT_EQ(gf2_rank(m, RankStrategy::sparse), expected);
    EXPECT_EQ(gf2_rank(m), expected);
  }
}

TEST(Gf2Rank, LargeDenseAndSparseAgree) {
  std::mt19937_64 rng(4);
  const auto m = random_matrix(rng, 600, 500, 2);
  EXPECT_EQ(gf2_rank(m, RankStrategy::dense), gf2_rank(m, RankStrategy::sparse));
}

TEST(Gf2Rank, StrategyChoice) {
  SparseMatrixGF2 small;
  small.rows = 100;
  small.columns.resize(10);
  EXPECT_EQ(choose_strategy(small), RankStrategy::dense);
  SparseMatrixGF2 huge;
  huge.rows = 100000;
  huge.columns.resize(10);
  EXPECT_EQ(choose_strategy(huge), RankStrategy::sparse);
}

TEST(ChainComplex, SmallBoundaries) {
  const auto point = from_masks(1, {1});
  const auto c = chain_complex(point);
  ASSERT_EQ(c.boundaries.size(), 1u);
  EXPECT_EQ(c.boundaries[0].rows, 1u);
  EXPECT_EQ(c.boundaries[0].columns[0], (std::vector<std::uint32_t>{0}));

  const auto edge = from_masks(2, {3});
  const auto e = chain_complex(edge);
  ASSERT_EQ(e.boundaries.size(), 2u);
  EXPECT_EQ(e.boundaries[1].columns[0], (std::vector<std::uint32_t>{0, 1}));
  EXPECT_TRUE(e.is_complex());
}

TEST(Betti, SimplexBoundaries) {
  for (int m = 3; m <= 6; ++m) {
    const oracle::Mask full = (oracle::Mask{1} << m) - 1;
    std::vector<oracle::Mask> gens;
    for (int skip = 0; skip < m; ++skip) gens.push_back(full & ~(oracle::Mask{1} << skip));
    const BettiProfile b = betti_gf2(from_masks(m, gens));
    std::vector<std::size_t> expected(m - 1, 0);
    expected[m - 2] = 1;
    EXPECT_EQ(b.betti, expected);
  }
}

TEST(Betti, MatchesSpanOracleOnRandomComplexes) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 60; ++i) {
    const int n = 3 + static_cast<int>(rng() % 5);
    std::vector<oracle::Mask> gens;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < count; ++j) gens.push_back(1 + rng() % ((oracle::Mask{1} << n) - 1));
    // every vertex must lie in a face
    for (int v = 0; v < n; ++v) gens.push_back(oracle::Mask{1} << v);
    const auto k = from_masks(n, gens);
    const auto expected = oracle::reduced_betti(face_masks(k));
    EXPECT_EQ(betti_gf2(k, RankStrategy::dense).betti, expected);
    EXPECT_EQ(betti_gf2(k, RankStrategy::sparse).betti, expected);
  }
}

TEST(Betti, EmptyFaceOnlyComplex) {
  const auto k = SimplicialComplex::from_generators({}, {});
  const BettiProfile b = betti_gf2(k);
  EXPECT_EQ(b.minus_one, 1u);
  EXPECT_EQ(acyclicity(b), -2);
}

TEST(Acyclicity, Examples) {
  EXPECT_EQ(acyclicity(from_masks(2, {1, 2})), -1);
  EXPECT_EQ(acyclicity(from_masks(4, {15})), 3);
  const auto b0k3 = box_complex(complete_graph(3), BoxVariant::B0);
  EXPECT_EQ(acyclicity(materialize(b0k3.complex())), 1);
}

TEST(BoxHomology, CompleteGraphs) {
  const auto b0 = materialize(box_complex(complete_graph(3), BoxVariant::B0).complex());
  EXPECT_EQ(betti_gf2(b0).betti, (std::vector<std::size_t>{0, 0, 1}));
  const auto b = materialize(box_complex(complete_graph(3), BoxVariant::B).complex());
  EXPECT_EQ(betti_gf2(b).betti, (std::vector<std::size_t>{0, 1, 0}));
}

TEST(BoxHomology, MatchesSpanOracle) {
  for (const Graph& g : {complete_graph(3), complete_graph(4), cycle_graph(5), path_graph(4)}) {
    const auto b = materialize(box_complex(g, BoxVariant::B).complex());
    EXPECT_EQ(betti_gf2(b).betti, oracle::reduced_betti(face_masks(b)));
  }
}

TEST(IndexInterval, CompleteGraphs) {
  for (int m = 2; m <= 5; ++m) {
    EXPECT_EQ(index_interval(box_complex(complete_graph(m), BoxVariant::B0)), (IndexInterval{m - 1, m - 1}));
    const IndexInterval b = index_interval(box_complex(complete_graph(m), BoxVariant::B));
    EXPECT_EQ(b.lower, m - 2);
    EXPECT_EQ(b.upper, std::optional<int>(m - 1));
  }
}
