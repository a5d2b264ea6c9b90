#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topobound/complex.hpp"
#include "topobound/gf2.hpp"
#include "topobound/z2_complex.hpp"

namespace topobound {

/// Augmented chain complex over GF(2). boundaries[d] maps d-faces to
/// (d-1)-faces in canonical face order; boundaries[0] maps every vertex to
/// the empty face.
struct ChainComplexGF2 {
  std::vector<std::size_t> ranks;  // ranks[d + 1] = number of d-faces
  std::vector<SparseMatrixGF2> boundaries;

  int dimension() const { return static_cast<int>(boundaries.size()) - 1; }
  /// True if every composite of consecutive boundaries vanishes.
  bool is_complex() const;
};

ChainComplexGF2 chain_complex(const SimplicialComplex& complex);

/// Reduced Betti numbers over GF(2).
struct BettiProfile {
  std::size_t minus_one = 0;          // nonzero only for the complex {empty face}
  std::vector<std::size_t> betti;     // degrees 0..dim

  std::size_t at(int degree) const;
  /// Reduced Euler characteristic sum (-1)^d b_d, degrees -1..dim.
  long euler() const;
  bool operator==(const BettiProfile&) const = default;
};

BettiProfile betti_gf2(const ChainComplexGF2& chains, RankStrategy strategy = RankStrategy::automatic);
BettiProfile betti_gf2(const SimplicialComplex& complex, RankStrategy strategy = RankStrategy::automatic);

/// Largest k with vanishing reduced homology in all degrees <= k, capped at
/// the dimension; -1 when disconnected and -2 for the complex {empty face},
/// whose reduced homology lives in degree -1.
int acyclicity(const BettiProfile& betti);
int acyclicity(const SimplicialComplex& complex);

/// The bracket 1 + acyc <= ind <= dim; no upper end when the action is not
/// free.
struct IndexInterval {
  int lower = 0;
  std::optional<int> upper;

  bool is_point() const { return upper && *upper == lower; }
  std::string to_string() const;
  bool operator==(const IndexInterval&) const = default;
};

IndexInterval index_interval(const Z2Complex& complex, std::size_t cap = kDefaultFaceCap);

}  // namespace topobound
