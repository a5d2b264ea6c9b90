#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "topobound/complex.hpp"
#include "topobound/error.hpp"
#include "topobound/graph.hpp"

namespace topobound {

/// Family of distinct nonempty subsets of the ground set {1..n}.
class SetSystem {
 public:
  SetSystem() = default;
  /// Members are sorted and deduplicated; the list order of the sets is
  /// kept. Throws InvalidArgument on an empty set, an element outside
  /// 1..n, or a repeated set.
  SetSystem(int ground_size, std::vector<std::vector<int>> sets);

  int ground_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const std::vector<std::vector<int>>& sets() const noexcept { return sets_; }
  const std::vector<int>& operator[](std::size_t i) const { return sets_[i]; }

  bool operator==(const SetSystem&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> sets_;
};

/// All k-subsets of [n] in lexicographic order.
SetSystem all_k_subsets(int n, int k);
/// k-subsets of [n] containing no two cyclically consecutive elements,
/// lexicographic. Requires 0 < 2k < n.
SetSystem stable_subsets(int n, int k);

/// KG(F): vertex i is the i-th set; edges join disjoint sets.
Graph kneser_graph_of(const SetSystem& system);

/// K(F): subsets of [n] containing no member of F, with vertices atom(i).
/// Elements i with {i} in F are not vertices.
SimplicialComplex free_complex(const SetSystem& system, std::size_t cap = kDefaultFaceCap);

/// max |S1| + |S2| - 1 over disjoint faces S1, S2 (-1 for {empty face}).
int deleted_join_dimension(const SimplicialComplex& complex);

/// A white set Y and a red/blue coloring of the rest with no member of F
/// (avoiding Y) monochromatic. Elements are 1-based.
struct Cd2Certificate {
  std::vector<int> white;
  std::vector<int> red;
  std::vector<int> blue;
  int value = 0;
};

bool verify_cd2_certificate(const SetSystem& system, const Cd2Certificate& certificate);

enum class Cd2Method { brute, via_dim };

struct Cd2Result {
  int value = 0;
  std::optional<Cd2Certificate> certificate;  // brute method only
};

/// 2-colorability defect. The brute method searches white sets by size,
/// then lexicographically, and reports the first that admits a coloring;
/// it throws BudgetExhausted after `budget` search nodes. via_dim uses
/// n - 1 - dim of the deleted join of K(F).
Cd2Result cd2(const SetSystem& system, Cd2Method method = Cd2Method::via_dim,
              std::size_t budget = kDefaultSearchBudget, std::size_t cap = kDefaultFaceCap);

enum class KneserMode { augmented, clique_cover };

/// Set system F with KG(F) equal to G under v -> F_v. Augmented: ground
/// elements 1..n are the vertices, then the non-edges in lexicographic
/// order; F_v is v plus the non-edges at v. Clique cover: one element per
/// clique of a greedy cover of the complement's edges; a vertex whose set
/// would be empty or repeat an earlier one gets an extra private element.
SetSystem kneser_representation(const Graph& graph, KneserMode mode);

/// Greedy clique cover of the non-edges of G (cliques of the complement,
/// each a sorted vertex list).
std::vector<std::vector<int>> complement_clique_cover(const Graph& graph);

/// Representation from a given cover; throws InvalidArgument unless every
/// member is a clique of the complement and every non-edge is covered.
SetSystem kneser_representation_from_cover(const Graph& graph,
                                           const std::vector<std::vector<int>>& cover);

}  // namespace topobound
