#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "topobound/error.hpp"
#include "topobound/set_system.hpp"

namespace topobound {

/// Facets of the cyclic polytope C_d(n) on vertices 1..n, lexicographic.
struct CyclicFaceTable {
  int d = 0;
  int n = 0;
  std::vector<std::vector<int>> facets;
};

/// d-subsets of [n] in which every two non-members are separated by an
/// even number of members. Requires 2 <= d < n.
CyclicFaceTable cyclic_polytope_facets(int d, int n);

/// The evenness test for one sorted subset of [n].
bool satisfies_evenness(const std::vector<int>& set, int n);

/// True if the sorted subset lies in some facet of C_d(n).
bool is_cyclic_face(const std::vector<int>& set, int d, int n);

/// Largest d >= 1 such that K(F), with its elements as the vertices
/// 1..n of the cyclic polytope C_{n-d}(n), lies in the polytope's boundary;
/// none if no d qualifies.
std::optional<int> barany_bound_cyclic(const SetSystem& system, std::size_t cap = kDefaultFaceCap);

}  // namespace topobound
