#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "topobound/boxes.hpp"
#include "topobound/graph.hpp"
#include "topobound/set_system.hpp"
#include "topobound/z2_complex.hpp"

namespace topobound {

/// The canonical maps between box complexes. Two-way maps have one id per
/// direction.
enum class CanonicalMapId {
  m1,           // B -> B0, identity on vertices
  m2_forward,   // sd Bedge -> B1, arc set -> tails + heads
  m2_backward,  // B1 -> sd Bedge, A'+A'' -> arcs of A' x A''
  m3,           // B1 -> sd B, inclusion
  m4,           // sd B0 -> susp B1, one-shore faces to the poles
  m5_forward,   // Bchain(F) -> B1(KG F)
  m5_backward,  // B1(KG F) -> Bchain(F)
  m6_forward,   // Bsark(F) -> sd B0(KG F)
  m6_backward,  // sd B0(KG F) -> Bsark(F)
  m7,           // sd sd B -> B1, first nonempty sets of the interleaved chains
  m8,           // sd L -> B1, chain -> A0 + CN(Ak)
  m9,           // sd B1 -> sd L, chain -> closed chain
};

std::vector<CanonicalMapId> all_canonical_maps();
/// "M1", "M2>", "M2<", ... with > the forward direction.
std::string to_string(CanonicalMapId id);
std::string describe(CanonicalMapId id);

struct CanonicalMapResult {
  CanonicalMapId id;
  std::string source;
  std::string target;
  std::size_t source_vertices = 0;
  std::size_t target_vertices = 0;
  std::vector<Label> images;
  SimplicialMapCheck check;
};

/// Builds the complexes of one graph on demand and checks the canonical
/// maps between them. Maps M5 and M6 need a set system with KG(F) = G
/// (vertex i of G is the i-th set); without one the clique-cover
/// representation of G is used.
class CanonicalMaps {
 public:
  CanonicalMaps(Graph graph, std::optional<SetSystem> system = std::nullopt,
                std::size_t cap = kDefaultFaceCap);
  ~CanonicalMaps();

  CanonicalMapResult run(CanonicalMapId id);

  const Graph& graph() const { return graph_; }
  const SetSystem& system() const { return system_; }

 private:
  struct Cache;

  Graph graph_;
  SetSystem system_;
  std::size_t cap_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace topobound
