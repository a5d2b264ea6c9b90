#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topobound/complex.hpp"
#include "topobound/graph.hpp"
#include "topobound/order_complex.hpp"
#include "topobound/set_system.hpp"
#include "topobound/z2_complex.hpp"

namespace topobound {

enum class BoxVariant { B, B0, B1, Bedge, Bsark, Bchain, N, L };

std::string to_string(BoxVariant variant);
std::optional<BoxVariant> parse_box_variant(const std::string& name);

/// Vertex label (v,shore) of the box complexes, v a graph vertex.
Label signed_label(int v, int shore);
/// A'+A'' as a set of signed labels; bit i of a mask stands for vertex i
/// (or for ground element i+1 when `one_based`).
Label shores_label(std::uint64_t first, std::uint64_t second, bool one_based = false);
/// Inverse of shores_label. Throws InvalidArgument on other labels.
std::pair<std::uint64_t, std::uint64_t> decode_shores(const Label& label, bool one_based = false);
/// Set of atoms -> mask (atom value v sets bit v, or v-1 when `one_based`).
std::uint64_t decode_atoms(const Label& label, bool one_based = false);
Label atoms_label(std::uint64_t mask, bool one_based = false);

/// N(G): vertex sets with a common neighbor. Vertices are atom(v).
SimplicialComplex neighborhood_complex(const Graph& graph, std::size_t cap = kDefaultFaceCap);

/// Nonempty sets A with CN(CN(A)) = A and CN(A) nonempty, as masks in
/// increasing order.
std::vector<std::uint64_t> closed_sets(const Graph& graph);

/// L(G): order complex of the closed sets with the action A -> CN(A).
Z2Complex lovasz_complex(const Graph& graph, std::size_t cap = kDefaultFaceCap);

/// B, B0, B1 or Bedge of a graph with the shore-swap action (for Bedge,
/// (u,v) -> (v,u)). B and B0 are stored explicitly, B1 is an order
/// complex. Graph complexes are limited to 64 vertices.
Z2Complex box_complex(const Graph& graph, BoxVariant variant, std::size_t cap = kDefaultFaceCap);

/// Bsark or Bchain of a set system on at most 63 ground elements.
Z2Complex kneser_box_complex(const SetSystem& system, BoxVariant variant,
                             std::size_t cap = kDefaultFaceCap);

/// B(f): (v,j) -> (f(v),j), listed in the vertex order of B(source).
/// Throws PreconditionError if f is not a homomorphism.
std::vector<Label> box_functor_map(const VertexMap& map);

struct RetractionResult {
  std::vector<Label> images;
  SimplicialMapCheck check;
  /// Largest dimension of the union of the images of a face of sd B(G).
  int image_dimension = -1;
};

/// The retraction of sd B(G) onto the faces of B(G) with at most two
/// vertices, for graphs without 4-cycles. The target is the complex whose
/// vertices are those small faces and whose faces are families with union
/// a face of B(G) of size at most 2. Throws PreconditionError if G has a
/// 4-cycle or an isolated vertex.
RetractionResult c4free_retraction(const Graph& graph, std::size_t cap = kDefaultFaceCap);

/// Throws PreconditionError on isolated vertices and ResourceLimit above
/// 64 vertices.
void require_box_graph(const Graph& graph);

}  // namespace topobound
