#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <vector>

#include "topobound/complex.hpp"

namespace topobound {

/// Order complex of a family of distinct nonempty sets ordered by strict
/// inclusion. The sets are built from "atoms" (any labels); vertex v is the
/// v-th set in lexicographic order and is labeled Label::set of its atoms.
///
/// Faces are chains and are never stored: chains are enumerated on demand,
/// and membership is a chain test. Since order complexes are flag, maps out
/// of them can be checked on comparable pairs alone.
class OrderComplex final : public Complex {
 public:
  /// `atoms` are sorted into label order; element atom ids refer to the
  /// given (unsorted) positions. Throws InvalidArgument on empty or repeated
  /// elements and on repeated atoms.
  OrderComplex(std::vector<Label> atoms, std::vector<std::vector<VertexId>> elements);

  OrderComplex(const OrderComplex&) = delete;
  OrderComplex& operator=(const OrderComplex&) = delete;

  std::size_t vertex_count() const override { return offsets_.size() - 1; }
  Label vertex_label(VertexId v) const override;
  std::optional<VertexId> find_vertex(const Label& label) const override;
  bool contains(FaceView face) const override;
  bool is_flag() const override { return true; }
  int dimension() const override;
  void for_each_face(const FaceCallback& fn, std::size_t cap = kDefaultFaceCap) const override;
  /// Streams comparable pairs without building the cover structure.
  void for_each_edge(const std::function<void(VertexId, VertexId)>& fn) const override;

  const std::vector<Label>& atoms() const { return atoms_; }
  /// Sorted atom ids of element v.
  FaceView element(VertexId v) const;
  std::optional<VertexId> find_element(FaceView sorted_atoms) const;
  /// True if element a is a proper subset of element b.
  bool below(VertexId a, VertexId b) const;
  /// Number of comparable pairs (edges); computed on first use.
  std::size_t comparable_pairs() const;

 private:
  void for_each_pair(const std::function<void(VertexId, VertexId)>& fn) const;
  void build_up_lists() const;

  std::vector<Label> atoms_;
  std::vector<VertexId> data_;
  std::vector<std::size_t> offsets_;
  mutable std::once_flag up_once_;
  mutable std::vector<std::vector<VertexId>> up_;
  mutable int dimension_ = -1;
};

using OrderComplexPtr = std::shared_ptr<const OrderComplex>;

}  // namespace topobound
