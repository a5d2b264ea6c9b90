#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "topobound/error.hpp"
#include "topobound/label.hpp"

namespace topobound {

using VertexId = std::uint32_t;
using Face = std::vector<VertexId>;
using FaceView = std::span<const VertexId>;
using FaceCallback = std::function<void(FaceView)>;

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

/// Finite abstract simplicial complex. Vertices are numbered 0..n-1 in
/// increasing label order; faces are passed around as strictly increasing
/// vertex id sequences. The empty face is always present and never visited.
class Complex {
 public:
  virtual ~Complex() = default;

  virtual std::size_t vertex_count() const = 0;
  virtual Label vertex_label(VertexId v) const = 0;
  virtual std::optional<VertexId> find_vertex(const Label& label) const = 0;
  /// `face` must be sorted. The empty face is contained.
  virtual bool contains(FaceView face) const = 0;
  /// True if every clique of the 1-skeleton is a face.
  virtual bool is_flag() const = 0;
  /// -1 for the complex {empty face}.
  virtual int dimension() const = 0;
  /// Visits every nonempty face exactly once. Throws FaceCapExceeded when
  /// more than `cap` faces would be visited.
  virtual void for_each_face(const FaceCallback& fn, std::size_t cap = kDefaultFaceCap) const = 0;
  /// Visits every 1-dimensional face.
  virtual void for_each_edge(const std::function<void(VertexId, VertexId)>& fn) const = 0;

  std::vector<Label> vertex_labels() const;
  std::vector<Label> face_labels(FaceView face) const;
};

using ComplexPtr = std::shared_ptr<const Complex>;

/// Complex with every face stored. Faces of each size are kept in one flat
/// array, sorted lexicographically; the canonical face order is by size,
/// then lexicographic.
class SimplicialComplex final : public Complex {
 public:
  /// The complex {empty face}.
  SimplicialComplex() = default;

  /// Downward closure of `generators` (faces given by label). Throws
  /// InvalidArgument on duplicate vertex labels, on a face using an
  /// undeclared vertex, or on a declared vertex lying in no face.
  static SimplicialComplex from_faces(std::vector<Label> vertices,
                                      const std::vector<std::vector<Label>>& generators,
                                      std::size_t cap = kDefaultFaceCap);
  /// Same, with generators given by index into `vertices` (any order).
  static SimplicialComplex from_generators(std::vector<Label> vertices,
                                           std::vector<Face> generators,
                                           std::size_t cap = kDefaultFaceCap);
  /// `faces` must already be downward closed (checked). Vertex ids index the
  /// sorted `vertices`.
  static SimplicialComplex from_closed_family(std::vector<Label> vertices,
                                              std::vector<Face> faces,
                                              std::size_t cap = kDefaultFaceCap);

  std::size_t vertex_count() const override { return labels_.size(); }
  Label vertex_label(VertexId v) const override;
  std::optional<VertexId> find_vertex(const Label& label) const override;
  bool contains(FaceView face) const override;
  bool is_flag() const override;
  int dimension() const override { return static_cast<int>(by_size_.size()) - 1; }
  void for_each_face(const FaceCallback& fn, std::size_t cap = kDefaultFaceCap) const override;
  void for_each_edge(const std::function<void(VertexId, VertexId)>& fn) const override;

  const std::vector<Label>& labels() const { return labels_; }

  /// Number of faces with `size` vertices; size 0 gives 1.
  std::size_t count(std::size_t size) const;
  /// Total number of faces including the empty one.
  std::size_t face_count() const;
  /// The i-th face of the given size in canonical order.
  FaceView face(std::size_t size, std::size_t index) const;
  /// Position of a sorted face among faces of its size.
  std::optional<std::size_t> face_index(FaceView face) const;

  /// Maximal faces in canonical order.
  std::vector<Face> facets() const;
  /// f-vector (f_{-1}, f_0, ..., f_dim).
  std::vector<std::size_t> f_vector() const;
  /// Recheck of the closure invariant (used by tests).
  bool is_downward_closed() const;

  /// Relabels vertices through `fn`; result labels must stay distinct.
  SimplicialComplex relabeled(const std::function<Label(const Label&)>& fn) const;

  bool operator==(const SimplicialComplex& other) const;

 private:
  static SimplicialComplex build(std::vector<Label> vertices, std::vector<std::vector<Face>> by_size);

  std::vector<Label> labels_;
  // by_size_[s-1] holds faces with s vertices, flattened.
  std::vector<std::vector<VertexId>> by_size_;
};

/// Explicit copy of any complex.
SimplicialComplex materialize(const Complex& complex, std::size_t cap = kDefaultFaceCap);

/// susp K: K together with S+{s} and S+{n} for every face S. The two new
/// vertices are poles one level above any pole already used in K, so they
/// sort after every vertex of K (south first).
class Suspension final : public Complex {
 public:
  explicit Suspension(ComplexPtr base);

  std::size_t vertex_count() const override { return base_->vertex_count() + 2; }
  Label vertex_label(VertexId v) const override;
  std::optional<VertexId> find_vertex(const Label& label) const override;
  bool contains(FaceView face) const override;
  bool is_flag() const override { return base_->is_flag(); }
  int dimension() const override { return base_->dimension() + 1; }
  void for_each_face(const FaceCallback& fn, std::size_t cap = kDefaultFaceCap) const override;
  void for_each_edge(const std::function<void(VertexId, VertexId)>& fn) const override;

  const ComplexPtr& base() const { return base_; }
  VertexId south() const { return static_cast<VertexId>(base_->vertex_count()); }
  VertexId north() const { return south() + 1; }
  const Label& south_label() const { return south_; }
  const Label& north_label() const { return north_; }

 private:
  ComplexPtr base_;
  Label south_;
  Label north_;
};

}  // namespace topobound
