#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "topobound/complex.hpp"

namespace topobound {

/// A complex with a simplicial involution on its vertices.
class Z2Complex {
 public:
  /// Throws InvalidArgument unless `action` is an involution mapping faces
  /// to faces.
  Z2Complex(ComplexPtr complex, std::vector<VertexId> action, std::size_t cap = kDefaultFaceCap);
  /// Builds the action from a formula on labels.
  static Z2Complex from_label_action(ComplexPtr complex,
                                     const std::function<Label(const Label&)>& action,
                                     std::size_t cap = kDefaultFaceCap);

  const Complex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  VertexId act(VertexId v) const { return action_[v]; }
  const std::vector<VertexId>& action() const { return action_; }
  /// No nonempty face is mapped onto itself.
  bool is_free() const { return free_; }

 private:
  ComplexPtr complex_;
  std::vector<VertexId> action_;
  bool free_ = true;
};

struct MapViolation {
  enum class Kind { unmapped_vertex, face_not_preserved, not_equivariant };
  Kind kind = Kind::face_not_preserved;
  Face face;
  std::vector<Label> face_labels;
  std::vector<Label> image_labels;
};

std::string to_string(MapViolation::Kind kind);

struct SimplicialMapCheck {
  bool simplicial = true;
  bool equivariant = true;
  bool verdict = true;
  /// First violation in canonical order (size, then lexicographic).
  std::optional<MapViolation> violation;
  /// Number of faces (or comparable pairs, for flag complexes) examined.
  std::size_t checked = 0;
};

/// Checks that the vertex map v -> images[v] sends faces to faces. When both
/// complexes are flag only edges are examined, which is equivalent.
SimplicialMapCheck verify_simplicial_map(const Complex& source, const Complex& target,
                                         const std::vector<Label>& images,
                                         std::size_t cap = kDefaultFaceCap);
SimplicialMapCheck verify_simplicial_map(const Complex& source, const Complex& target,
                                         const std::vector<VertexId>& images,
                                         std::size_t cap = kDefaultFaceCap);

/// Simpliciality plus f(nu(v)) = nu(f(v)) for every vertex.
SimplicialMapCheck verify_z2_map(const Z2Complex& source, const Z2Complex& target,
                                 const std::vector<Label>& images,
                                 std::size_t cap = kDefaultFaceCap);

/// images[v] = fn(label of v) for every vertex of `source`.
std::vector<Label> map_labels(const Complex& source, const std::function<Label(const Label&)>& fn);

}  // namespace topobound
