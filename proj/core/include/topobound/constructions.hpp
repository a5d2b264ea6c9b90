#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "topobound/complex.hpp"
#include "topobound/order_complex.hpp"
#include "topobound/z2_complex.hpp"

namespace topobound {

/// Order complex of `elements` under the strict order `less`, as an explicit
/// complex. An element equal to the empty set label is dropped. Throws
/// InvalidArgument if `less` is not irreflexive and transitive, or if two
/// elements are related both ways.
SimplicialComplex order_complex(std::vector<Label> elements,
                                const std::function<bool(const Label&, const Label&)>& less,
                                std::size_t cap = kDefaultFaceCap);

/// sd K: the order complex of the nonempty faces of K. Vertex labels are the
/// set labels of the faces.
OrderComplexPtr barycentric_subdivision(const Complex& complex, std::size_t cap = kDefaultFaceCap);
/// sd with the facewise action.
Z2Complex barycentric_subdivision(const Z2Complex& complex, std::size_t cap = kDefaultFaceCap);

std::shared_ptr<const Suspension> suspension(ComplexPtr complex);
/// Swaps the poles and acts on K as before.
Z2Complex suspension(const Z2Complex& complex, std::size_t cap = kDefaultFaceCap);

/// Faces S1 + S2 (copies 1 and 2) with S1, S2 disjoint faces of K; vertices
/// are signed labels (v,1), (v,2) and the action swaps the copies.
Z2Complex deleted_join(const Complex& complex, std::size_t cap = kDefaultFaceCap);

}  // namespace topobound
