#include "topobound/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace topobound {

SimplicialComplex order_complex(std::vector<Label> elements,
                                const std::function<bool(const Label&, const Label&)>& less,
                                std::size_t cap) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const Label empty_set = Label::set({});
  elements.erase(std::remove(elements.begin(), elements.end(), empty_set), elements.end());
  const std::size_t n = elements.size();

  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = less(elements[i], elements[j]) ? 1 : 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rel[i][i]) throw InvalidArgument("order relation is not irreflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel[i][j]) continue;
      if (rel[j][i]) throw InvalidArgument("order relation is not antisymmetric");
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[j][k] && !rel[i][k]) throw InvalidArgument("order relation is not transitive");
      }
    }
  }
  // Chains as increasing sequences; every chain is emitted once, from its
  // least element upward.
  std::vector<Face> faces;
  Face chain;
  std::function<void()> extend = [&] {
    if (faces.size() + 1 >= cap) throw FaceCapExceeded(cap, "order complex");
    Face sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    faces.push_back(std::move(sorted));
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[chain.back()][j]) {
        chain.push_back(static_cast<VertexId>(j));
        extend();
        chain.pop_back();
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    chain.assign(1, static_cast<VertexId>(i));
    extend();
  }
  return SimplicialComplex::from_closed_family(std::move(elements), std::move(faces), cap);
}

OrderComplexPtr barycentric_subdivision(const Complex& complex, std::size_t cap) {
  std::vector<std::vector<VertexId>> faces;
  complex.for_each_face([&](FaceView f) { faces.emplace_back(f.begin(), f.end()); }, cap);
  return std::make_shared<const OrderComplex>(complex.vertex_labels(), std::move(faces));
}

Z2Complex barycentric_subdivision(const Z2Complex& complex, std::size_t cap) {
  auto sd = barycentric_subdivision(complex.complex(), cap);
  std::vector<VertexId> action(sd->vertex_count());
  Face image;
  for (VertexId v = 0; v < sd->vertex_count(); ++v) {
    image.clear();
    for (VertexId a : sd->element(v)) image.push_back(complex.act(a));
    std::sort(image.begin(), image.end());
    action[v] = *sd->find_element(image);
  }
  return Z2Complex(sd, std::move(action), cap);
}

std::shared_ptr<const Suspension> suspension(ComplexPtr complex) {
  return std::make_shared<const Suspension>(std::move(complex));
}

Z2Complex suspension(const Z2Complex& complex, std::size_t cap) {
  auto s = suspension(complex.complex_ptr());
  std::vector<VertexId> action = complex.action();
  action.push_back(s->north());
  action.push_back(s->south());
  return Z2Complex(s, std::move(action), cap);
}

Z2Complex deleted_join(const Complex& complex, std::size_t cap) {
  SimplicialComplex k = materialize(complex, cap);
  const std::size_t n = k.vertex_count();
  std::vector<Label> labels;
  labels.reserve(2 * n);
  for (const auto& l : k.labels()) {
    labels.push_back(Label::signed_vertex(l, 1));
    labels.push_back(Label::signed_vertex(l, 2));
  }
  // Signed labels sort by vertex, then copy: (v,j) has id 2v + j - 1.
  std::vector<FaceView> all{FaceView{}};
  for (std::size_t s = 1; s <= static_cast<std::size_t>(k.dimension() + 1); ++s) {
    for (std::size_t i = 0; i < k.count(s); ++i) all.push_back(k.face(s, i));
  }
  std::vector<Face> faces;
  auto emit = [&](FaceView a, FaceView b) {
    if (faces.size() + 1 >= cap) throw FaceCapExceeded(cap, "deleted join");
    Face joined;
    joined.reserve(a.size() + b.size());
    for (VertexId v : a) joined.push_back(2 * v);
    for (VertexId v : b) joined.push_back(2 * v + 1);
    std::sort(joined.begin(), joined.end());
    faces.push_back(std::move(joined));
  };
  if (n <= 64) {
    // Second copy grown vertex by vertex inside the complement of the first.
    std::unordered_set<std::uint64_t> masks;
    for (FaceView a : all) {
      std::uint64_t m = 0;
      for (VertexId v : a) m |= std::uint64_t{1} << v;
      masks.insert(m);
    }
    Face second;
    std::function<void(FaceView, std::uint64_t, std::uint64_t, VertexId)> grow =
        [&](FaceView a, std::uint64_t used, std::uint64_t b, VertexId from) {
          for (VertexId v = from; v < n; ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if ((used & bit) || !masks.count(b | bit)) continue;
            second.push_back(v);
            emit(a, second);
            grow(a, used, b | bit, v + 1);
            second.pop_back();
          }
        };
    for (FaceView a : all) {
      std::uint64_t used = 0;
      for (VertexId v : a) used |= std::uint64_t{1} << v;
      if (!a.empty()) emit(a, {});
      grow(a, used, 0, 0);
    }
  } else {
    for (FaceView a : all) {
      for (FaceView b : all) {
        if (a.empty() && b.empty()) continue;
        bool disjoint = std::none_of(a.begin(), a.end(), [&](VertexId v) {
          return std::binary_search(b.begin(), b.end(), v);
        });
        if (disjoint) emit(a, b);
      }
    }
  }
  auto joined_complex = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_closed_family(std::move(labels), std::move(faces), cap));
  std::vector<VertexId> action(2 * n);
  for (VertexId v = 0; v < 2 * n; ++v) action[v] = v ^ 1U;
  return Z2Complex(joined_complex, std::move(action), cap);
}

}  // namespace topobound
