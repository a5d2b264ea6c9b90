#include "topobound/boxes.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <unordered_set>

#include "topobound/constructions.hpp"

namespace topobound {

namespace {

/// Neighborhood masks of a graph with at most 64 vertices.
struct MaskGraph {
  int n = 0;
  std::vector<std::uint64_t> nbr;

  explicit MaskGraph(const Graph& g) : n(static_cast<int>(g.vertex_count())), nbr(n, 0) {
    for (const auto& [u, v] : g.edges()) {
      nbr[u] |= std::uint64_t{1} << v;
      nbr[v] |= std::uint64_t{1} << u;
    }
  }

  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

  std::uint64_t cn(std::uint64_t set) const {
    std::uint64_t out = all();
    for (; set; set &= set - 1) out &= nbr[std::countr_zero(set)];
    return out;
  }
};

std::vector<int> bits(std::uint64_t mask) {
  std::vector<int> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

Face shores_face(std::uint64_t first, std::uint64_t second) {
  Face f;
  for (int v : bits(first)) f.push_back(2 * static_cast<VertexId>(v));
  for (int v : bits(second)) f.push_back(2 * static_cast<VertexId>(v) + 1);
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<Label> signed_atoms(int count, bool one_based) {
  std::vector<Label> atoms;
  for (int v = 0; v < count; ++v) {
    atoms.push_back(Label::signed_vertex(Label::atom(v + (one_based ? 1 : 0)), 1));
    atoms.push_back(Label::signed_vertex(Label::atom(v + (one_based ? 1 : 0)), 2));
  }
  return atoms;
}

/// Shore-swap action on an order complex over signed atoms 2v, 2v+1.
std::vector<VertexId> swap_action(const OrderComplex& k) {
  std::vector<VertexId> action(k.vertex_count());
  Face image;
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    image.clear();
    for (VertexId a : k.element(v)) image.push_back(a ^ 1U);
    std::sort(image.begin(), image.end());
    action[v] = *k.find_element(image);
  }
  return action;
}

/// Faces A'+A'' of B (needs_common = true) or B0, by growing both shores.
std::vector<Face> box_faces(const MaskGraph& g, bool needs_common, std::size_t cap) {
  std::vector<Face> faces;
  auto emit = [&](std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0) return;
    if (faces.size() + 1 >= cap) throw FaceCapExceeded(cap, "box complex");
    faces.push_back(shores_face(a, b));
  };
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t, int)> second_shore =
      [&](std::uint64_t a, std::uint64_t room, std::uint64_t b, int from) {
        emit(a, b);
        for (int v = from; v < g.n; ++v) {
          const std::uint64_t bit = std::uint64_t{1} << v;
          if (!(room & bit)) continue;
          const std::uint64_t next = b | bit;
          if (needs_common && a == 0 && g.cn(next) == 0) continue;
          second_shore(a, room, next, v + 1);
        }
      };
  std::function<void(std::uint64_t, std::uint64_t, int)> first_shore =
      [&](std::uint64_t a, std::uint64_t cn_a, int from) {
        second_shore(a, cn_a, 0, 0);
        for (int v = from; v < g.n; ++v) {
          const std::uint64_t bit = std::uint64_t{1} << v;
          const std::uint64_t cn_next = cn_a & g.nbr[v];
          if (needs_common && cn_next == 0) continue;
          first_shore(a | bit, cn_next, v + 1);
        }
      };
  first_shore(0, g.all(), 0);
  return faces;
}

Z2Complex make_b(const Graph& graph, bool needs_common, std::size_t cap) {
  MaskGraph g(graph);
  auto faces = box_faces(g, needs_common, cap);
  auto k = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_closed_family(signed_atoms(g.n, false), std::move(faces), cap));
  std::vector<VertexId> action(k->vertex_count());
  for (VertexId v = 0; v < action.size(); ++v) action[v] = v ^ 1U;
  return Z2Complex(k, std::move(action), cap);
}

Z2Complex make_b1(const Graph& graph, std::size_t cap) {
  MaskGraph g(graph);
  std::vector<std::vector<VertexId>> elements;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t, int)> second_shore =
      [&](std::uint64_t a, std::uint64_t room, std::uint64_t b, int from) {
        for (int v = from; v < g.n; ++v) {
          const std::uint64_t bit = std::uint64_t{1} << v;
          if (!(room & bit)) continue;
          if (elements.size() + 1 >= cap) throw FaceCapExceeded(cap, "B1 vertices");
          elements.push_back(shores_face(a, b | bit));
          second_shore(a, room, b | bit, v + 1);
        }
      };
  std::function<void(std::uint64_t, std::uint64_t, int)> first_shore =
      [&](std::uint64_t a, std::uint64_t cn_a, int from) {
        for (int v = from; v < g.n; ++v) {
          const std::uint64_t cn_next = cn_a & g.nbr[v];
          if (cn_next == 0) continue;
          const std::uint64_t next = a | (std::uint64_t{1} << v);
          second_shore(next, cn_next, 0, 0);
          first_shore(next, cn_next, v + 1);
        }
      };
  first_shore(0, g.all(), 0);
  auto k = std::make_shared<const OrderComplex>(signed_atoms(g.n, false), std::move(elements));
  auto action = swap_action(*k);
  return Z2Complex(k, std::move(action), cap);
}

Z2Complex make_bedge(const Graph& graph, std::size_t cap) {
  MaskGraph g(graph);
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < g.n; ++u) {
    for (int v : bits(g.nbr[u])) arcs.emplace_back(u, v);
  }
  std::vector<Label> labels;
  for (const auto& [u, v] : arcs) labels.push_back(Label::pair(Label::atom(u), Label::atom(v)));
  std::vector<Face> faces;
  Face current;
  // Arc sets whose tails are completely joined to their heads.
  std::function<void(std::uint64_t, std::uint64_t, std::size_t)> grow =
      [&](std::uint64_t tails, std::uint64_t heads, std::size_t from) {
        for (std::size_t i = from; i < arcs.size(); ++i) {
          const auto [u, v] = arcs[i];
          const std::uint64_t t = tails | (std::uint64_t{1} << u);
          const std::uint64_t h = heads | (std::uint64_t{1} << v);
          if ((g.nbr[u] & h) != h || (g.nbr[v] & t) != t) continue;
          if (faces.size() + 1 >= cap) throw FaceCapExceeded(cap, "Bedge");
          current.push_back(static_cast<VertexId>(i));
          faces.push_back(current);
          grow(t, h, i + 1);
          current.pop_back();
        }
      };
  grow(0, 0, 0);
  auto k = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_closed_family(std::move(labels), std::move(faces), cap));
  return Z2Complex::from_label_action(
      k, [](const Label& l) { return Label::pair(l.second(), l.first()); }, cap);
}

}  // namespace

std::string to_string(BoxVariant variant) {
  switch (variant) {
    case BoxVariant::B:
      return "B";
    case BoxVariant::B0:
      return "B0";
    case BoxVariant::B1:
      return "B1";
    case BoxVariant::Bedge:
      return "Bedge";
    case BoxVariant::Bsark:
      return "Bsark";
    case BoxVariant::Bchain:
      return "Bchain";
    case BoxVariant::N:
      return "N";
    case BoxVariant::L:
      return "L";
  }
  return "?";
}

std::optional<BoxVariant> parse_box_variant(const std::string& name) {
  for (auto v : {BoxVariant::B, BoxVariant::B0, BoxVariant::B1, BoxVariant::Bedge,
                 BoxVariant::Bsark, BoxVariant::Bchain, BoxVariant::N, BoxVariant::L}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

Label signed_label(int v, int shore) { return Label::signed_vertex(Label::atom(v), shore); }

Label shores_label(std::uint64_t first, std::uint64_t second, bool one_based) {
  const int shift = one_based ? 1 : 0;
  std::vector<Label> members;
  for (int v : bits(first)) members.push_back(signed_label(v + shift, 1));
  for (int v : bits(second)) members.push_back(signed_label(v + shift, 2));
  return Label::set(std::move(members));
}

std::pair<std::uint64_t, std::uint64_t> decode_shores(const Label& label, bool one_based) {
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  for (const auto& m : label.members()) {
    const auto v = m.vertex().atom_value() - (one_based ? 1 : 0);
    if (v < 0 || v >= 64) throw InvalidArgument("shore vertex out of range: " + m.to_string());
    (m.shore() == 1 ? first : second) |= std::uint64_t{1} << v;
  }
  return {first, second};
}

std::uint64_t decode_atoms(const Label& label, bool one_based) {
  std::uint64_t mask = 0;
  for (const auto& m : label.members()) {
    const auto v = m.atom_value() - (one_based ? 1 : 0);
    if (v < 0 || v >= 64) throw InvalidArgument("atom out of range: " + m.to_string());
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

Label atoms_label(std::uint64_t mask, bool one_based) {
  std::vector<Label> members;
  for (int v : bits(mask)) members.push_back(Label::atom(v + (one_based ? 1 : 0)));
  return Label::set(std::move(members));
}

void require_box_graph(const Graph& graph) {
  if (graph.vertex_count() == 0) throw PreconditionError("graph has no vertices");
  if (graph.has_isolated_vertex()) throw PreconditionError("graph has an isolated vertex");
  if (graph.vertex_count() > 64) throw ResourceLimit("box complexes support at most 64 vertices");
}

SimplicialComplex neighborhood_complex(const Graph& graph, std::size_t cap) {
  if (graph.vertex_count() == 0) throw PreconditionError("graph has no vertices");
  if (graph.has_isolated_vertex()) throw PreconditionError("graph has an isolated vertex");
  std::vector<Label> labels;
  std::vector<Face> generators;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    labels.push_back(Label::atom(static_cast<std::int64_t>(v)));
    auto nb = members_of(graph.neighbors(static_cast<int>(v)));
    generators.emplace_back(nb.begin(), nb.end());
  }
  return SimplicialComplex::from_generators(std::move(labels), std::move(generators), cap);
}

std::vector<std::uint64_t> closed_sets(const Graph& graph) {
  require_box_graph(graph);
  MaskGraph g(graph);
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> queue;
  for (int v = 0; v < g.n; ++v) {
    if (seen.insert(g.nbr[v]).second) queue.push_back(g.nbr[v]);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int v = 0; v < g.n; ++v) {
      const std::uint64_t next = queue[i] & g.nbr[v];
      if (next != 0 && seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

Z2Complex lovasz_complex(const Graph& graph, std::size_t cap) {
  auto sets = closed_sets(graph);
  if (sets.size() + 1 > cap) throw FaceCapExceeded(cap, "Lovasz complex");
  MaskGraph g(graph);
  std::vector<Label> atoms;
  for (int v = 0; v < g.n; ++v) atoms.push_back(Label::atom(v));
  std::vector<std::vector<VertexId>> elements;
  for (auto m : sets) {
    std::vector<VertexId> e;
    for (int v : bits(m)) e.push_back(static_cast<VertexId>(v));
    elements.push_back(std::move(e));
  }
  auto k = std::make_shared<const OrderComplex>(std::move(atoms), std::move(elements));
  std::vector<VertexId> action(k->vertex_count());
  for (VertexId v = 0; v < k->vertex_count(); ++v) {
    std::uint64_t m = 0;
    for (VertexId a : k->element(v)) m |= std::uint64_t{1} << a;
    Face image;
    for (int u : bits(g.cn(m))) image.push_back(static_cast<VertexId>(u));
    action[v] = *k->find_element(image);
  }
  return Z2Complex(k, std::move(action), cap);
}

Z2Complex box_complex(const Graph& graph, BoxVariant variant, std::size_t cap) {
  require_box_graph(graph);
  switch (variant) {
    case BoxVariant::B:
      return make_b(graph, true, cap);
    case BoxVariant::B0:
      return make_b(graph, false, cap);
    case BoxVariant::B1:
      return make_b1(graph, cap);
    case BoxVariant::Bedge:
      return make_bedge(graph, cap);
    default:
      throw InvalidArgument("box_complex: variant " + to_string(variant) + " is not a graph box complex");
  }
}

Z2Complex kneser_box_complex(const SetSystem& system, BoxVariant variant, std::size_t cap) {
  if (variant != BoxVariant::Bsark && variant != BoxVariant::Bchain) {
    throw InvalidArgument("kneser_box_complex: variant must be Bsark or Bchain");
  }
  const int n = system.ground_size();
  if (n > 63) throw ResourceLimit("Kneser box complexes support at most 63 ground elements");
  std::vector<std::uint64_t> members;
  for (const auto& s : system.sets()) {
    std::uint64_t m = 0;
    for (int e : s) m |= std::uint64_t{1} << (e - 1);
    members.push_back(m);
  }
  auto holds_member = [&](std::uint64_t b) {
    return std::any_of(members.begin(), members.end(), [&](std::uint64_t m) { return (m & b) == m; });
  };
  const bool both = variant == BoxVariant::Bchain;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<std::vector<VertexId>> elements;
  for (std::uint64_t first = 0;; ++first) {
    const bool first_ok = holds_member(first);
    const std::uint64_t rest = all & ~first;
    for (std::uint64_t second = rest;; second = (second - 1) & rest) {
      const bool second_ok = holds_member(second);
      if (both ? (first_ok && second_ok) : (first_ok || second_ok)) {
        if (elements.size() + 1 >= cap) throw FaceCapExceeded(cap, to_string(variant) + " vertices");
        elements.push_back(shores_face(first, second));
      }
      if (second == 0) break;
    }
    if (first == all) break;
  }
  auto k = std::make_shared<const OrderComplex>(signed_atoms(n, true), std::move(elements));
  auto action = swap_action(*k);
  return Z2Complex(k, std::move(action), cap);
}

std::vector<Label> box_functor_map(const VertexMap& map) {
  if (!check_homomorphism(map)) throw PreconditionError("vertex map is not a graph homomorphism");
  std::vector<Label> images;
  for (std::size_t v = 0; v < map.source.vertex_count(); ++v) {
    images.push_back(signed_label(map.images[v], 1));
    images.push_back(signed_label(map.images[v], 2));
  }
  return images;
}

RetractionResult c4free_retraction(const Graph& graph, std::size_t cap) {
  require_box_graph(graph);
  if (has_four_cycle(graph)) throw PreconditionError("graph contains a 4-cycle");
  MaskGraph g(graph);
  Z2Complex b = box_complex(graph, BoxVariant::B, cap);
  Z2Complex sd = barycentric_subdivision(b, cap);

  const auto& bk = dynamic_cast<const SimplicialComplex&>(b.complex());
  std::vector<Label> small;
  std::vector<std::vector<Label>> generators;
  for (std::size_t s = 1; s <= 2 && s <= static_cast<std::size_t>(bk.dimension() + 1); ++s) {
    for (std::size_t i = 0; i < bk.count(s); ++i) {
      auto f = bk.face(s, i);
      auto labels = bk.face_labels(f);
      small.push_back(Label::set(labels));
      std::vector<Label> family;
      for (std::uint32_t mask = 1; mask < (1U << s); ++mask) {
        std::vector<Label> part;
        for (std::size_t j = 0; j < s; ++j) {
          if ((mask >> j) & 1) part.push_back(labels[j]);
        }
        family.push_back(Label::set(std::move(part)));
      }
      generators.push_back(std::move(family));
    }
  }
  auto u = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_faces(small, generators, cap));
  Z2Complex target = Z2Complex::from_label_action(u, swap_shores, cap);

  RetractionResult out;
  out.images = map_labels(sd.complex(), [&](const Label& l) {
    auto [first, second] = decode_shores(l);
    if (std::popcount(first) >= 2) return shores_label(0, g.cn(first));
    if (std::popcount(second) >= 2) return shores_label(g.cn(second), 0);
    return l;
  });
  out.check = verify_z2_map(sd, target, out.images, cap);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> decoded;
  for (const auto& l : out.images) decoded.push_back(decode_shores(l));
  sd.complex().for_each_face(
      [&](FaceView f) {
        std::uint64_t first = 0;
        std::uint64_t second = 0;
        for (VertexId v : f) {
          first |= decoded[v].first;
          second |= decoded[v].second;
        }
        out.image_dimension =
            std::max(out.image_dimension, std::popcount(first) + std::popcount(second) - 1);
      },
      cap);
  return out;
}

}  // namespace topobound
