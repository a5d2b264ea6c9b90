#include "topobound/complex.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace topobound {

namespace {

using FaceSet = std::unordered_set<Face, FaceHash>;

bool span_less(FaceView a, FaceView b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Sorts labels and returns old index -> new index.
std::vector<VertexId> sort_vertices(std::vector<Label>& vertices) {
  std::vector<VertexId> order(vertices.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return vertices[a] < vertices[b]; });
  std::vector<Label> sorted;
  sorted.reserve(vertices.size());
  std::vector<VertexId> new_id(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && vertices[order[i]] == vertices[order[i - 1]]) {
      throw InvalidArgument("duplicate vertex label " + vertices[order[i]].to_string());
    }
    new_id[order[i]] = static_cast<VertexId>(i);
    sorted.push_back(vertices[order[i]]);
  }
  vertices = std::move(sorted);
  return new_id;
}

void normalize_face(Face& face, const std::vector<VertexId>& new_id) {
  for (auto& v : face) {
    if (v >= new_id.size()) throw InvalidArgument("face uses an undeclared vertex");
    v = new_id[v];
  }
  std::sort(face.begin(), face.end());
  if (std::adjacent_find(face.begin(), face.end()) != face.end()) {
    throw InvalidArgument("face lists a vertex twice");
  }
}

std::vector<std::vector<Face>> group_by_size(FaceSet&& faces) {
  std::vector<std::vector<Face>> by_size;
  for (auto it = faces.begin(); it != faces.end();) {
    auto node = faces.extract(it++);
    Face f = std::move(node.value());
    if (by_size.size() < f.size()) by_size.resize(f.size());
    by_size[f.size() - 1].push_back(std::move(f));
  }
  return by_size;
}

}  // namespace

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  return boost::hash_range(f.begin(), f.end());
}

std::vector<Label> Complex::vertex_labels() const {
  std::vector<Label> out;
  out.reserve(vertex_count());
  for (VertexId v = 0; v < vertex_count(); ++v) out.push_back(vertex_label(v));
  return out;
}

std::vector<Label> Complex::face_labels(FaceView face) const {
  std::vector<Label> out;
  out.reserve(face.size());
  for (VertexId v : face) out.push_back(vertex_label(v));
  return out;
}

SimplicialComplex SimplicialComplex::build(std::vector<Label> vertices,
                                           std::vector<std::vector<Face>> by_size) {
  SimplicialComplex k;
  k.labels_ = std::move(vertices);
  while (!by_size.empty() && by_size.back().empty()) by_size.pop_back();
  k.by_size_.resize(by_size.size());
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    auto& group = by_size[s];
    std::sort(group.begin(), group.end());
    auto& flat = k.by_size_[s];
    flat.reserve(group.size() * (s + 1));
    for (const auto& f : group) flat.insert(flat.end(), f.begin(), f.end());
  }
  if (k.count(1) != k.labels_.size()) {
    throw InvalidArgument("every vertex must lie in some face");
  }
  return k;
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Label> vertices,
                                                const std::vector<std::vector<Label>>& generators,
                                                std::size_t cap) {
  std::vector<Label> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Face> faces;
  faces.reserve(generators.size());
  for (const auto& g : generators) {
    Face f;
    f.reserve(g.size());
    for (const auto& l : g) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), l);
      if (it == sorted.end() || *it != l) {
        throw InvalidArgument("face uses undeclared vertex " + l.to_string());
      }
      f.push_back(static_cast<VertexId>(it - sorted.begin()));
    }
    faces.push_back(std::move(f));
  }
  return from_generators(std::move(sorted), std::move(faces), cap);
}

SimplicialComplex SimplicialComplex::from_generators(std::vector<Label> vertices,
                                                     std::vector<Face> generators,
                                                     std::size_t cap) {
  auto new_id = sort_vertices(vertices);
  FaceSet seen;
  std::vector<Face> stack;
  auto insert = [&](Face f) {
    if (f.empty() || seen.count(f)) return;
    if (seen.size() + 1 >= cap) throw FaceCapExceeded(cap, "downward closure");
    seen.insert(f);
    stack.push_back(std::move(f));
  };
  for (auto& g : generators) {
    normalize_face(g, new_id);
    insert(std::move(g));
    while (!stack.empty()) {
      Face f = std::move(stack.back());
      stack.pop_back();
      if (f.size() == 1) continue;
      for (std::size_t i = 0; i < f.size(); ++i) {
        Face sub;
        sub.reserve(f.size() - 1);
        for (std::size_t j = 0; j < f.size(); ++j) {
          if (j != i) sub.push_back(f[j]);
        }
        insert(std::move(sub));
      }
    }
  }
  return build(std::move(vertices), group_by_size(std::move(seen)));
}

SimplicialComplex SimplicialComplex::from_closed_family(std::vector<Label> vertices,
                                                        std::vector<Face> faces,
                                                        std::size_t cap) {
  auto new_id = sort_vertices(vertices);
  FaceSet seen;
  for (auto& f : faces) {
    if (f.empty()) continue;
    normalize_face(f, new_id);
    seen.insert(std::move(f));
    if (seen.size() + 1 > cap) throw FaceCapExceeded(cap);
  }
  Face sub;
  for (const auto& f : seen) {
    if (f.size() == 1) continue;
    for (std::size_t i = 0; i < f.size(); ++i) {
      sub.clear();
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (j != i) sub.push_back(f[j]);
      }
      if (!seen.count(sub)) throw InvalidArgument("face family is not downward closed");
    }
  }
  return build(std::move(vertices), group_by_size(std::move(seen)));
}

Label SimplicialComplex::vertex_label(VertexId v) const {
  if (v >= labels_.size()) throw InvalidArgument("vertex id out of range");
  return labels_[v];
}

std::optional<VertexId> SimplicialComplex::find_vertex(const Label& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::size_t SimplicialComplex::count(std::size_t size) const {
  if (size == 0) return 1;
  if (size > by_size_.size()) return 0;
  return by_size_[size - 1].size() / size;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 1;
  for (std::size_t s = 1; s <= by_size_.size(); ++s) total += count(s);
  return total;
}

FaceView SimplicialComplex::face(std::size_t size, std::size_t index) const {
  if (size == 0) return {};
  return FaceView(by_size_[size - 1].data() + index * size, size);
}

std::optional<std::size_t> SimplicialComplex::face_index(FaceView f) const {
  const std::size_t s = f.size();
  if (s == 0) return 0;
  if (s > by_size_.size()) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = count(s);
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (span_less(face(s, mid), f)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < count(s) && std::equal(f.begin(), f.end(), face(s, lo).begin())) return lo;
  return std::nullopt;
}

bool SimplicialComplex::contains(FaceView f) const { return face_index(f).has_value(); }

bool SimplicialComplex::is_flag() const {
  const std::size_t n = labels_.size();
  std::vector<std::vector<VertexId>> adj(n);
  for (std::size_t i = 0; i < count(2); ++i) {
    auto e = face(2, i);
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  Face extended;
  for (std::size_t s = 2; s <= by_size_.size() + 1; ++s) {
    // Every (s)-clique is some (s-1)-face plus a larger common neighbor.
    for (std::size_t i = 0; i < count(s - 1); ++i) {
      auto f = face(s - 1, i);
      for (VertexId v : adj[f[0]]) {
        if (v <= f.back()) continue;
        bool clique = std::all_of(f.begin() + 1, f.end(), [&](VertexId u) {
          return std::binary_search(adj[u].begin(), adj[u].end(), v);
        });
        if (!clique) continue;
        extended.assign(f.begin(), f.end());
        extended.push_back(v);
        if (!contains(extended)) return false;
      }
    }
  }
  return true;
}

void SimplicialComplex::for_each_face(const FaceCallback& fn, std::size_t cap) const {
  if (face_count() - 1 > cap) throw FaceCapExceeded(cap);
  for (std::size_t s = 1; s <= by_size_.size(); ++s) {
    for (std::size_t i = 0; i < count(s); ++i) fn(face(s, i));
  }
}

void SimplicialComplex::for_each_edge(const std::function<void(VertexId, VertexId)>& fn) const {
  for (std::size_t i = 0; i < count(2); ++i) {
    auto e = face(2, i);
    fn(e[0], e[1]);
  }
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<std::vector<char>> covered(by_size_.size());
  for (std::size_t s = 1; s <= by_size_.size(); ++s) covered[s - 1].assign(count(s), 0);
  Face sub;
  for (std::size_t s = 2; s <= by_size_.size(); ++s) {
    for (std::size_t i = 0; i < count(s); ++i) {
      auto f = face(s, i);
      for (std::size_t drop = 0; drop < s; ++drop) {
        sub.clear();
        for (std::size_t j = 0; j < s; ++j) {
          if (j != drop) sub.push_back(f[j]);
        }
        covered[s - 2][*face_index(sub)] = 1;
      }
    }
  }
  std::vector<Face> out;
  for (std::size_t s = 1; s <= by_size_.size(); ++s) {
    for (std::size_t i = 0; i < count(s); ++i) {
      if (!covered[s - 1][i]) {
        auto f = face(s, i);
        out.emplace_back(f.begin(), f.end());
      }
    }
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s <= by_size_.size(); ++s) out.push_back(count(s));
  return out;
}

bool SimplicialComplex::is_downward_closed() const {
  Face sub;
  for (std::size_t s = 2; s <= by_size_.size(); ++s) {
    for (std::size_t i = 0; i < count(s); ++i) {
      auto f = face(s, i);
      for (std::size_t drop = 0; drop < s; ++drop) {
        sub.clear();
        for (std::size_t j = 0; j < s; ++j) {
          if (j != drop) sub.push_back(f[j]);
        }
        if (!contains(sub)) return false;
      }
    }
  }
  return count(1) == labels_.size();
}

SimplicialComplex SimplicialComplex::relabeled(
    const std::function<Label(const Label&)>& fn) const {
  std::vector<Label> labels;
  labels.reserve(labels_.size());
  for (const auto& l : labels_) labels.push_back(fn(l));
  std::vector<Face> faces;
  for (std::size_t s = 1; s <= by_size_.size(); ++s) {
    for (std::size_t i = 0; i < count(s); ++i) {
      auto f = face(s, i);
      faces.emplace_back(f.begin(), f.end());
    }
  }
  return from_closed_family(std::move(labels), std::move(faces),
                            std::numeric_limits<std::size_t>::max());
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  return labels_ == other.labels_ && by_size_ == other.by_size_;
}

SimplicialComplex materialize(const Complex& complex, std::size_t cap) {
  if (auto* explicit_complex = dynamic_cast<const SimplicialComplex*>(&complex)) {
    if (explicit_complex->face_count() - 1 > cap) throw FaceCapExceeded(cap);
    return *explicit_complex;
  }
  std::vector<Face> faces;
  complex.for_each_face([&](FaceView f) { faces.emplace_back(f.begin(), f.end()); }, cap);
  return SimplicialComplex::from_closed_family(complex.vertex_labels(), std::move(faces), cap);
}

Suspension::Suspension(ComplexPtr base) : base_(std::move(base)) {
  if (!base_) throw InvalidArgument("suspension of a null complex");
  int level = 0;
  for (VertexId v = 0; v < base_->vertex_count(); ++v) {
    level = std::max(level, base_->vertex_label(v).max_pole_level());
  }
  south_ = Label::pole(Label::Pole::south, level + 1);
  north_ = Label::pole(Label::Pole::north, level + 1);
}

Label Suspension::vertex_label(VertexId v) const {
  if (v < south()) return base_->vertex_label(v);
  if (v == south()) return south_;
  if (v == north()) return north_;
  throw InvalidArgument("vertex id out of range");
}

std::optional<VertexId> Suspension::find_vertex(const Label& label) const {
  if (label == south_) return south();
  if (label == north_) return north();
  return base_->find_vertex(label);
}

bool Suspension::contains(FaceView face) const {
  if (face.empty()) return true;
  if (face.back() >= south()) {
    if (face.back() > north()) return false;
    if (face.size() >= 2 && face[face.size() - 2] >= south()) return false;
    return base_->contains(face.first(face.size() - 1));
  }
  return base_->contains(face);
}

void Suspension::for_each_face(const FaceCallback& fn, std::size_t cap) const {
  std::size_t visited = 0;
  auto emit = [&](FaceView f) {
    if (++visited > cap) throw FaceCapExceeded(cap);
    fn(f);
  };
  Face buffer;
  base_->for_each_face(
      [&](FaceView f) {
        emit(f);
        buffer.assign(f.begin(), f.end());
        buffer.push_back(south());
        emit(buffer);
        buffer.back() = north();
        emit(buffer);
      },
      cap);
  Face pole{south()};
  emit(pole);
  pole[0] = north();
  emit(pole);
}

void Suspension::for_each_edge(const std::function<void(VertexId, VertexId)>& fn) const {
  base_->for_each_edge(fn);
  for (VertexId v = 0; v < south(); ++v) {
    fn(v, south());
    fn(v, north());
  }
}

}  // namespace topobound
