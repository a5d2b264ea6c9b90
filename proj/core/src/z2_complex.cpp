#include "topobound/z2_complex.hpp"

#include <algorithm>

namespace topobound {

namespace {

constexpr VertexId kUnmapped = static_cast<VertexId>(-1);

bool canonical_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct Checker {
  const Complex& source;
  const Complex& target;
  const std::vector<VertexId>& images;
  std::optional<Face> worst;
  std::size_t checked = 0;
  Face image;

  void check(FaceView face) {
    ++checked;
    image.clear();
    for (VertexId v : face) image.push_back(images[v]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (target.contains(image)) return;
    Face f(face.begin(), face.end());
    if (!worst || canonical_less(f, *worst)) worst = std::move(f);
  }
};

SimplicialMapCheck check_ids(const Complex& source, const Complex& target,
                             const std::vector<VertexId>& images, std::size_t cap) {
  SimplicialMapCheck result;
  if (images.size() != source.vertex_count()) {
    throw InvalidArgument("vertex map size does not match the source complex");
  }
  for (VertexId v = 0; v < images.size(); ++v) {
    if (images[v] == kUnmapped || images[v] >= target.vertex_count()) {
      result.simplicial = result.verdict = false;
      MapViolation viol;
      viol.kind = MapViolation::Kind::unmapped_vertex;
      viol.face = {v};
      viol.face_labels = {source.vertex_label(v)};
      result.violation = std::move(viol);
      return result;
    }
  }
  Checker checker{source, target, images, std::nullopt, 0, {}};
  for (VertexId v = 0; v < images.size(); ++v) {
    Face single{v};
    checker.check(single);
  }
  if (!checker.worst) {
    if (source.is_flag() && target.is_flag()) {
      Face edge(2);
      source.for_each_edge([&](VertexId a, VertexId b) {
        edge[0] = a;
        edge[1] = b;
        checker.check(edge);
      });
    } else {
      source.for_each_face(
          [&](FaceView f) {
            if (f.size() > 1) checker.check(f);
          },
          cap);
    }
  }
  result.checked = checker.checked;
  if (checker.worst) {
    result.simplicial = result.verdict = false;
    MapViolation viol;
    viol.kind = MapViolation::Kind::face_not_preserved;
    viol.face = *checker.worst;
    viol.face_labels = source.face_labels(viol.face);
    for (VertexId v : viol.face) viol.image_labels.push_back(target.vertex_label(images[v]));
    result.violation = std::move(viol);
  }
  return result;
}

std::vector<VertexId> resolve(const Complex& target, const std::vector<Label>& images) {
  std::vector<VertexId> ids(images.size(), kUnmapped);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (auto id = target.find_vertex(images[i])) ids[i] = *id;
  }
  return ids;
}

void attach_unmapped_image(SimplicialMapCheck& check, const std::vector<Label>& images) {
  if (check.violation && check.violation->kind == MapViolation::Kind::unmapped_vertex) {
    check.violation->image_labels = {images[check.violation->face[0]]};
  }
}

}  // namespace

std::string to_string(MapViolation::Kind kind) {
  switch (kind) {
    case MapViolation::Kind::unmapped_vertex:
      return "unmapped_vertex";
    case MapViolation::Kind::face_not_preserved:
      return "face_not_preserved";
    case MapViolation::Kind::not_equivariant:
      return "not_equivariant";
  }
  return "unknown";
}

Z2Complex::Z2Complex(ComplexPtr complex, std::vector<VertexId> action, std::size_t cap)
    : complex_(std::move(complex)), action_(std::move(action)) {
  if (!complex_) throw InvalidArgument("Z2 complex over a null complex");
  const std::size_t n = complex_->vertex_count();
  if (action_.size() != n) throw InvalidArgument("action size does not match vertex count");
  for (VertexId v = 0; v < n; ++v) {
    if (action_[v] >= n || action_[action_[v]] != v) {
      throw InvalidArgument("action is not an involution at " + complex_->vertex_label(v).to_string());
    }
  }
  auto check = check_ids(*complex_, *complex_, action_, cap);
  if (!check.simplicial) throw InvalidArgument("action does not map faces to faces");
  for (VertexId v = 0; v < n && free_; ++v) {
    if (action_[v] == v) {
      free_ = false;
    } else {
      Face edge{std::min(v, action_[v]), std::max(v, action_[v])};
      if (complex_->contains(edge)) free_ = false;
    }
  }
}

Z2Complex Z2Complex::from_label_action(ComplexPtr complex,
                                       const std::function<Label(const Label&)>& action,
                                       std::size_t cap) {
  if (!complex) throw InvalidArgument("Z2 complex over a null complex");
  std::vector<VertexId> ids(complex->vertex_count());
  for (VertexId v = 0; v < ids.size(); ++v) {
    Label image = action(complex->vertex_label(v));
    auto id = complex->find_vertex(image);
    if (!id) throw InvalidArgument("action leaves the vertex set: " + image.to_string());
    ids[v] = *id;
  }
  return Z2Complex(std::move(complex), std::move(ids), cap);
}

SimplicialMapCheck verify_simplicial_map(const Complex& source, const Complex& target,
                                         const std::vector<VertexId>& images, std::size_t cap) {
  return check_ids(source, target, images, cap);
}

SimplicialMapCheck verify_simplicial_map(const Complex& source, const Complex& target,
                                         const std::vector<Label>& images, std::size_t cap) {
  auto check = check_ids(source, target, resolve(target, images), cap);
  attach_unmapped_image(check, images);
  return check;
}

SimplicialMapCheck verify_z2_map(const Z2Complex& source, const Z2Complex& target,
                                 const std::vector<Label>& images, std::size_t cap) {
  auto ids = resolve(target.complex(), images);
  auto check = check_ids(source.complex(), target.complex(), ids, cap);
  attach_unmapped_image(check, images);
  if (check.violation && check.violation->kind == MapViolation::Kind::unmapped_vertex) {
    check.equivariant = false;
    return check;
  }
  for (VertexId v = 0; v < ids.size(); ++v) {
    if (ids[source.act(v)] != target.act(ids[v])) {
      check.equivariant = false;
      check.verdict = false;
      if (!check.violation) {
        MapViolation viol;
        viol.kind = MapViolation::Kind::not_equivariant;
        viol.face = {v};
        viol.face_labels = {source.complex().vertex_label(v)};
        viol.image_labels = {images[v], images[source.act(v)]};
        check.violation = std::move(viol);
      }
      break;
    }
  }
  return check;
}

std::vector<Label> map_labels(const Complex& source, const std::function<Label(const Label&)>& fn) {
  std::vector<Label> out;
  out.reserve(source.vertex_count());
  for (VertexId v = 0; v < source.vertex_count(); ++v) out.push_back(fn(source.vertex_label(v)));
  return out;
}

}  // namespace topobound
