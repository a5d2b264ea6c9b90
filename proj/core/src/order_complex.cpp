#include "topobound/order_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace topobound {

OrderComplex::OrderComplex(std::vector<Label> atoms, std::vector<std::vector<VertexId>> elements) {
  std::vector<VertexId> order(atoms.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return atoms[a] < atoms[b]; });
  std::vector<VertexId> new_id(atoms.size());
  atoms_.reserve(atoms.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && atoms[order[i]] == atoms[order[i - 1]]) {
      throw InvalidArgument("order complex: repeated atom " + atoms[order[i]].to_string());
    }
    new_id[order[i]] = static_cast<VertexId>(i);
    atoms_.push_back(atoms[order[i]]);
  }
  for (auto& e : elements) {
    if (e.empty()) throw InvalidArgument("order complex: empty element");
    for (auto& a : e) {
      if (a >= new_id.size()) throw InvalidArgument("order complex: atom id out of range");
      a = new_id[a];
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidArgument("order complex: element repeats an atom");
    }
  }
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw InvalidArgument("order complex: repeated element");
  }
  offsets_.reserve(elements.size() + 1);
  offsets_.push_back(0);
  for (const auto& e : elements) {
    data_.insert(data_.end(), e.begin(), e.end());
    offsets_.push_back(data_.size());
  }
}

FaceView OrderComplex::element(VertexId v) const {
  return FaceView(data_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]);
}

Label OrderComplex::vertex_label(VertexId v) const {
  if (v >= vertex_count()) throw InvalidArgument("vertex id out of range");
  std::vector<Label> members;
  for (VertexId a : element(v)) members.push_back(atoms_[a]);
  return Label::set(std::move(members));
}

std::optional<VertexId> OrderComplex::find_element(FaceView sorted_atoms) const {
  std::size_t lo = 0;
  std::size_t hi = vertex_count();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto e = element(static_cast<VertexId>(mid));
    if (std::lexicographical_compare(e.begin(), e.end(), sorted_atoms.begin(), sorted_atoms.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < vertex_count()) {
    auto e = element(static_cast<VertexId>(lo));
    if (std::equal(e.begin(), e.end(), sorted_atoms.begin(), sorted_atoms.end())) {
      return static_cast<VertexId>(lo);
    }
  }
  return std::nullopt;
}

std::optional<VertexId> OrderComplex::find_vertex(const Label& label) const {
  if (!label.is_set() || label.members().empty()) return std::nullopt;
  std::vector<VertexId> ids;
  ids.reserve(label.members().size());
  for (const auto& m : label.members()) {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), m);
    if (it == atoms_.end() || *it != m) return std::nullopt;
    ids.push_back(static_cast<VertexId>(it - atoms_.begin()));
  }
  return find_element(ids);
}

bool OrderComplex::below(VertexId a, VertexId b) const {
  auto x = element(a);
  auto y = element(b);
  return x.size() < y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end());
}

bool OrderComplex::contains(FaceView face) const {
  if (face.empty()) return true;
  std::vector<VertexId> chain(face.begin(), face.end());
  for (VertexId v : chain) {
    if (v >= vertex_count()) return false;
  }
  std::sort(chain.begin(), chain.end(),
            [&](VertexId a, VertexId b) { return element(a).size() < element(b).size(); });
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!below(chain[i - 1], chain[i])) return false;
  }
  return true;
}

void OrderComplex::for_each_pair(const std::function<void(VertexId, VertexId)>& fn) const {
  const std::size_t n = vertex_count();
  double pairwise = 0.5 * static_cast<double>(n) * static_cast<double>(n);
  double by_subsets = 0;
  for (VertexId v = 0; v < n; ++v) by_subsets += std::ldexp(1.0, static_cast<int>(element(v).size()));

  if (by_subsets < pairwise) {
    std::unordered_map<Face, VertexId, FaceHash> index;
    index.reserve(n);
    for (VertexId v = 0; v < n; ++v) {
      auto e = element(v);
      index.emplace(Face(e.begin(), e.end()), v);
    }
    Face sub;
    for (VertexId y = 0; y < n; ++y) {
      auto e = element(y);
      const std::uint64_t full = (std::uint64_t{1} << e.size()) - 1;
      for (std::uint64_t mask = 1; mask < full; ++mask) {
        sub.clear();
        for (std::size_t i = 0; i < e.size(); ++i) {
          if ((mask >> i) & 1) sub.push_back(e[i]);
        }
        auto it = index.find(sub);
        if (it != index.end()) fn(it->second, y);
      }
    }
    return;
  }
  std::vector<VertexId> by_size(n);
  std::iota(by_size.begin(), by_size.end(), VertexId{0});
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](VertexId a, VertexId b) { return element(a).size() < element(b).size(); });
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (below(by_size[i], by_size[j])) fn(by_size[i], by_size[j]);
    }
  }
}

void OrderComplex::for_each_edge(const std::function<void(VertexId, VertexId)>& fn) const {
  for_each_pair([&](VertexId x, VertexId y) { fn(std::min(x, y), std::max(x, y)); });
}

void OrderComplex::build_up_lists() const {
  std::call_once(up_once_, [this] {
    const std::size_t n = vertex_count();
    up_.assign(n, {});
    for_each_pair([&](VertexId x, VertexId y) { up_[x].push_back(y); });
    for (auto& u : up_) std::sort(u.begin(), u.end());
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return element(a).size() < element(b).size(); });
    std::vector<int> length(n, 1);
    int longest = 0;
    for (VertexId x : order) {
      longest = std::max(longest, length[x]);
      for (VertexId y : up_[x]) length[y] = std::max(length[y], length[x] + 1);
    }
    dimension_ = longest - 1;
  });
}

std::size_t OrderComplex::comparable_pairs() const {
  build_up_lists();
  std::size_t total = 0;
  for (const auto& u : up_) total += u.size();
  return total;
}

int OrderComplex::dimension() const {
  build_up_lists();
  return dimension_;
}

void OrderComplex::for_each_face(const FaceCallback& fn, std::size_t cap) const {
  build_up_lists();
  std::size_t visited = 0;
  std::vector<VertexId> chain;
  Face sorted;
  std::function<void()> extend = [&] {
    if (++visited > cap) throw FaceCapExceeded(cap, "order complex chains");
    sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    fn(sorted);
    for (VertexId y : up_[chain.back()]) {
      chain.push_back(y);
      extend();
      chain.pop_back();
    }
  };
  for (VertexId x = 0; x < vertex_count(); ++x) {
    chain.assign(1, x);
    extend();
  }
}

}  // namespace topobound
