#include "topobound/set_system.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>

namespace topobound {

SetSystem::SetSystem(int ground_size, std::vector<std::vector<int>> sets) : n_(ground_size) {
  if (ground_size < 0) throw InvalidArgument("set system: negative ground size");
  std::set<std::vector<int>> seen;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw InvalidArgument("set system: empty member set");
    if (s.front() < 1 || s.back() > n_) {
      throw InvalidArgument("set system: element outside 1.." + std::to_string(n_));
    }
    if (!seen.insert(s).second) throw InvalidArgument("set system: repeated member set");
  }
  sets_ = std::move(sets);
}

namespace {

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  while (true) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

std::uint64_t mask_of(const std::vector<int>& set) {
  std::uint64_t m = 0;
  for (int e : set) m |= std::uint64_t{1} << (e - 1);
  return m;
}

std::vector<int> elements_of(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i + 1);
  }
  return out;
}

}  // namespace

SetSystem all_k_subsets(int n, int k) {
  if (k < 1 || k > n) throw InvalidArgument("k-subsets need 1 <= k <= n");
  std::vector<std::vector<int>> sets;
  combinations(n, k, [&](const std::vector<int>& c) { sets.push_back(c); });
  return SetSystem(n, std::move(sets));
}

SetSystem stable_subsets(int n, int k) {
  if (k <= 0 || 2 * k >= n) throw InvalidArgument("stable subsets need 0 < 2k < n");
  std::vector<std::vector<int>> sets;
  combinations(n, k, [&](const std::vector<int>& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (c[i + 1] == c[i] + 1) return;
    }
    if (c.front() == 1 && c.back() == n) return;
    sets.push_back(c);
  });
  return SetSystem(n, std::move(sets));
}

Graph kneser_graph_of(const SetSystem& system) {
  std::vector<Graph::Edge> edges;
  const auto& sets = system.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(common));
      if (common.empty()) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph(sets.size(), edges);
}

SimplicialComplex free_complex(const SetSystem& system, std::size_t cap) {
  const int n = system.ground_size();
  std::vector<std::vector<std::size_t>> containing(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (int e : system[i]) containing[e].push_back(i);
  }
  std::vector<char> in_face(static_cast<std::size_t>(n) + 1, 0);
  auto allowed = [&](int v) {
    for (std::size_t i : containing[v]) {
      bool inside = std::all_of(system[i].begin(), system[i].end(),
                                [&](int e) { return e == v || in_face[e]; });
      if (inside) return false;
    }
    return true;
  };
  std::vector<int> vertices;
  for (int v = 1; v <= n; ++v) {
    if (allowed(v)) vertices.push_back(v);
  }
  std::vector<Label> labels;
  for (int v : vertices) labels.push_back(Label::atom(v));

  std::vector<Face> faces;
  Face current;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    for (std::size_t i = from; i < vertices.size(); ++i) {
      const int v = vertices[i];
      if (!allowed(v)) continue;
      if (faces.size() + 1 >= cap) throw FaceCapExceeded(cap, "free complex");
      in_face[v] = 1;
      current.push_back(static_cast<VertexId>(i));
      faces.push_back(current);
      grow(i + 1);
      current.pop_back();
      in_face[v] = 0;
    }
  };
  grow(0);
  return SimplicialComplex::from_closed_family(std::move(labels), std::move(faces), cap);
}

int deleted_join_dimension(const SimplicialComplex& k) {
  const std::size_t n = k.vertex_count();
  if (n == 0) return -1;
  const std::size_t face_total = k.face_count();
  const double pair_cost = static_cast<double>(face_total) * static_cast<double>(face_total);
  const double dp_cost = n <= 24 ? static_cast<double>(n) * static_cast<double>(1ULL << n) : 1e300;

  std::vector<FaceView> faces{FaceView{}};
  for (std::size_t s = 1; s <= static_cast<std::size_t>(k.dimension() + 1); ++s) {
    for (std::size_t i = 0; i < k.count(s); ++i) faces.push_back(k.face(s, i));
  }
  int best = 0;
  if (n <= 64) {
    std::vector<std::uint64_t> masks;
    masks.reserve(faces.size());
    for (FaceView f : faces) {
      std::uint64_t m = 0;
      for (VertexId v : f) m |= std::uint64_t{1} << v;
      masks.push_back(m);
    }
    if (dp_cost < pair_cost) {
      // largest[M] = size of a largest face inside M.
      std::vector<std::uint8_t> largest(std::size_t{1} << n, 0);
      for (std::uint64_t m : masks) largest[m] = static_cast<std::uint8_t>(std::popcount(m));
      for (std::uint64_t m = 1; m < largest.size(); ++m) {
        for (std::uint64_t rest = m; rest; rest &= rest - 1) {
          largest[m] = std::max(largest[m], largest[m & ~(rest & -rest)]);
        }
      }
      const std::uint64_t all = (std::uint64_t{1} << n) - 1;
      for (std::uint64_t m : masks) {
        best = std::max(best, std::popcount(m) + static_cast<int>(largest[all & ~m]));
      }
    } else {
      for (std::size_t i = 0; i < masks.size(); ++i) {
        for (std::size_t j = i; j < masks.size(); ++j) {
          if ((masks[i] & masks[j]) == 0) {
            best = std::max(best, std::popcount(masks[i]) + std::popcount(masks[j]));
          }
        }
      }
    }
  } else {
    for (FaceView a : faces) {
      for (FaceView b : faces) {
        bool disjoint = std::none_of(a.begin(), a.end(), [&](VertexId v) {
          return std::binary_search(b.begin(), b.end(), v);
        });
        if (disjoint) best = std::max(best, static_cast<int>(a.size() + b.size()));
      }
    }
  }
  return best - 1;
}

bool verify_cd2_certificate(const SetSystem& system, const Cd2Certificate& c) {
  const int n = system.ground_size();
  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  auto paint = [&](const std::vector<int>& part, int value) {
    for (int e : part) {
      if (e < 1 || e > n || color[e] != -1) return false;
      color[e] = value;
    }
    return true;
  };
  if (!paint(c.white, 0) || !paint(c.red, 1) || !paint(c.blue, 2)) return false;
  for (int e = 1; e <= n; ++e) {
    if (color[e] == -1) return false;
  }
  if (c.value != static_cast<int>(c.white.size())) return false;
  for (const auto& s : system.sets()) {
    bool all_red = true;
    bool all_blue = true;
    for (int e : s) {
      all_red = all_red && color[e] == 1;
      all_blue = all_blue && color[e] == 2;
    }
    if (all_red || all_blue) return false;
  }
  return true;
}

namespace {

class Cd2Search {
 public:
  Cd2Search(const SetSystem& system, std::size_t budget) : n_(system.ground_size()), budget_(budget) {
    for (const auto& s : system.sets()) masks_.push_back(mask_of(s));
  }

  Cd2Certificate run() {
    for (int w = 0; w <= n_; ++w) {
      std::optional<Cd2Certificate> found;
      auto try_white = [&](std::uint64_t white) {
        if (found) return;
        if (auto c = color_rest(white)) found = c;
      };
      if (w == 0) {
        try_white(0);
      } else {
        combinations(n_, w, [&](const std::vector<int>& c) { try_white(mask_of(c)); });
      }
      if (found) return *found;
    }
    throw Error("cd2: no certificate found");  // unreachable: Y = [n] always works
  }

 private:
  std::optional<Cd2Certificate> color_rest(std::uint64_t white) {
    surviving_.clear();
    for (auto m : masks_) {
      if ((m & white) == 0) surviving_.push_back(m);
    }
    free_.clear();
    for (int e = 0; e < n_; ++e) {
      if (!((white >> e) & 1)) free_.push_back(e);
    }
    red_ = blue_ = 0;
    if (!assign(0)) return std::nullopt;
    Cd2Certificate c;
    c.white = elements_of(white);
    c.red = elements_of(red_);
    c.blue = elements_of(blue_);
    c.value = static_cast<int>(c.white.size());
    return c;
  }

  bool monochromatic(std::uint64_t colored) const {
    for (auto m : surviving_) {
      if ((m & ~colored) != 0) continue;
      if ((m & red_) == m || (m & blue_) == m) return true;
    }
    return false;
  }

  bool assign(std::size_t index) {
    if (++nodes_ > budget_) throw BudgetExhausted("cd2: node budget exhausted");
    if (index == free_.size()) return true;
    const std::uint64_t bit = std::uint64_t{1} << free_[index];
    std::uint64_t colored = 0;
    for (std::size_t i = 0; i <= index; ++i) colored |= std::uint64_t{1} << free_[i];
    // The first free element is red without loss of generality.
    for (int side = 0; side < (index == 0 ? 1 : 2); ++side) {
      (side == 0 ? red_ : blue_) |= bit;
      if (!monochromatic(colored) && assign(index + 1)) return true;
      (side == 0 ? red_ : blue_) &= ~bit;
    }
    return false;
  }

  int n_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> surviving_;
  std::vector<int> free_;
  std::uint64_t red_ = 0;
  std::uint64_t blue_ = 0;
};

}  // namespace

Cd2Result cd2(const SetSystem& system, Cd2Method method, std::size_t budget, std::size_t cap) {
  Cd2Result result;
  if (method == Cd2Method::via_dim) {
    result.value = system.ground_size() - 1 - deleted_join_dimension(free_complex(system, cap));
    return result;
  }
  if (system.ground_size() > 63) throw ResourceLimit("cd2 brute force: ground set too large");
  if (budget == 0) throw InvalidArgument("cd2: budget must be positive");
  Cd2Search search(system, budget);
  result.certificate = search.run();
  result.value = result.certificate->value;
  return result;
}

}  // namespace topobound
