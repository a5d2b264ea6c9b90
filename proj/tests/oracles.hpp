#pragma once

// Slow, direct implementations used to cross-check the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>
#include <vector>

#include "topobound/graph.hpp"
#include "topobound/set_system.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline bool adjacent(const topobound::Graph& g, int u, int v) { return g.adjacent(u, v); }

/// CN(A) straight from the adjacency test.
inline Mask common_neighbors(const topobound::Graph& g, Mask a) {
  const int n = static_cast<int>(g.vertex_count());
  Mask out = 0;
  for (int w = 0; w < n; ++w) {
    bool ok = true;
    for (int v = 0; v < n; ++v) {
      if ((a >> v & 1) && !adjacent(g, v, w)) ok = false;
    }
    if (ok) out |= Mask{1} << w;
  }
  return out;
}

inline bool complete_between(const topobound::Graph& g, Mask a, Mask b) {
  const int n = static_cast<int>(g.vertex_count());
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if ((a >> u & 1) && (b >> v & 1) && !adjacent(g, u, v)) return false;
    }
  }
  return true;
}

/// Every shore pair (A', A'') of disjoint vertex sets, via base-3 counting.
template <typename Fn>
void for_each_shore_pair(int n, Fn fn) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mask a = 0, b = 0;
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i, c /= 3) {
      if (c % 3 == 1) a |= Mask{1} << i;
      if (c % 3 == 2) b |= Mask{1} << i;
    }
    fn(a, b);
  }
}

/// Faces of B (with_common) or B0, as sorted shore pairs, including the empty face.
inline std::set<std::pair<Mask, Mask>> box_faces(const topobound::Graph& g, bool with_common) {
  std::set<std::pair<Mask, Mask>> faces;
  const int n = static_cast<int>(g.vertex_count());
  for_each_shore_pair(n, [&](Mask a, Mask b) {
    if (!complete_between(g, a, b)) return;
    if (with_common && (common_neighbors(g, a) == 0 || common_neighbors(g, b) == 0)) return;
    faces.insert({a, b});
  });
  return faces;
}

/// Elements of the B1 poset: both shores nonempty, complete between them.
inline std::vector<std::pair<Mask, Mask>> b1_elements(const topobound::Graph& g) {
  std::vector<std::pair<Mask, Mask>> out;
  for_each_shore_pair(static_cast<int>(g.vertex_count()), [&](Mask a, Mask b) {
    if (a && b && complete_between(g, a, b)) out.push_back({a, b});
  });
  return out;
}

/// Chromatic number by plain backtracking over color classes.
inline int chromatic_number(const topobound::Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  if (n == 0) return 0;
  std::vector<int> color(n, -1);
  for (int k = 1; k <= n; ++k) {
    std::function<bool(int, int)> place = [&](int v, int used) -> bool {
      if (v == n) return true;
      for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u) {
          if (color[u] == c && adjacent(g, u, v)) ok = false;
        }
        if (!ok) continue;
        color[v] = c;
        if (place(v + 1, std::max(used, c + 1))) return true;
      }
      color[v] = -1;
      return false;
    };
    if (place(0, 0)) return k;
  }
  return n;
}

inline std::vector<Mask> member_masks(const topobound::SetSystem& f) {
  std::vector<Mask> out;
  for (const auto& s : f.sets()) {
    Mask m = 0;
    for (int e : s) m |= Mask{1} << (e - 1);
    out.push_back(m);
  }
  return out;
}

/// cd2 from its definition: fewest white points so that the members
/// avoiding them admit a red/blue coloring with none monochromatic.
inline int cd2(const topobound::SetSystem& f) {
  const int n = f.ground_size();
  const auto members = member_masks(f);
  const Mask all = (Mask{1} << n) - 1;
  int best = n;
  for (Mask white = 0; white <= all; ++white) {
    const int w = __builtin_popcountll(white);
    if (w >= best) continue;
    const Mask rest = all & ~white;
    bool found = false;
    for (Mask red = rest;; red = (red - 1) & rest) {
      const Mask blue = rest & ~red;
      bool ok = true;
      for (Mask m : members) {
        if ((m & white) == 0 && ((m & red) == m || (m & blue) == m)) ok = false;
      }
      if (ok) {
        found = true;
        break;
      }
      if (red == 0) break;
    }
    if (found) best = w;
  }
  return best;
}

/// max |S1|+|S2|-1 over disjoint sets containing no member of F.
inline int deleted_join_dimension(const topobound::SetSystem& f) {
  const int n = f.ground_size();
  const auto members = member_masks(f);
  auto free_set = [&](Mask s) {
    return std::none_of(members.begin(), members.end(), [&](Mask m) { return (m & s) == m; });
  };
  int best = -1;
  for_each_shore_pair(n, [&](Mask a, Mask b) {
    if (free_set(a) && free_set(b)) {
      best = std::max(best, __builtin_popcountll(a) + __builtin_popcountll(b) - 1);
    }
  });
  return best;
}

/// GF(2) rank as log2 of the size of the row span (rows as bit masks).
inline std::size_t span_rank(const std::vector<Mask>& rows) {
  std::unordered_set<Mask> span{0};
  for (Mask r : rows) {
    if (span.count(r)) continue;
    std::vector<Mask> added;
    for (Mask s : span) added.push_back(s ^ r);
    span.insert(added.begin(), added.end());
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

/// Reduced mod-2 Betti numbers of a complex given by all of its faces
/// (vertex ids < 64, empty face included), via span ranks.
inline std::vector<std::size_t> reduced_betti(const std::set<Mask>& faces) {
  std::map<int, std::vector<Mask>> by_dim;
  for (Mask f : faces) by_dim[__builtin_popcountll(f) - 1].push_back(f);
  const int top = by_dim.rbegin()->first;
  // rank of the boundary from dimension d to d-1, rows indexed by d-faces.
  auto boundary_rank = [&](int d) -> std::size_t {
    if (d < 0 || !by_dim.count(d)) return 0;
    const auto& lower = by_dim[d - 1];
    std::map<Mask, int> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = static_cast<int>(i);
    if (lower.size() > 64) throw std::runtime_error("span oracle limited to 64 columns");
    std::vector<Mask> rows;
    for (Mask f : by_dim[d]) {
      Mask row = 0;
      for (Mask rest = f; rest; rest &= rest - 1) {
        row |= Mask{1} << index.at(f & ~(rest & -rest));
      }
      rows.push_back(row);
    }
    return span_rank(rows);
  };
  std::vector<std::size_t> betti;
  for (int d = 0; d <= top; ++d) {
    const std::size_t faces_d = by_dim.count(d) ? by_dim[d].size() : 0;
    betti.push_back(faces_d - boundary_rank(d) - boundary_rank(d + 1));
  }
  return betti;
}

/// Downward closure of a list of face masks.
inline std::set<Mask> closure(const std::vector<Mask>& generators) {
  std::set<Mask> out;
  for (Mask g : generators) {
    for (Mask s = g;; s = (s - 1) & g) {
      out.insert(s);
      if (s == 0) break;
    }
  }
  return out;
}

/// Facets of C_d(n) from the moment curve: a d-subset is a facet iff all
/// other points lie strictly on one side of its affine hull. Exact
/// integer determinants.
inline std::vector<std::vector<int>> cyclic_facets_geometric(int d, int n) {
  using boost::multiprecision::cpp_int;
  auto point = [&](int t) {
    std::vector<cpp_int> p(d + 1);
    p[0] = 1;
    for (int i = 1; i <= d; ++i) p[i] = p[i - 1] * t;
    return p;
  };
  auto det = [](std::vector<std::vector<cpp_int>> a) {
    const std::size_t m = a.size();
    cpp_int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      if (a[k][k] == 0) {
        std::size_t r = k + 1;
        while (r < m && a[r][k] == 0) ++r;
        if (r == m) return cpp_int(0);
        std::swap(a[k], a[r]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < m; ++i) {
        for (std::size_t j = k + 1; j < m; ++j) {
          a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
      }
      prev = a[k][k];
    }
    return cpp_int(sign * a[m - 1][m - 1]);
  };
  std::vector<std::vector<int>> facets;
  std::vector<int> chosen;
  std::function<void(int)> pick = [&](int from) {
    if (static_cast<int>(chosen.size()) == d) {
      int side = 0;
      bool ok = true;
      for (int t = 1; t <= n && ok; ++t) {
        if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) continue;
        std::vector<std::vector<cpp_int>> rows;
        for (int c : chosen) rows.push_back(point(c));
        rows.push_back(point(t));
        const cpp_int v = det(rows);
        const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0 || (side != 0 && s != side)) ok = false;
        side = s;
      }
      if (ok) facets.push_back(chosen);
      return;
    }
    for (int t = from; t <= n; ++t) {
      chosen.push_back(t);
      pick(t + 1);
      chosen.pop_back();
    }
  };
  pick(1);
  return facets;
}

}  // namespace oracle
