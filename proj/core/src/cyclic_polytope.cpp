#include "topobound/cyclic_polytope.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace topobound {

namespace {

void check_range(int d, int n) {
  if (d < 2 || d >= n) throw InvalidArgument("cyclic polytope needs 2 <= d < n");
}

// Scan state while walking 1..n: a run of members is "open" if the previous
// position was a member. An interior run (not starting at 1) must have even
// length when it is closed by a non-member.
struct Run {
  bool open = false;
  bool from_start = false;
  bool odd = false;
};

}  // namespace

bool satisfies_evenness(const std::vector<int>& set, int n) {
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  for (int e : set) {
    if (e < 1 || e > n) return false;
    in[e] = 1;
  }
  int previous_gap = 0;
  int between = 0;
  for (int p = 1; p <= n; ++p) {
    if (in[p]) {
      ++between;
      continue;
    }
    if (previous_gap != 0 && between % 2 != 0) return false;
    previous_gap = p;
    between = 0;
  }
  return true;
}

CyclicFaceTable cyclic_polytope_facets(int d, int n) {
  check_range(d, n);
  CyclicFaceTable table{d, n, {}};
  std::vector<int> current;
  std::function<void(int, Run)> walk = [&](int p, Run run) {
    const int chosen = static_cast<int>(current.size());
    if (chosen > d || chosen + (n - p + 1) < d) return;
    if (p > n) {
      table.facets.push_back(current);
      return;
    }
    current.push_back(p);
    walk(p + 1, Run{true, run.open ? run.from_start : p == 1, run.open ? !run.odd : true});
    current.pop_back();
    if (!(run.open && !run.from_start && run.odd)) walk(p + 1, Run{});
  };
  walk(1, Run{});
  return table;
}

bool is_cyclic_face(const std::vector<int>& set, int d, int n) {
  check_range(d, n);
  std::vector<char> forced(static_cast<std::size_t>(n) + 2, 0);
  for (int e : set) {
    if (e < 1 || e > n) return false;
    forced[e] = 1;
  }
  if (static_cast<int>(set.size()) > d) return false;
  // reach[k][state]: k members chosen so far; state encodes the open run.
  // 0 = no open run, 1 = open from start, 2 = open interior with even
  // length, 3 = open interior with odd length.
  std::vector<std::array<char, 4>> reach(static_cast<std::size_t>(d) + 1, {0, 0, 0, 0});
  reach[0][0] = 1;
  for (int p = 1; p <= n; ++p) {
    std::vector<std::array<char, 4>> next(static_cast<std::size_t>(d) + 1, {0, 0, 0, 0});
    for (int k = 0; k <= d; ++k) {
      for (int s = 0; s < 4; ++s) {
        if (!reach[k][s]) continue;
        if (k < d) {
          int t = s == 0 ? (p == 1 ? 1 : 3) : s == 1 ? 1 : s == 2 ? 3 : 2;
          next[k + 1][t] = 1;
        }
        if (!forced[p] && s != 3) next[k][0] = 1;
      }
    }
    reach.swap(next);
  }
  return std::any_of(reach[d].begin(), reach[d].end(), [](char c) { return c != 0; });
}

std::optional<int> barany_bound_cyclic(const SetSystem& system, std::size_t cap) {
  const int n = system.ground_size();
  SimplicialComplex k = free_complex(system, cap);
  std::vector<std::vector<int>> facets;
  for (const auto& f : k.facets()) {
    std::vector<int> elements;
    for (VertexId v : f) elements.push_back(static_cast<int>(k.labels()[v].atom_value()));
    facets.push_back(std::move(elements));
  }
  for (int d = n - 2; d >= 1; --d) {
    const int dim = n - d;
    bool fits = std::all_of(facets.begin(), facets.end(),
                            [&](const std::vector<int>& f) { return is_cyclic_face(f, dim, n); });
    if (fits) return d;
  }
  return std::nullopt;
}

}  // namespace topobound
