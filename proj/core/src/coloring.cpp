#include "topobound/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace topobound {

bool is_proper(const Graph& graph, const Coloring& coloring) {
  if (coloring.colors.size() != graph.vertex_count()) return false;
  for (const auto& [u, v] : graph.edges()) {
    if (coloring.colors[u] == coloring.colors[v]) return false;
  }
  std::set<int> used(coloring.colors.begin(), coloring.colors.end());
  return static_cast<int>(used.size()) == coloring.colors_used;
}

Coloring greedy_coloring(const Graph& graph, const std::vector<int>& order) {
  const std::size_t n = graph.vertex_count();
  if (order.size() != n) throw InvalidArgument("greedy_coloring: order is not a permutation");
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) {
      throw InvalidArgument("greedy_coloring: order is not a permutation");
    }
    seen[v] = 1;
  }
  Coloring out{std::vector<int>(n, -1), 0};
  std::vector<char> taken;
  for (int v : order) {
    taken.assign(static_cast<std::size_t>(out.colors_used) + 1, 0);
    const auto& nb = graph.neighbors(v);
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
      if (out.colors[u] >= 0) taken[out.colors[u]] = 1;
    }
    int c = 0;
    while (taken[c]) ++c;
    out.colors[v] = c;
    out.colors_used = std::max(out.colors_used, c + 1);
  }
  return out;
}

std::vector<int> degree_order(const Graph& graph) {
  std::vector<int> order(graph.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return graph.degree(a) > graph.degree(b); });
  return order;
}

int greedy_clique_size(const Graph& graph) {
  std::vector<int> clique;
  for (int v : degree_order(graph)) {
    bool ok = std::all_of(clique.begin(), clique.end(), [&](int u) { return graph.adjacent(u, v); });
    if (ok) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

namespace {

class DsaturSearch {
 public:
  DsaturSearch(const Graph& graph, std::size_t budget) : budget_(budget) {
    const std::size_t n = graph.vertex_count();
    adj_.resize(n);
    degree_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      adj_[v] = members_of(graph.neighbors(static_cast<int>(v)));
      degree_[v] = static_cast<int>(adj_[v].size());
    }
  }

  /// Finds a proper k-coloring or returns false.
  bool colorable(int k, std::vector<int>& colors) {
    const std::size_t n = adj_.size();
    k_ = k;
    colors_.assign(n, -1);
    conflicts_.assign(n * static_cast<std::size_t>(k), 0);
    saturation_.assign(n, 0);
    bool found = search(0, 0);
    if (found) colors = colors_;
    return found;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  int select_vertex() const {
    int best = -1;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (colors_[v] >= 0) continue;
      if (best < 0 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && degree_[v] > degree_[best])) {
        best = static_cast<int>(v);
      }
    }
    return best;
  }

  void assign(int v, int c, int delta) {
    for (int u : adj_[v]) {
      int& count = conflicts_[static_cast<std::size_t>(u) * k_ + c];
      if (delta > 0 && count++ == 0) ++saturation_[u];
      if (delta < 0 && --count == 0) --saturation_[u];
    }
  }

  bool search(std::size_t colored, int used) {
    if (++nodes_ > budget_) throw BudgetExhausted("exact coloring: node budget exhausted");
    if (colored == adj_.size()) return true;
    int v = select_vertex();
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (conflicts_[static_cast<std::size_t>(v) * k_ + c] > 0) continue;
      colors_[v] = c;
      assign(v, c, +1);
      if (search(colored + 1, std::max(used, c + 1))) return true;
      assign(v, c, -1);
      colors_[v] = -1;
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> degree_;
  std::vector<int> colors_;
  std::vector<int> conflicts_;
  std::vector<int> saturation_;
  int k_ = 0;
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

Coloring finish(std::vector<int> colors) {
  Coloring c{std::move(colors), 0};
  std::set<int> used(c.colors.begin(), c.colors.end());
  c.colors_used = static_cast<int>(used.size());
  return c;
}

}  // namespace

Coloring exact_coloring(const Graph& graph, std::size_t budget) {
  if (graph.vertex_count() == 0) throw InvalidArgument("exact_coloring: empty graph");
  if (budget == 0) throw InvalidArgument("exact_coloring: budget must be positive");
  Coloring upper = greedy_coloring(graph, degree_order(graph));
  const int lower = greedy_clique_size(graph);
  DsaturSearch search(graph, budget);
  for (int k = lower; k < upper.colors_used; ++k) {
    std::vector<int> colors;
    if (search.colorable(k, colors)) return finish(std::move(colors));
  }
  return upper;
}

int exact_chromatic_number(const Graph& graph, std::size_t budget) {
  return exact_coloring(graph, budget).colors_used;
}

VertexMap coloring_as_map(const Graph& graph, const Coloring& coloring, int palette) {
  if (!is_proper(graph, coloring)) throw InvalidArgument("coloring_as_map: coloring is not proper");
  int m = std::max(coloring.colors_used, palette);
  int max_color = 0;
  for (int c : coloring.colors) max_color = std::max(max_color, c + 1);
  m = std::max(m, max_color);
  return VertexMap{graph, complete_graph(m), coloring.colors};
}

}  // namespace topobound
