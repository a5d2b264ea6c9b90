#include <algorithm>
#include <map>

#include "topobound/set_system.hpp"

namespace topobound {

namespace {

std::vector<Graph::Edge> non_edges(const Graph& graph) {
  std::vector<Graph::Edge> out;
  const int n = static_cast<int>(graph.vertex_count());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!graph.adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

SetSystem augmented(const Graph& graph) {
  const int n = static_cast<int>(graph.vertex_count());
  auto missing = non_edges(graph);
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) sets[v].push_back(v + 1);
  for (std::size_t i = 0; i < missing.size(); ++i) {
    const int element = n + 1 + static_cast<int>(i);
    sets[missing[i].first].push_back(element);
    sets[missing[i].second].push_back(element);
  }
  return SetSystem(n + static_cast<int>(missing.size()), std::move(sets));
}

}  // namespace

std::vector<std::vector<int>> complement_clique_cover(const Graph& graph) {
  const int n = static_cast<int>(graph.vertex_count());
  std::vector<std::vector<char>> covered(n, std::vector<char>(n, 0));
  std::vector<std::vector<int>> cover;
  for (const auto& [u, v] : non_edges(graph)) {
    if (covered[u][v]) continue;
    std::vector<int> clique{u, v};
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      bool fits = std::none_of(clique.begin(), clique.end(),
                               [&](int x) { return graph.adjacent(x, w) || x == w; });
      if (fits) clique.push_back(w);
    }
    std::sort(clique.begin(), clique.end());
    for (int a : clique) {
      for (int b : clique) covered[a][b] = 1;
    }
    cover.push_back(std::move(clique));
  }
  return cover;
}

SetSystem kneser_representation_from_cover(const Graph& graph,
                                           const std::vector<std::vector<int>>& cover) {
  const int n = static_cast<int>(graph.vertex_count());
  std::vector<std::vector<char>> covered(n, std::vector<char>(n, 0));
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const auto& clique = cover[i];
    for (int a : clique) {
      if (a < 0 || a >= n) throw InvalidArgument("clique cover: vertex out of range");
      for (int b : clique) {
        if (a != b && graph.adjacent(a, b)) {
          throw InvalidArgument("clique cover: member is not a clique of the complement");
        }
        covered[a][b] = 1;
      }
      sets[a].push_back(static_cast<int>(i) + 1);
    }
  }
  for (const auto& [u, v] : non_edges(graph)) {
    if (!covered[u][v]) throw InvalidArgument("clique cover: a non-edge is not covered");
  }
  int ground = static_cast<int>(cover.size());
  std::map<std::vector<int>, int> first_owner;
  for (int v = 0; v < n; ++v) {
    std::sort(sets[v].begin(), sets[v].end());
    sets[v].erase(std::unique(sets[v].begin(), sets[v].end()), sets[v].end());
    if (sets[v].empty() || !first_owner.emplace(sets[v], v).second) {
      sets[v].push_back(++ground);
    }
  }
  return SetSystem(ground, std::move(sets));
}

SetSystem kneser_representation(const Graph& graph, KneserMode mode) {
  if (mode == KneserMode::augmented) return augmented(graph);
  return kneser_representation_from_cover(graph, complement_clique_cover(graph));
}

}  // namespace topobound
