#pragma once

#include <cstddef>
#include <vector>

#include "topobound/error.hpp"
#include "topobound/graph.hpp"

namespace topobound {

/// Vertex coloring with colors 0..colors_used-1.
struct Coloring {
  std::vector<int> colors;
  int colors_used = 0;
};

bool is_proper(const Graph& graph, const Coloring& coloring);

/// Colors vertices in `order`, each with the least color not used by an
/// already colored neighbor. Throws InvalidArgument unless `order` is a
/// permutation of V(G).
Coloring greedy_coloring(const Graph& graph, const std::vector<int>& order);

/// Vertices sorted by descending degree, ties by index.
std::vector<int> degree_order(const Graph& graph);

/// Optimal coloring by DSATUR branch and bound, testing k = clique bound
/// up to the greedy bound. Deterministic. Throws BudgetExhausted once more
/// than `budget` search nodes have been expanded.
Coloring exact_coloring(const Graph& graph, std::size_t budget = kDefaultSearchBudget);
int exact_chromatic_number(const Graph& graph, std::size_t budget = kDefaultSearchBudget);

/// Size of a greedily grown clique (a lower bound on the chromatic number).
int greedy_clique_size(const Graph& graph);

/// The coloring viewed as a homomorphism into K_m with m = colors_used
/// (or `palette` if larger).
VertexMap coloring_as_map(const Graph& graph, const Coloring& coloring, int palette = 0);

}  // namespace topobound
