#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace topobound {

/// Subset of the vertices 0..n-1 of a graph.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Finite simple undirected graph on the vertices 0..n-1.
///
/// Immutable once built. Isolated vertices are allowed here; the complex
/// builders reject them.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  /// Throws InvalidArgument on out-of-range endpoints or self-loops.
  /// Repeated edges are merged.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(int u, int v) const;
  const VertexSet& neighbors(int v) const;
  std::size_t degree(int v) const;

  /// Edges {u,v} with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_isolated_vertex() const;
  VertexSet all_vertices() const { return VertexSet(vertex_count()).set(); }

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Reads the DIMACS edge format: optional `c` comment lines, one
/// `p edge <n> <m>` header, then `e <u> <v>` lines with 1-based endpoints.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);
void write_dimacs(const Graph& graph, std::ostream& out);
std::string to_dimacs(const Graph& graph);

Graph complete_graph(int m);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Erdos-Renyi G(n,p); graphs with isolated vertices are redrawn.
/// Deterministic for a given seed on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

/// CN(A): vertices adjacent to every vertex of A. CN(empty) = V.
VertexSet common_neighbors(const Graph& graph, const VertexSet& subset);
VertexSet common_neighbors(const Graph& graph, const std::vector<int>& subset);

/// True if the graph contains a 4-cycle (not necessarily induced).
bool has_four_cycle(const Graph& graph);

VertexSet make_vertex_set(std::size_t n, const std::vector<int>& members);
std::vector<int> members_of(const VertexSet& set);

/// Mapping V(source) -> V(target).
struct VertexMap {
  Graph source;
  Graph target;
  std::vector<int> images;
};

/// True iff every edge of the source is mapped to an edge of the target.
/// Throws InvalidArgument if the map is not total.
bool check_homomorphism(const VertexMap& map);

/// g o f.
VertexMap compose(const VertexMap& g, const VertexMap& f);
VertexMap identity_map(const Graph& graph);

}  // namespace topobound
