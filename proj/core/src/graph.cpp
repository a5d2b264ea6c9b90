#include "topobound/graph.hpp"

#include <istream>
#include <random>
#include <sstream>

#include "topobound/error.hpp"

namespace topobound {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges)
    : adjacency_(n, VertexSet(n)) {
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (!adjacency_[u].test(v)) {
      adjacency_[u].set(v);
      adjacency_[v].set(u);
      ++edge_count_;
    }
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= adjacency_.size()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[u].test(v);
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::size_t Graph::degree(int v) const { return neighbors(v).count(); }

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (auto v = adjacency_[u].find_next(u); v != VertexSet::npos; v = adjacency_[u].find_next(v)) {
      out.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return out;
}

bool Graph::has_isolated_vertex() const {
  for (const auto& row : adjacency_) {
    if (row.none()) return true;
  }
  return false;
}

namespace {

long parse_int(const std::string& token, int line_no) {
  try {
    std::size_t pos = 0;
    long value = std::stol(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + token + "'");
  }
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  long n = -1;
  std::vector<Graph::Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    std::vector<std::string> rest;
    for (std::string t; ls >> t;) rest.push_back(t);
    if (tag == "p") {
      if (n >= 0) throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      if (rest.size() != 3 || (rest[0] != "edge" && rest[0] != "col")) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed header, expected 'p edge n m'");
      }
      n = parse_int(rest[1], line_no);
      if (n < 0 || parse_int(rest[2], line_no) < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": negative size in header");
      }
    } else if (tag == "e") {
      if (n < 0) throw ParseError("line " + std::to_string(line_no) + ": edge before header");
      if (rest.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": malformed edge line");
      long u = parse_int(rest[0], line_no);
      long v = parse_int(rest[1], line_no);
      if (u < 1 || v < 1 || u > n || v > n) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range");
      }
      if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError("missing 'p edge n m' header");
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

void write_dimacs(const Graph& graph, std::ostream& out) {
  out << "p edge " << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const auto& [u, v] : graph.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs(const Graph& graph) {
  std::ostringstream os;
  write_dimacs(graph, os);
  return os.str();
}

Graph complete_graph(int m) {
  if (m < 1) throw InvalidArgument("complete_graph requires m >= 1");
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
  return Graph(static_cast<std::size_t>(m), edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle_graph requires n >= 3");
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph path_graph(int n) {
  if (n < 1) throw InvalidArgument("path_graph requires n >= 1");
  std::vector<Graph::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("random_graph requires n >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("random_graph requires 0 < p <= 1");
  std::mt19937_64 rng(seed);
  // 53-bit uniform in [0,1); std::uniform_real_distribution is not
  // specified bit-exactly across standard libraries.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (uniform() < p) edges.emplace_back(u, v);
    Graph g(static_cast<std::size_t>(n), edges);
    if (!g.has_isolated_vertex()) return g;
  }
  throw InvalidArgument("random_graph: could not avoid isolated vertices; p too small");
}

VertexSet common_neighbors(const Graph& graph, const VertexSet& subset) {
  if (subset.size() != graph.vertex_count()) throw InvalidArgument("vertex set size mismatch");
  VertexSet result = graph.all_vertices();
  for (auto a = subset.find_first(); a != VertexSet::npos; a = subset.find_next(a)) {
    result &= graph.neighbors(static_cast<int>(a));
  }
  return result;
}

VertexSet common_neighbors(const Graph& graph, const std::vector<int>& subset) {
  return common_neighbors(graph, make_vertex_set(graph.vertex_count(), subset));
}

bool has_four_cycle(const Graph& graph) {
  // Two distinct vertices with two common neighbors span a 4-cycle.
  const int n = static_cast<int>(graph.vertex_count());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((graph.neighbors(a) & graph.neighbors(b)).count() >= 2) return true;
  return false;
}

VertexSet make_vertex_set(std::size_t n, const std::vector<int>& members) {
  VertexSet s(n);
  for (int v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }
    s.set(v);
  }
  return s;
}

std::vector<int> members_of(const VertexSet& set) {
  std::vector<int> out;
  out.reserve(set.count());
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v)) {
    out.push_back(static_cast<int>(v));
  }
  return out;
}

bool check_homomorphism(const VertexMap& map) {
  if (map.images.size() != map.source.vertex_count()) {
    throw InvalidArgument("vertex map is not total on the source");
  }
  for (int img : map.images) {
    if (img < 0 || static_cast<std::size_t>(img) >= map.target.vertex_count()) {
      throw InvalidArgument("vertex map image out of range");
    }
  }
  for (const auto& [u, v] : map.source.edges()) {
    int fu = map.images[u];
    int fv = map.images[v];
    if (fu == fv || !map.target.adjacent(fu, fv)) return false;
  }
  return true;
}

VertexMap compose(const VertexMap& g, const VertexMap& f) {
  if (!(f.target == g.source)) throw InvalidArgument("compose: target of f is not source of g");
  VertexMap out{f.source, g.target, {}};
  out.images.reserve(f.images.size());
  for (int v : f.images) out.images.push_back(g.images.at(v));
  return out;
}

VertexMap identity_map(const Graph& graph) {
  VertexMap out{graph, graph, {}};
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) out.images.push_back(static_cast<int>(v));
  return out;
}

}  // namespace topobound
