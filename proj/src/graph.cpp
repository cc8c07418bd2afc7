#include "powerclass/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace powerclass {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("edge endpoints must differ (vertex " + std::to_string(a) + ")");
}

Graph::Graph(std::size_t n) : adjacency_(n), rows_(n, DynBitset(n)) {
  labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& e : edges) {
    if (e.v >= n) throw std::out_of_range("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    if (rows_[e.u].test(e.v)) continue;
    rows_[e.u].set(e.v);
    rows_[e.v].set(e.u);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    ++edge_count_;
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (labels.size() != n()) throw std::invalid_argument("label count does not match vertex count");
  labels_ = std::move(labels);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::vector<Vertex> full_degree_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) + 1 == g.n()) out.push_back(v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) edges.emplace_back(i, j);
  InducedSubgraph out{Graph(vertices.size(), edges), vertices};
  std::vector<std::string> labels;
  for (Vertex v : vertices) labels.push_back(g.labels()[v]);
  out.graph.set_labels(std::move(labels));
  return out;
}

InducedSubgraph core_subgraph(const Graph& g) {
  const std::size_t d = max_degree(g);
  std::vector<Vertex> core;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == d) core.push_back(v);
  return induced_subgraph(g, core);
}

std::vector<Edge> complement_edges(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

bool is_acyclic(const Graph& g) {
  // A forest has exactly n - (components) edges.
  std::vector<Vertex> parent(g.n());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    const Vertex a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace powerclass
