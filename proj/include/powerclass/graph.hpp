#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "powerclass/bitset.hpp"

namespace powerclass {

using Vertex = std::size_t;

/// Canonical unordered pair, u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  /// Orders the endpoints; throws std::invalid_argument on a loop.
  Edge(Vertex a, Vertex b);

  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on 0..n-1. Sorted neighbor lists plus a bitset row
/// per vertex for constant-time adjacency tests.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Duplicate edges are ignored; out-of-range vertices throw std::out_of_range.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t n() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex a, Vertex b) const { return a != b && rows_[a].test(b); }
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  /// All edges, lexicographically sorted.
  std::vector<Edge> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<DynBitset> rows_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

Graph complete_graph(std::size_t n);

std::size_t max_degree(const Graph& g);

/// Vertices adjacent to every other vertex.
std::vector<Vertex> full_degree_vertices(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> parent;  ///< subgraph vertex i is parent[i] in the original
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

/// Subgraph induced by the vertices of maximum degree.
InducedSubgraph core_subgraph(const Graph& g);

/// Non-edges of g relative to K_n, sorted.
std::vector<Edge> complement_edges(const Graph& g);

bool is_acyclic(const Graph& g);

}  // namespace powerclass
