#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powerdom/vertex_set.hpp"

namespace powerdom {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Neighbor lists are kept sorted, and each vertex also
/// carries its neighborhood as a VertexSet so propagation can work word-wise.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Both orientations and repeats of an edge
  /// collapse to one edge. Throws std::invalid_argument on a self-loop or an
  /// endpoint outside [0, n).
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  const VertexSet& neighbor_set(Vertex v) const { return rows_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }

  /// Edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  /// Closed neighborhood N[S] = S ∪ N(S).
  VertexSet closed_neighborhood(const VertexSet& s) const;

  /// Subgraph induced by `vertices` (sorted ascending); vertex i of the result
  /// is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// Reads the "n m" + edge-line text format. Throws ParseError.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

/// Canonical text form: header, then edges sorted as (min, max) pairs.
std::string write_graph(const Graph& g);

// Structural queries. All throw std::invalid_argument on the empty graph.
std::size_t max_degree(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Largest BFS distance over all pairs. Throws std::domain_error when g is
/// disconnected.
std::size_t diameter(const Graph& g);

/// Breadth-first distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Vertex sets of the connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace powerdom
