#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "powerdom/graph.hpp"
#include "powerdom/propagation.hpp"

namespace powerdom {

/// A trail v_0 v_1 ... v_p with the time label of each edge.
///
/// Monotone means: p >= 1, no edge repeats, consecutive edge labels never
/// decrease and grow by at most one, and the last edge's label equals the
/// label of the last vertex.
struct MonotoneTrail {
  std::vector<Vertex> vertices;
  std::vector<int> edge_labels;  // edge_labels[i] = t(v_i v_{i+1})

  std::size_t length() const { return edge_labels.size(); }
  Vertex last() const { return vertices.back(); }
  std::vector<Edge> edges() const;
  bool is_path() const;  // no repeated vertices
};

struct TrailCheck {
  bool ok = false;
  std::string reason;  // first violated condition when !ok

  explicit operator bool() const { return ok; }
};

/// Checks adjacency, edge-distinctness, the label inequalities and the
/// terminal condition, in that order. Throws std::invalid_argument for fewer
/// than two vertices or an unobserved vertex.
TrailCheck is_monotone_trail(const Graph& g, const ObservationTrace& trace,
                             const std::vector<Vertex>& vertices);

/// Builds a monotone trail of length >= t(v)+1 ending at v, following the
/// induction on t(v):
///   t(v) = 1: w-u-v with u the recorded seed neighbor of v and w its
///             smallest other neighbor.
///   t(v) = i >= 2, forcer w with t(w) = i-1: trail(w) + wv.
///   otherwise: trail(w') + w'w + wv, w' the smallest neighbor of w with
///             t(w') = i-1.
///
/// Throws std::invalid_argument when a seed has degree 1, v is a seed, or v
/// was never observed; ConsistencyError if a step the induction guarantees
/// is impossible.
MonotoneTrail extract_monotone_trail(const Graph& g, const ObservationTrace& trace, Vertex v);

}  // namespace powerdom
