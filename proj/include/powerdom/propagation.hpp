#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "powerdom/graph.hpp"
#include "powerdom/vertex_set.hpp"

namespace powerdom {

inline constexpr int kUnobserved = -1;

/// Who observed a vertex, and at which step. For step 1 the forcer is the
/// dominating seed; for step >= 2 it is the vertex whose only unobserved
/// neighbor was `vertex`.
struct ForcingRecord {
  Vertex vertex = 0;
  Vertex forcer = 0;
  int step = 0;

  friend bool operator==(const ForcingRecord&, const ForcingRecord&) = default;
};

/// Full history of the observation process started from `start`.
///
/// layers[0] is the seed set, layers[1] its closed neighborhood, and each
/// later layer adds every vertex forced simultaneously by the previous one.
/// The last layer is the fixed point; layers strictly grow until then.
struct ObservationTrace {
  VertexSet start;
  std::vector<VertexSet> layers;
  std::vector<int> time_label;                // kUnobserved for vertices never reached
  std::vector<ForcingRecord> forcing_record;  // sorted by vertex, one per non-seed observed vertex
  bool complete = false;

  bool observed(Vertex v) const { return time_label.at(v) != kUnobserved; }
  int label(Vertex v) const { return time_label.at(v); }
  std::optional<ForcingRecord> record_for(Vertex v) const;
  /// Index of the final layer.
  std::size_t final_step() const { return layers.size() - 1; }

  friend bool operator==(const ObservationTrace&, const ObservationTrace&) = default;
};

/// S^[1] = N[S].
VertexSet domination_step(const Graph& g, const VertexSet& s);

/// One simultaneous forcing round: adds every w that is the unique unobserved
/// neighbor of some observed vertex.
VertexSet forcing_step(const Graph& g, const VertexSet& observed);

ObservationTrace propagate(const Graph& g, const VertexSet& s);

bool is_pds(const Graph& g, const VertexSet& s);

/// Power propagation time of a power dominating set. Throws
/// std::invalid_argument when `s` does not observe the whole graph.
std::size_t ppt_of_set(const Graph& g, const VertexSet& s);

/// t(uv) = max(t(u), t(v)). Throws std::invalid_argument if either endpoint
/// is unobserved or uv is not an edge of g.
int edge_time_label(const Graph& g, const ObservationTrace& trace, Vertex u, Vertex v);

/// Outcome of the trace-free observation loop used by the solver.
struct ObservationSummary {
  bool complete = false;
  std::size_t steps = 0;  // index of the fixed-point layer
};

/// Same process as propagate() without recording history. With `step_cap`
/// set, stops after that many steps; the result is then complete only if the
/// whole graph was observed by then.
ObservationSummary observe(const Graph& g, const VertexSet& s,
                           std::optional<std::size_t> step_cap = std::nullopt);

/// Fixed point of the observation process, without history.
VertexSet observation_closure(const Graph& g, const VertexSet& s);

}  // namespace powerdom
