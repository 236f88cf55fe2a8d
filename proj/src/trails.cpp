#include "powerdom/trails.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "powerdom/errors.hpp"

namespace powerdom {

std::vector<Edge> MonotoneTrail::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
  return out;
}

bool MonotoneTrail::is_path() const {
  std::set<Vertex> seen(vertices.begin(), vertices.end());
  return seen.size() == vertices.size();
}

TrailCheck is_monotone_trail(const Graph& g, const ObservationTrace& trace,
                             const std::vector<Vertex>& vertices) {
  if (vertices.size() < 2) throw std::invalid_argument("a trail needs at least two vertices");
  for (Vertex v : vertices) {
    if (v >= g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    if (!trace.observed(v))
      throw std::invalid_argument("vertex " + std::to_string(v) + " is unobserved");
  }

  std::set<Edge> used;
  std::vector<int> labels;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const Vertex a = vertices[i];
    const Vertex b = vertices[i + 1];
    if (!g.adjacent(a, b))
      return {false, std::to_string(a) + "-" + std::to_string(b) + " is not an edge"};
    if (!used.insert(std::minmax(a, b)).second)
      return {false, "edge " + std::to_string(a) + "-" + std::to_string(b) + " repeats"};
    labels.push_back(std::max(trace.label(a), trace.label(b)));
  }
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] < labels[i - 1])
      return {false, "edge label drops from " + std::to_string(labels[i - 1]) + " to " +
                         std::to_string(labels[i]) + " at position " + std::to_string(i)};
    if (labels[i] > labels[i - 1] + 1)
      return {false, "edge label jumps from " + std::to_string(labels[i - 1]) + " to " +
                         std::to_string(labels[i]) + " at position " + std::to_string(i)};
  }
  if (labels.back() != trace.label(vertices.back()))
    return {false, "last edge label " + std::to_string(labels.back()) + " differs from t(" +
                       std::to_string(vertices.back()) + ") = " +
                       std::to_string(trace.label(vertices.back()))};
  return {true, {}};
}

namespace {

class Extractor {
 public:
  Extractor(const Graph& g, const ObservationTrace& trace) : g_(g), trace_(trace) {}

  std::vector<Vertex> trail_to(Vertex v) {
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    std::vector<Vertex> out = build(v);
    memo_.emplace(v, out);
    return out;
  }

 private:
  std::vector<Vertex> build(Vertex v) {
    const int i = trace_.label(v);
    const auto record = trace_.record_for(v);
    if (!record) throw ConsistencyError("no forcing record for observed vertex " + std::to_string(v));

    if (i == 1) {
      const Vertex u = record->forcer;
      for (Vertex w : g_.neighbors(u))
        if (w != v) return {w, u, v};
      throw ConsistencyError("seed " + std::to_string(u) + " has no second neighbor");
    }

    const Vertex w = record->forcer;
    if (trace_.label(w) == i - 1) {
      auto out = trail_to(w);
      out.push_back(v);
      return out;
    }
    for (Vertex w2 : g_.neighbors(w)) {
      if (trace_.label(w2) != i - 1) continue;
      auto out = trail_to(w2);
      out.push_back(w);
      out.push_back(v);
      return out;
    }
    throw ConsistencyError("forcer " + std::to_string(w) + " of " + std::to_string(v) +
                           " has no neighbor observed at step " + std::to_string(i - 1));
  }

  const Graph& g_;
  const ObservationTrace& trace_;
  std::map<Vertex, std::vector<Vertex>> memo_;
};

}  // namespace

MonotoneTrail extract_monotone_trail(const Graph& g, const ObservationTrace& trace, Vertex v) {
  if (v >= g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  for (Vertex s : trace.start.members())
    if (g.degree(s) == 1)
      throw std::invalid_argument("seed " + std::to_string(s) + " has degree 1");
  if (trace.start.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is a seed");
  if (!trace.observed(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is unobserved");

  MonotoneTrail trail;
  trail.vertices = Extractor(g, trace).trail_to(v);
  for (auto [a, b] : trail.edges()) trail.edge_labels.push_back(std::max(trace.label(a), trace.label(b)));

  const auto check = is_monotone_trail(g, trace, trail.vertices);
  if (!check) throw ConsistencyError("extracted trail to " + std::to_string(v) + " is not monotone: " + check.reason);
  if (trail.length() < static_cast<std::size_t>(trace.label(v)) + 1)
    throw ConsistencyError("extracted trail to " + std::to_string(v) + " is too short");
  return trail;
}

}  // namespace powerdom
