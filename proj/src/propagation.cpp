#include "powerdom/propagation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace powerdom {

namespace {

void check_members(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set universe " + std::to_string(s.universe()) +
                                " does not match graph order " + std::to_string(g.order()));
}

// Number of neighbors of v outside `observed`, capped at 2, and the first such neighbor.
std::pair<int, Vertex> unobserved_neighbors(const Graph& g, const VertexSet& observed, Vertex v) {
  const auto row = g.neighbor_set(v).words();
  const auto obs = observed.words();
  int count = 0;
  Vertex first = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const std::uint64_t w = row[i] & ~obs[i];
    if (w == 0) continue;
    const int c = std::popcount(w);
    if (count == 0) first = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    count += c;
    if (count >= 2) return {2, first};
  }
  return {count, first};
}

}  // namespace

std::optional<ForcingRecord> ObservationTrace::record_for(Vertex v) const {
  auto it = std::lower_bound(forcing_record.begin(), forcing_record.end(), v,
                             [](const ForcingRecord& r, Vertex x) { return r.vertex < x; });
  if (it == forcing_record.end() || it->vertex != v) return std::nullopt;
  return *it;
}

VertexSet domination_step(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  return g.closed_neighborhood(s);
}

VertexSet forcing_step(const Graph& g, const VertexSet& observed) {
  check_members(g, observed);
  VertexSet next = observed;
  for (Vertex v : observed.members()) {
    auto [count, w] = unobserved_neighbors(g, observed, v);
    if (count == 1) next.insert(w);
  }
  return next;
}

ObservationTrace propagate(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  const std::size_t n = g.order();
  ObservationTrace trace;
  trace.start = s;
  trace.time_label.assign(n, kUnobserved);
  trace.layers.push_back(s);
  for (Vertex v : s.members()) trace.time_label[v] = 0;

  // Step 1: every unobserved neighbor of a seed, credited to its smallest seed neighbor.
  VertexSet current = domination_step(g, s);
  if (current != s) {
    for (Vertex v : current.members()) {
      if (trace.time_label[v] != kUnobserved) continue;
      trace.time_label[v] = 1;
      for (Vertex u : g.neighbors(v)) {
        if (s.contains(u)) {
          trace.forcing_record.push_back({v, u, 1});
          break;
        }
      }
    }
    trace.layers.push_back(current);
  } else {
    current = s;
  }

  // Later steps: simultaneous forcing. Observed vertices are scanned in
  // increasing ID so the first forcer seen for w is the smallest.
  while (trace.layers.size() > 1) {
    const int step = static_cast<int>(trace.layers.size());
    VertexSet next = current;
    for (Vertex v : current.members()) {
      auto [count, w] = unobserved_neighbors(g, current, v);
      if (count != 1 || next.contains(w)) continue;
      next.insert(w);
      trace.time_label[w] = step;
      trace.forcing_record.push_back({w, v, step});
    }
    if (next == current) break;
    trace.layers.push_back(next);
    current = std::move(next);
  }

  std::sort(trace.forcing_record.begin(), trace.forcing_record.end(),
            [](const ForcingRecord& a, const ForcingRecord& b) { return a.vertex < b.vertex; });
  trace.complete = trace.layers.back().is_full();
  return trace;
}

bool is_pds(const Graph& g, const VertexSet& s) { return observe(g, s).complete; }

std::size_t ppt_of_set(const Graph& g, const VertexSet& s) {
  const auto summary = observe(g, s);
  if (!summary.complete)
    throw std::invalid_argument("{" + format_vertex_list(s) +
                                "} is not a power dominating set; propagation time is undefined");
  return summary.steps;
}

int edge_time_label(const Graph& g, const ObservationTrace& trace, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not an edge");
  if (!trace.observed(u) || !trace.observed(v))
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an unobserved endpoint");
  return std::max(trace.label(u), trace.label(v));
}

ObservationSummary observe(const Graph& g, const VertexSet& s, std::optional<std::size_t> step_cap) {
  check_members(g, s);
  VertexSet current = g.closed_neighborhood(s);
  std::size_t steps = 0;
  if (current != s) {
    steps = 1;
    while (!current.is_full() && (!step_cap || steps < *step_cap)) {
      VertexSet next = current;
      for (Vertex v : current.members()) {
        auto [count, w] = unobserved_neighbors(g, current, v);
        if (count == 1) next.insert(w);
      }
      if (next == current) break;
      current = std::move(next);
      ++steps;
    }
  }
  const bool complete = current.is_full();
  if (step_cap && steps > *step_cap) return {false, steps};
  return {complete, steps};
}

VertexSet observation_closure(const Graph& g, const VertexSet& s) {
  VertexSet current = domination_step(g, s);
  for (;;) {
    VertexSet next = forcing_step(g, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace powerdom
