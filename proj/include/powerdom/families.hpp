#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "powerdom/graph.hpp"

namespace powerdom {

/// Layout of the three-level counterexample graph H_Δ.
///
/// Internal IDs are the published 1-based labels minus one: vertex 0 is the
/// root (level 1), 1..Δ are its children (level 2), and Δ+1..Δ² are the
/// level-3 vertices. Level-2 vertex j owns the consecutive block of Δ-1
/// level-3 vertices starting at Δ+1+(j-1)(Δ-1), and the level-3 vertices
/// form a path in ID order.
struct HDeltaSpec {
  std::size_t delta = 0;
  std::vector<int> level_of;         // 1, 2 or 3 per internal vertex
  std::vector<std::size_t> paper_id;  // internal ID + 1

  /// The two-vertex power dominating set {root, first level-3 vertex}.
  std::vector<Vertex> witness_pair() const { return {0, static_cast<Vertex>(delta + 1)}; }
};

struct HDelta {
  Graph graph;
  HDeltaSpec spec;
};

/// Throws std::invalid_argument when delta < 3.
HDelta gen_h_delta(std::size_t delta);

Graph gen_path(std::size_t n);                            // n >= 1
Graph gen_cycle(std::size_t n);                           // n >= 3
Graph gen_star(std::size_t leaves);                       // leaves >= 1, center 0
Graph gen_complete(std::size_t n);                        // n >= 1
Graph gen_spider(std::size_t legs, std::size_t leg_len);  // center 0, legs laid out consecutively

/// Uniform labeled tree from a seeded Prüfer sequence.
Graph gen_random_tree(std::size_t n, std::uint64_t seed);

/// Random spanning tree plus m-(n-1) distinct extra edges chosen uniformly.
Graph gen_random_connected(std::size_t n, std::size_t m, std::uint64_t seed);

/// One representative per isomorphism class of connected graphs on n
/// vertices (n <= 10). Built by attaching a new vertex to smaller connected
/// graphs and deduplicating by canonical form.
std::vector<Graph> connected_graph_catalog(std::size_t n);

/// Canonical adjacency key: equal for two graphs iff they are isomorphic.
/// Limited to n <= 11 so the key fits in 64 bits.
std::uint64_t canonical_key(const Graph& g);

}  // namespace powerdom
