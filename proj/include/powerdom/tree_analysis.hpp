#pragma once

#include <cstddef>

#include "powerdom/graph.hpp"
#include "powerdom/solver.hpp"
#include "powerdom/trails.hpp"

namespace powerdom {

struct TreeCertificate {
  VertexSet original_set;
  VertexSet repaired_set;
  std::size_t ppt_original = 0;
  std::size_t ppt_repaired = 0;
  std::size_t diam = 0;
  MonotoneTrail witness_trail;  // a path of length >= ppt_repaired + 1
};

/// Replaces each leaf seed by its neighbor until no seed is a leaf.
///
/// `s` must be a minimum power dominating set of a tree with at least 3
/// vertices (std::invalid_argument otherwise). The result has the same size,
/// is still power dominating and propagates no slower.
VertexSet repair_leaf_seeds(const Graph& t, const VertexSet& s, const SolverOptions& options = {});

/// Same, with γ_P already known; skips the solver call.
VertexSet repair_leaf_seeds(const Graph& t, const VertexSet& s, std::size_t gamma);

/// Certifies ppt(T) <= diam(T) - 1 for a tree on at least 3 vertices.
///
/// Among the minimum power dominating sets achieving ppt(T), each is
/// repaired and the lexicographically smallest repaired set is kept. From the
/// vertex with the largest time label (smallest ID on ties) a monotone trail
/// is extracted; in a tree it is a path of length >= ppt(T)+1, which bounds
/// the diameter. Throws ConsistencyError if any step of that argument fails.
TreeCertificate verify_tree_diameter_bound(const Graph& t, const SolverOptions& options = {});

}  // namespace powerdom
