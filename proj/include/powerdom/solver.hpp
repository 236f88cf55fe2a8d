#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "powerdom/graph.hpp"
#include "powerdom/vertex_set.hpp"

namespace powerdom {

struct SolverOptions {
  // Cap on observation runs; exceeding it raises ResourceLimitError.
  std::uint64_t work_limit = 100'000'000;
  // Skip candidates whose closed neighborhood lies inside the closure of a
  // set that already failed. Only failures are skipped, so results are
  // identical with the cache on or off.
  bool dominance_cache = false;
};

struct PdsSolution {
  VertexSet set;
  std::size_t ppt = 0;

  friend bool operator==(const PdsSolution&, const PdsSolution&) = default;
};

struct GammaResult {
  std::size_t gamma_p = 0;
  std::vector<PdsSolution> witnesses;  // every minimum PDS, lexicographic order
  std::size_t ppt_graph = 0;           // min ppt over witnesses
};

/// Exact power domination number with every minimum power dominating set.
///
/// Candidates of size 1, 2, ... are tried in lexicographic order and the
/// search stops at the first size with a hit. Disconnected graphs are solved
/// one component at a time and the witness lists combined. Throws
/// std::invalid_argument on the empty graph and ResourceLimitError when the
/// work cap is hit.
GammaResult gamma_p(const Graph& g, const SolverOptions& options = {});

/// Power propagation time of g: min ppt over all minimum power dominating sets.
std::size_t ppt_graph(const Graph& g, const SolverOptions& options = {});

/// Fewest seeds that observe all of g within `rounds` steps. `rounds` >= 1.
std::size_t l_round_number(const Graph& g, std::size_t rounds, const SolverOptions& options = {});

}  // namespace powerdom
