#pragma once

#include <cstddef>
#include <vector>

#include "powerdom/bounds.hpp"
#include "powerdom/solver.hpp"

namespace powerdom {

// Largest Δ for which the demo runs the exact solver on H_Δ.
inline constexpr std::size_t kExactDemoDelta = 12;

struct DemoRow {
  std::size_t delta = 0;
  std::size_t n = 0;
  std::size_t diameter = 0;
  std::size_t max_degree = 0;
  std::size_t gamma_p = 0;
  bool gamma_exact = false;  // false: certified by a 2-set witness plus singleton refutation
  Rational refuted_bound;
  bool refutes = false;  // refuted_bound > gamma_p
};

/// One row per Δ in [from, to]. Above `exact_max`, γ_P(H_Δ) = 2 is
/// certified: the root plus the first level-3 vertex observe everything,
/// and no single vertex does. Throws std::invalid_argument unless
/// 3 <= from <= to, and ConsistencyError if certification fails.
std::vector<DemoRow> counterexample_demo(std::size_t from, std::size_t to,
                                         const SolverOptions& options = {},
                                         std::size_t exact_max = kExactDemoDelta);

}  // namespace powerdom
