#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include <boost/rational.hpp>

#include "powerdom/graph.hpp"
#include "powerdom/solver.hpp"

namespace powerdom {

using Rational = boost::rational<std::int64_t>;

/// Smallest integer >= r, for r >= 0.
std::int64_t ceil_of(const Rational& r);

// Every bound below requires a connected graph and throws std::domain_error
// otherwise. The overloads taking a GammaResult reuse an existing solve.

/// |V| / (ppt(G)·Δ(G) + 1). Always <= γ_P(G).
Rational correct_lower_bound(const Graph& g, const SolverOptions& options = {});
Rational correct_lower_bound(const Graph& g, const GammaResult& solved);

/// |V| / (diam(G)·Δ(G) + 1). Not a valid lower bound on γ_P; H_Δ with Δ >= 9
/// exceeds it.
Rational refuted_diameter_bound(const Graph& g);

/// ⌈(|V| − γ_P) / (γ_P·Δ)⌉, a lower bound on ppt(G). Needs n >= 2.
std::int64_t ppt_lower_bound(const Graph& g, const SolverOptions& options = {});
std::int64_t ppt_lower_bound(const Graph& g, const GammaResult& solved);

/// ⌈|V| / ((diam − 1)·Δ + 1)⌉ for a tree on at least 3 vertices.
std::int64_t tree_lower_bound(const Graph& g);

struct BoundsReport {
  std::size_t n = 0;
  std::size_t max_degree = 0;
  std::size_t diameter = 0;
  std::size_t gamma_p = 0;
  std::size_t ppt_graph = 0;
  Rational correct_bound_raw;
  Rational refuted_bound_raw;
  std::optional<std::int64_t> ppt_lower_bound;  // absent for n = 1
  std::optional<std::int64_t> tree_bound;       // absent unless a tree with n >= 3
  bool refutation_flag = false;                 // refuted_bound_raw > gamma_p
};

BoundsReport bounds_report(const Graph& g, const SolverOptions& options = {});

}  // namespace powerdom
