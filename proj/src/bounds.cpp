#include "powerdom/bounds.hpp"

#include <stdexcept>

namespace powerdom {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("bound is only defined for connected graphs");
}

std::int64_t as_int(std::size_t x) { return static_cast<std::int64_t>(x); }

}  // namespace

std::int64_t ceil_of(const Rational& r) {
  if (r < 0) throw std::domain_error("ceil_of expects a nonnegative rational");
  return (r.numerator() + r.denominator() - 1) / r.denominator();
}

Rational correct_lower_bound(const Graph& g, const SolverOptions& options) {
  require_connected(g);
  return correct_lower_bound(g, gamma_p(g, options));
}

Rational correct_lower_bound(const Graph& g, const GammaResult& solved) {
  require_connected(g);
  return Rational(as_int(g.order()), as_int(solved.ppt_graph * max_degree(g) + 1));
}

Rational refuted_diameter_bound(const Graph& g) {
  require_connected(g);
  return Rational(as_int(g.order()), as_int(diameter(g) * max_degree(g) + 1));
}

std::int64_t ppt_lower_bound(const Graph& g, const SolverOptions& options) {
  require_connected(g);
  if (g.order() < 2) throw std::domain_error("ppt lower bound needs at least 2 vertices");
  return ppt_lower_bound(g, gamma_p(g, options));
}

std::int64_t ppt_lower_bound(const Graph& g, const GammaResult& solved) {
  require_connected(g);
  if (g.order() < 2) throw std::domain_error("ppt lower bound needs at least 2 vertices");
  const auto gamma = as_int(solved.gamma_p);
  return ceil_of(Rational(as_int(g.order()) - gamma, gamma * as_int(max_degree(g))));
}

std::int64_t tree_lower_bound(const Graph& g) {
  if (g.order() < 3 || !is_tree(g))
    throw std::domain_error("tree bound needs a tree on at least 3 vertices");
  return ceil_of(Rational(as_int(g.order()), as_int((diameter(g) - 1) * max_degree(g) + 1)));
}

BoundsReport bounds_report(const Graph& g, const SolverOptions& options) {
  require_connected(g);
  const GammaResult solved = gamma_p(g, options);
  BoundsReport r;
  r.n = g.order();
  r.max_degree = max_degree(g);
  r.diameter = diameter(g);
  r.gamma_p = solved.gamma_p;
  r.ppt_graph = solved.ppt_graph;
  r.correct_bound_raw = correct_lower_bound(g, solved);
  r.refuted_bound_raw = refuted_diameter_bound(g);
  if (r.n >= 2) r.ppt_lower_bound = ppt_lower_bound(g, solved);
  if (r.n >= 3 && is_tree(g)) r.tree_bound = tree_lower_bound(g);
  r.refutation_flag = r.refuted_bound_raw > Rational(as_int(r.gamma_p));
  return r;
}

}  // namespace powerdom
