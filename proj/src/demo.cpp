#include "powerdom/demo.hpp"

#include <stdexcept>
#include <string>

#include "powerdom/errors.hpp"
#include "powerdom/families.hpp"
#include "powerdom/propagation.hpp"

namespace powerdom {

namespace {

std::size_t certify_gamma_two(const HDelta& h) {
  const Graph& g = h.graph;
  const auto pair = h.spec.witness_pair();
  if (!is_pds(g, VertexSet::from_members(g.order(), pair)))
    throw ConsistencyError("witness pair fails on H_" + std::to_string(h.spec.delta));
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet single(g.order());
    single.insert(v);
    if (is_pds(g, single))
      throw ConsistencyError("vertex " + std::to_string(v) + " alone observes H_" +
                             std::to_string(h.spec.delta));
  }
  return 2;
}

}  // namespace

std::vector<DemoRow> counterexample_demo(std::size_t from, std::size_t to,
                                         const SolverOptions& options, std::size_t exact_max) {
  if (from < 3 || from > to)
    throw std::invalid_argument("demo range needs 3 <= from <= to");
  std::vector<DemoRow> rows;
  for (std::size_t delta = from; delta <= to; ++delta) {
    const HDelta h = gen_h_delta(delta);
    DemoRow row;
    row.delta = delta;
    row.n = h.graph.order();
    row.diameter = diameter(h.graph);
    row.max_degree = max_degree(h.graph);
    row.gamma_exact = delta <= exact_max;
    row.gamma_p = row.gamma_exact ? gamma_p(h.graph, options).gamma_p : certify_gamma_two(h);
    row.refuted_bound = refuted_diameter_bound(h.graph);
    row.refutes = row.refuted_bound > Rational(static_cast<std::int64_t>(row.gamma_p));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace powerdom
