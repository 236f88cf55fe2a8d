#include "powerdom/tree_analysis.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "powerdom/errors.hpp"
#include "powerdom/propagation.hpp"

namespace powerdom {

namespace {

void require_small_tree(const Graph& t) {
  if (t.order() < 3 || !is_tree(t))
    throw std::invalid_argument("expected a tree on at least 3 vertices");
}

}  // namespace

VertexSet repair_leaf_seeds(const Graph& t, const VertexSet& s, const SolverOptions& options) {
  require_small_tree(t);
  return repair_leaf_seeds(t, s, gamma_p(t, options).gamma_p);
}

VertexSet repair_leaf_seeds(const Graph& t, const VertexSet& s, std::size_t gamma) {
  require_small_tree(t);
  if (s.universe() != t.order() || !is_pds(t, s))
    throw std::invalid_argument("{" + format_vertex_list(s) + "} is not a power dominating set");
  if (s.size() != gamma)
    throw std::invalid_argument("{" + format_vertex_list(s) + "} is not minimum (gamma_p = " +
                                std::to_string(gamma) + ")");

  const std::size_t before = ppt_of_set(t, s);
  VertexSet current = s;
  // Each swap trades a degree-1 seed for a neighbor of degree >= 2, so the
  // degree sum of the seeds strictly grows and the loop ends.
  for (;;) {
    std::optional<Vertex> leaf;
    for (Vertex v : current.members()) {
      if (t.degree(v) == 1) {
        leaf = v;
        break;
      }
    }
    if (!leaf) break;
    const Vertex u = t.neighbors(*leaf).front();
    if (current.contains(u))
      throw ConsistencyError("leaf seed " + std::to_string(*leaf) + " and its neighbor " +
                             std::to_string(u) + " are both seeds of a minimum set");
    current.erase(*leaf);
    current.insert(u);
  }

  if (!is_pds(t, current) || ppt_of_set(t, current) > before)
    throw ConsistencyError("leaf repair of {" + format_vertex_list(s) + "} slowed propagation");
  return current;
}

TreeCertificate verify_tree_diameter_bound(const Graph& t, const SolverOptions& options) {
  require_small_tree(t);
  const GammaResult solved = gamma_p(t, options);

  std::optional<TreeCertificate> best;
  for (const auto& w : solved.witnesses) {
    if (w.ppt != solved.ppt_graph) continue;
    VertexSet repaired = repair_leaf_seeds(t, w.set, solved.gamma_p);
    if (best && !lex_less(repaired, best->repaired_set)) continue;
    TreeCertificate cert;
    cert.original_set = w.set;
    cert.ppt_original = w.ppt;
    cert.repaired_set = std::move(repaired);
    best = std::move(cert);
  }
  if (!best) throw ConsistencyError("no minimum set achieves ppt(T)");

  TreeCertificate cert = std::move(*best);
  cert.ppt_repaired = ppt_of_set(t, cert.repaired_set);
  cert.diam = diameter(t);
  if (cert.ppt_repaired != solved.ppt_graph)
    throw ConsistencyError("repaired set does not achieve ppt(T)");

  const ObservationTrace trace = propagate(t, cert.repaired_set);
  Vertex far = 0;
  for (Vertex v = 1; v < t.order(); ++v)
    if (trace.label(v) > trace.label(far)) far = v;

  cert.witness_trail = extract_monotone_trail(t, trace, far);
  if (!cert.witness_trail.is_path())
    throw ConsistencyError("monotone trail in a tree repeats a vertex");
  if (cert.witness_trail.length() < cert.ppt_repaired + 1)
    throw ConsistencyError("witness path shorter than ppt(T)+1");
  if (cert.ppt_repaired + 1 > cert.diam)
    throw ConsistencyError("ppt(T) = " + std::to_string(cert.ppt_repaired) +
                           " exceeds diam(T) - 1 = " + std::to_string(cert.diam - 1));
  return cert;
}

}  // namespace powerdom
