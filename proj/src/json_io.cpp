#include "powerdom/json_io.hpp"

namespace powerdom {

using nlohmann::json;

json to_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

json to_json(const VertexSet& s) { return s.members(); }

json to_json(const ObservationTrace& trace) {
  json layers = json::array();
  for (const auto& layer : trace.layers) layers.push_back(to_json(layer));
  json records = json::array();
  for (const auto& r : trace.forcing_record) records.push_back({r.vertex, r.forcer, r.step});
  return {{"start", to_json(trace.start)},
          {"layers", std::move(layers)},
          {"time_label", trace.time_label},
          {"forcing_record", std::move(records)},
          {"complete", trace.complete}};
}

json to_json(const GammaResult& result) {
  json witnesses = json::array();
  for (const auto& w : result.witnesses) witnesses.push_back({{"set", to_json(w.set)}, {"ppt", w.ppt}});
  return {{"gamma_p", result.gamma_p},
          {"witnesses", std::move(witnesses)},
          {"ppt_graph", result.ppt_graph}};
}

json to_json(const BoundsReport& report) {
  json out = {{"n", report.n},
              {"max_degree", report.max_degree},
              {"diameter", report.diameter},
              {"gamma_p", report.gamma_p},
              {"ppt_graph", report.ppt_graph},
              {"correct_bound", to_json(report.correct_bound_raw)},
              {"correct_bound_ceil", ceil_of(report.correct_bound_raw)},
              {"refuted_bound", to_json(report.refuted_bound_raw)},
              {"refuted_bound_ceil", ceil_of(report.refuted_bound_raw)},
              {"ppt_lower_bound", nullptr},
              {"tree_bound", nullptr},
              {"refutation_flag", report.refutation_flag}};
  if (report.ppt_lower_bound) out["ppt_lower_bound"] = *report.ppt_lower_bound;
  if (report.tree_bound) out["tree_bound"] = *report.tree_bound;
  return out;
}

json to_json(const MonotoneTrail& trail) {
  return {{"vertices", trail.vertices}, {"edge_labels", trail.edge_labels}, {"length", trail.length()}};
}

json to_json(const TreeCertificate& cert) {
  return {{"original_set", to_json(cert.original_set)},
          {"repaired_set", to_json(cert.repaired_set)},
          {"ppt_original", cert.ppt_original},
          {"ppt_repaired", cert.ppt_repaired},
          {"diam", cert.diam},
          {"witness_trail", to_json(cert.witness_trail)}};
}

}  // namespace powerdom
