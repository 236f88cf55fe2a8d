#include "powerdom/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "powerdom/bounds.hpp"
#include "powerdom/demo.hpp"
#include "powerdom/errors.hpp"
#include "powerdom/families.hpp"
#include "powerdom/json_io.hpp"
#include "powerdom/propagation.hpp"
#include "powerdom/solver.hpp"
#include "powerdom/trails.hpp"
#include "powerdom/tree_analysis.hpp"

namespace powerdom::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::uint64_t limit = SolverOptions{}.work_limit;
  std::string file;
  std::string set;
  std::size_t rounds = 0;
  std::size_t vertex = 0;
  std::size_t from = 3;
  std::size_t to = 3;

  // gen parameters
  std::size_t delta = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t legs = 0;
  std::size_t len = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
};

Graph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return parse_graph(in);
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  return parse_graph(file);
}

VertexSet parse_set(const Graph& g, const std::string& text) {
  return VertexSet::from_members(g.order(), parse_vertex_list(text));
}

std::string braces(const VertexSet& s) { return "{" + format_vertex_list(s) + "}"; }

std::string fraction(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string decimal(const Rational& r) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(3)
     << static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  return ss.str();
}

void print_gamma(const GammaResult& r, std::ostream& out) {
  out << "gamma_p: " << r.gamma_p << "\n"
      << "ppt_graph: " << r.ppt_graph << "\n"
      << "witnesses: " << r.witnesses.size() << "\n";
  for (const auto& w : r.witnesses) out << "  " << braces(w.set) << " ppt=" << w.ppt << "\n";
}

void print_trace(const ObservationTrace& t, std::ostream& out) {
  out << "start: " << braces(t.start) << "\n";
  for (std::size_t i = 0; i < t.layers.size(); ++i)
    out << "layer " << i << ": " << braces(t.layers[i]) << "\n";
  out << "complete: " << (t.complete ? "yes" : "no") << "\n";
  if (t.complete)
    out << "ppt: " << t.final_step() << "\n";
  else
    out << "ppt: undefined\n";
}

void print_trail(const MonotoneTrail& trail, std::ostream& out) {
  out << "trail:";
  for (Vertex v : trail.vertices) out << ' ' << v;
  out << "\nedge_labels:";
  for (int l : trail.edge_labels) out << ' ' << l;
  out << "\nlength: " << trail.length() << "\n";
}

void print_bounds(const BoundsReport& r, std::ostream& out) {
  out << "n: " << r.n << "\n"
      << "max_degree: " << r.max_degree << "\n"
      << "diameter: " << r.diameter << "\n"
      << "gamma_p: " << r.gamma_p << "\n"
      << "ppt_graph: " << r.ppt_graph << "\n"
      << "correct_bound: " << fraction(r.correct_bound_raw) << " (ceil " << ceil_of(r.correct_bound_raw)
      << ")\n"
      << "refuted_bound: " << fraction(r.refuted_bound_raw) << " (ceil "
      << ceil_of(r.refuted_bound_raw) << ")\n"
      << "ppt_lower_bound: "
      << (r.ppt_lower_bound ? std::to_string(*r.ppt_lower_bound) : std::string("n/a")) << "\n"
      << "tree_bound: " << (r.tree_bound ? std::to_string(*r.tree_bound) : std::string("n/a"))
      << "\n"
      << "refutation_flag: " << (r.refutation_flag ? "true" : "false") << "\n";
}

json demo_json(const std::vector<DemoRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"delta", r.delta},
                   {"n", r.n},
                   {"diameter", r.diameter},
                   {"max_degree", r.max_degree},
                   {"gamma_p", r.gamma_p},
                   {"gamma_method", r.gamma_exact ? "exact" : "certified"},
                   {"refuted_bound", to_json(r.refuted_bound)},
                   {"refutes", r.refutes}});
  return out;
}

void print_demo(const std::vector<DemoRow>& rows, std::ostream& out) {
  out << std::left << std::setw(6) << "delta" << std::setw(6) << "n" << std::setw(6) << "diam"
      << std::setw(6) << "maxd" << std::setw(14) << "gamma_p" << std::setw(10) << "bound"
      << std::setw(8) << "approx"
      << "verdict\n";
  for (const auto& r : rows) {
    const std::string gamma = std::to_string(r.gamma_p) + (r.gamma_exact ? " (exact)" : " (cert)");
    out << std::setw(6) << r.delta << std::setw(6) << r.n << std::setw(6) << r.diameter
        << std::setw(6) << r.max_degree << std::setw(14) << gamma << std::setw(10)
        << fraction(r.refuted_bound) << std::setw(8) << decimal(r.refuted_bound)
        << (r.refutes ? "REFUTES" : "consistent") << "\n";
  }
}

std::string gen_header(const std::string& family, const std::string& params) {
  return "# family=" + family + (params.empty() ? "" : " " + params) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact power domination toolkit", "powerdom"};
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--limit", o.limit, "Cap on solver observation runs")->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  auto with_file = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("file", o.file, "Graph file, or - for stdin")->required();
    return sub;
  };

  auto* gamma_cmd = with_file(app.add_subcommand("gamma", "Power domination number and all minimum sets"));
  auto* ppt_cmd = with_file(app.add_subcommand("ppt", "Power propagation time of the graph"));
  auto* prop_cmd = with_file(app.add_subcommand("propagate", "Trace the observation process of a set"));
  prop_cmd->add_option("--set", o.set, "Comma-separated seed vertices")->required();
  auto* lround_cmd = with_file(app.add_subcommand("lround", "l-round power domination number"));
  lround_cmd->add_option("--l", o.rounds, "Round bound")->required()->check(CLI::PositiveNumber);
  auto* bounds_cmd = with_file(app.add_subcommand("bounds", "Lower bounds and refutation verdict"));
  auto* trail_cmd = with_file(app.add_subcommand("trail", "Monotone trail ending at a vertex"));
  trail_cmd->add_option("--set", o.set, "Comma-separated seed vertices")->required();
  trail_cmd->add_option("--vertex", o.vertex, "Last vertex of the trail")->required();
  auto* tree_cmd = with_file(app.add_subcommand("verify-tree", "Certify ppt(T) <= diam(T) - 1"));
  auto* demo_cmd = app.add_subcommand("demo", "Counterexample table over a range of delta");
  demo_cmd->fallthrough();
  demo_cmd->add_option("--from", o.from, "Smallest delta")->required();
  demo_cmd->add_option("--to", o.to, "Largest delta")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family");
  gen_cmd->require_subcommand(1);
  auto* gen_h = gen_cmd->add_subcommand("hdelta", "Counterexample graph H_delta");
  gen_h->add_option("--delta", o.delta)->required();
  auto* gen_path_cmd = gen_cmd->add_subcommand("path", "Path");
  gen_path_cmd->add_option("--n", o.n)->required();
  auto* gen_cycle_cmd = gen_cmd->add_subcommand("cycle", "Cycle");
  gen_cycle_cmd->add_option("--n", o.n)->required();
  auto* gen_star_cmd = gen_cmd->add_subcommand("star", "Star K_{1,k}");
  gen_star_cmd->add_option("--k", o.k)->required();
  auto* gen_complete_cmd = gen_cmd->add_subcommand("complete", "Complete graph");
  gen_complete_cmd->add_option("--n", o.n)->required();
  auto* gen_spider_cmd = gen_cmd->add_subcommand("spider", "Spider with equal legs");
  gen_spider_cmd->add_option("--legs", o.legs)->required();
  gen_spider_cmd->add_option("--len", o.len)->required();
  auto* gen_rtree_cmd = gen_cmd->add_subcommand("rtree", "Seeded random tree");
  gen_rtree_cmd->add_option("--n", o.n)->required();
  gen_rtree_cmd->add_option("--seed", o.seed)->required();
  auto* gen_rconn_cmd = gen_cmd->add_subcommand("rconnected", "Seeded random connected graph");
  gen_rconn_cmd->add_option("--n", o.n)->required();
  gen_rconn_cmd->add_option("--m", o.m)->required();
  gen_rconn_cmd->add_option("--seed", o.seed)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  SolverOptions solver;
  solver.work_limit = o.limit;

  try {
    if (*gamma_cmd) {
      const auto r = gamma_p(load_graph(o.file, in), solver);
      if (o.json)
        out << to_json(r).dump() << "\n";
      else
        print_gamma(r, out);
    } else if (*ppt_cmd) {
      const auto r = gamma_p(load_graph(o.file, in), solver);
      if (o.json)
        out << json{{"gamma_p", r.gamma_p}, {"ppt_graph", r.ppt_graph}}.dump() << "\n";
      else
        out << "ppt_graph: " << r.ppt_graph << "\ngamma_p: " << r.gamma_p << "\n";
    } else if (*prop_cmd) {
      const Graph g = load_graph(o.file, in);
      const auto trace = propagate(g, parse_set(g, o.set));
      if (o.json) {
        json j = to_json(trace);
        j["ppt"] = trace.complete ? json(trace.final_step()) : json(nullptr);
        out << j.dump() << "\n";
      } else {
        print_trace(trace, out);
      }
    } else if (*lround_cmd) {
      const auto value = l_round_number(load_graph(o.file, in), o.rounds, solver);
      if (o.json)
        out << json{{"l", o.rounds}, {"l_round_number", value}}.dump() << "\n";
      else
        out << "l_round_number(l=" << o.rounds << "): " << value << "\n";
    } else if (*bounds_cmd) {
      const auto r = bounds_report(load_graph(o.file, in), solver);
      if (o.json)
        out << to_json(r).dump() << "\n";
      else
        print_bounds(r, out);
    } else if (*trail_cmd) {
      const Graph g = load_graph(o.file, in);
      const auto trace = propagate(g, parse_set(g, o.set));
      const auto trail = extract_monotone_trail(g, trace, static_cast<Vertex>(o.vertex));
      if (o.json) {
        json j = to_json(trail);
        j["target_label"] = trace.label(trail.last());
        out << j.dump() << "\n";
      } else {
        print_trail(trail, out);
      }
    } else if (*tree_cmd) {
      const auto cert = verify_tree_diameter_bound(load_graph(o.file, in), solver);
      if (o.json) {
        out << to_json(cert).dump() << "\n";
      } else {
        out << "original_set: " << braces(cert.original_set) << " ppt=" << cert.ppt_original << "\n"
            << "repaired_set: " << braces(cert.repaired_set) << " ppt=" << cert.ppt_repaired << "\n"
            << "diameter: " << cert.diam << "\n"
            << "ppt(T) <= diam(T) - 1: " << cert.ppt_repaired << " <= " << cert.diam - 1 << "\n";
        print_trail(cert.witness_trail, out);
      }
    } else if (*demo_cmd) {
      const auto rows = counterexample_demo(o.from, o.to, solver);
      if (o.json)
        out << demo_json(rows).dump() << "\n";
      else
        print_demo(rows, out);
    } else if (*gen_cmd) {
      if (*gen_h)
        out << gen_header("hdelta", "delta=" + std::to_string(o.delta)) << write_graph(gen_h_delta(o.delta).graph);
      else if (*gen_path_cmd)
        out << gen_header("path", "n=" + std::to_string(o.n)) << write_graph(gen_path(o.n));
      else if (*gen_cycle_cmd)
        out << gen_header("cycle", "n=" + std::to_string(o.n)) << write_graph(gen_cycle(o.n));
      else if (*gen_star_cmd)
        out << gen_header("star", "k=" + std::to_string(o.k)) << write_graph(gen_star(o.k));
      else if (*gen_complete_cmd)
        out << gen_header("complete", "n=" + std::to_string(o.n)) << write_graph(gen_complete(o.n));
      else if (*gen_spider_cmd)
        out << gen_header("spider", "legs=" + std::to_string(o.legs) + " len=" + std::to_string(o.len))
            << write_graph(gen_spider(o.legs, o.len));
      else if (*gen_rtree_cmd)
        out << gen_header("rtree", "n=" + std::to_string(o.n) + " seed=" + std::to_string(o.seed))
            << write_graph(gen_random_tree(o.n, o.seed));
      else if (*gen_rconn_cmd)
        out << gen_header("rconnected", "n=" + std::to_string(o.n) + " m=" + std::to_string(o.m) +
                                            " seed=" + std::to_string(o.seed))
            << write_graph(gen_random_connected(o.n, o.m, o.seed));
    }
  } catch (const ResourceLimitError& e) {
    err << "powerdom: " << e.what() << "\n";
    return kResource;
  } catch (const ConsistencyError& e) {
    err << "powerdom: internal consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const ParseError& e) {
    err << "powerdom: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "powerdom: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace powerdom::cli
