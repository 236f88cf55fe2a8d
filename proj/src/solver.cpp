#include "powerdom/solver.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "powerdom/errors.hpp"
#include "powerdom/propagation.hpp"

namespace powerdom {

namespace {

constexpr std::size_t kMaxCachedFailures = 4096;

class WorkMeter {
 public:
  explicit WorkMeter(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t units = 1) {
    used_ += units;
    if (used_ > limit_)
      throw ResourceLimitError("work limit of " + std::to_string(limit_) +
                               " observation runs exceeded");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Advances `idx` to the next k-combination of [0, n) in lexicographic order.
bool next_combination(std::vector<Vertex>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

class FailureCache {
 public:
  explicit FailureCache(bool enabled) : enabled_(enabled) {}

  bool dominated(const Graph& g, const VertexSet& candidate) const {
    if (!enabled_ || closures_.empty()) return false;
    const VertexSet reach = g.closed_neighborhood(candidate);
    return std::any_of(closures_.begin(), closures_.end(),
                       [&](const VertexSet& c) { return reach.is_subset_of(c); });
  }

  // Records a candidate that failed; only sets whose closure misses part of
  // the graph are useful, since a merely slow set says nothing about others.
  void record(const Graph& g, const VertexSet& candidate) {
    if (!enabled_ || closures_.size() >= kMaxCachedFailures) return;
    VertexSet closure = observation_closure(g, candidate);
    if (closure.is_full()) return;
    for (const auto& c : closures_)
      if (closure.is_subset_of(c)) return;
    std::erase_if(closures_, [&](const VertexSet& c) { return c.is_subset_of(closure); });
    closures_.push_back(std::move(closure));
  }

 private:
  bool enabled_;
  std::vector<VertexSet> closures_;
};

// Smallest cardinality with at least one hit, and every hit at that
// cardinality. A hit observes all of g, within `rounds` steps when given.
std::vector<PdsSolution> minimum_sets(const Graph& g, std::optional<std::size_t> rounds,
                                      bool collect_all, const SolverOptions& options,
                                      WorkMeter& meter) {
  const std::size_t n = g.order();
  FailureCache cache(options.dominance_cache);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<PdsSolution> hits;
    std::vector<Vertex> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<Vertex>(i);
    do {
      const VertexSet candidate = VertexSet::from_members(n, idx);
      if (cache.dominated(g, candidate)) continue;
      meter.charge();
      const auto summary = observe(g, candidate, rounds);
      if (summary.complete) {
        hits.push_back({candidate, summary.steps});
        if (!collect_all) return hits;
      } else {
        cache.record(g, candidate);
      }
    } while (next_combination(idx, n));
    if (!hits.empty()) return hits;
  }
  throw ConsistencyError("the full vertex set failed to observe the graph");
}

void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("graph has no vertices");
}

// Lifts a component-local set back to the parent graph's IDs.
VertexSet lift(const VertexSet& local, const std::vector<Vertex>& component, std::size_t n) {
  VertexSet out(n);
  for (Vertex v : local.members()) out.insert(component[v]);
  return out;
}

}  // namespace

GammaResult gamma_p(const Graph& g, const SolverOptions& options) {
  require_nonempty(g);
  WorkMeter meter(options.work_limit);
  const auto components = connected_components(g);
  const std::size_t n = g.order();

  std::vector<PdsSolution> combined;
  if (components.size() == 1) {
    combined = minimum_sets(g, std::nullopt, true, options, meter);
  } else {
    combined.push_back({VertexSet(n), 0});
    for (const auto& comp : components) {
      const Graph sub = g.induced(comp);
      const auto local = minimum_sets(sub, std::nullopt, true, options, meter);
      meter.charge(combined.size() * local.size());
      std::vector<PdsSolution> next;
      next.reserve(combined.size() * local.size());
      for (const auto& partial : combined) {
        for (const auto& sol : local) {
          PdsSolution merged = partial;
          merged.set |= lift(sol.set, comp, n);
          merged.ppt = std::max(merged.ppt, sol.ppt);
          next.push_back(std::move(merged));
        }
      }
      combined = std::move(next);
    }
    std::sort(combined.begin(), combined.end(),
              [](const PdsSolution& a, const PdsSolution& b) { return lex_less(a.set, b.set); });
  }

  GammaResult result;
  result.gamma_p = combined.front().set.size();
  result.ppt_graph = combined.front().ppt;
  for (const auto& w : combined) result.ppt_graph = std::min(result.ppt_graph, w.ppt);
  result.witnesses = std::move(combined);
  return result;
}

std::size_t ppt_graph(const Graph& g, const SolverOptions& options) {
  return gamma_p(g, options).ppt_graph;
}

std::size_t l_round_number(const Graph& g, std::size_t rounds, const SolverOptions& options) {
  require_nonempty(g);
  if (rounds == 0) throw std::invalid_argument("round bound must be at least 1");
  WorkMeter meter(options.work_limit);
  std::size_t total = 0;
  for (const auto& comp : connected_components(g)) {
    const Graph sub = comp.size() == g.order() ? g : g.induced(comp);
    total += minimum_sets(sub, rounds, false, options, meter).front().set.size();
  }
  return total;
}

}  // namespace powerdom
