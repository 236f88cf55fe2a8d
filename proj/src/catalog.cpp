// Small-graph catalog: canonical labeling by colour refinement with
// individualization, and generation of connected graphs up to isomorphism.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "powerdom/families.hpp"

namespace powerdom {

namespace {

constexpr std::size_t kMaxCanonicalOrder = 11;

using Matrix = std::vector<std::uint32_t>;  // row bitmasks

// Splits colour classes by the multiset of neighbour colours until stable.
// New colours are ranks of (old colour, neighbour colour histogram), so the
// result does not depend on vertex labels. With n <= 11 the histogram packs
// exactly into base-12 digits.
void refine(const Matrix& adj, std::vector<int>& colors) {
  const std::size_t n = adj.size();
  std::size_t classes = 0;
  std::vector<std::uint64_t> sig(n);
  std::vector<std::uint64_t> distinct;
  std::vector<std::uint64_t> weight(n);
  for (;;) {
    weight[0] = 1;
    for (std::size_t c = 1; c < n; ++c) weight[c] = weight[c - 1] * 12;
    for (std::size_t v = 0; v < n; ++v) {
      std::uint64_t h = 0;
      for (std::uint32_t row = adj[v]; row != 0; row &= row - 1)
        h += weight[static_cast<std::size_t>(colors[static_cast<std::size_t>(std::countr_zero(row))])];
      sig[v] = (static_cast<std::uint64_t>(colors[v]) << 40) | h;
    }
    distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v)
      colors[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                   distinct.begin());
    if (distinct.size() == classes) return;
    classes = distinct.size();
  }
}

std::uint64_t leaf_key(const Matrix& adj, const std::vector<int>& colors) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> at(n);
  for (std::size_t v = 0; v < n; ++v) at[static_cast<std::size_t>(colors[v])] = v;
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) key = (key << 1) | ((adj[at[i]] >> at[j]) & 1U);
  return key;
}

std::uint64_t search(const Matrix& adj, std::vector<int> colors) {
  refine(adj, colors);
  const std::size_t n = adj.size();
  std::vector<int> count(n, 0);
  for (int c : colors) ++count[static_cast<std::size_t>(c)];
  const auto cell = std::find_if(count.begin(), count.end(), [](int k) { return k > 1; });
  if (cell == count.end()) return leaf_key(adj, colors);

  const int target = static_cast<int>(cell - count.begin());
  std::uint64_t best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    std::vector<int> split(n);
    for (std::size_t u = 0; u < n; ++u)
      split[u] = colors[u] + (colors[u] > target || (colors[u] == target && u != v) ? 1 : 0);
    best = std::max(best, search(adj, std::move(split)));
  }
  return best;
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical_key supports at most 11 vertices");
  Matrix adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  // The leading bit separates orders that would otherwise share a key.
  const std::uint64_t key = search(adj, std::vector<int>(g.order(), 0));
  return key | (std::uint64_t{g.order()} << 56);
}

std::vector<Graph> connected_graph_catalog(std::size_t n) {
  if (n == 0 || n > 10) throw std::invalid_argument("catalog supports 1 <= n <= 10");
  std::vector<Graph> level{gen_path(1)};
  for (std::size_t order = 2; order <= n; ++order) {
    // Every connected graph has a vertex whose removal leaves it connected,
    // so extending connected graphs reaches every class.
    std::map<std::uint64_t, Graph> seen;
    const std::size_t prev = order - 1;
    for (const Graph& base : level) {
      const auto base_edges = base.edges();
      for (std::uint32_t mask = 1; mask < (1U << prev); ++mask) {
        std::vector<Edge> edges = base_edges;
        for (Vertex u = 0; u < prev; ++u)
          if ((mask >> u) & 1U) edges.emplace_back(u, static_cast<Vertex>(prev));
        Graph candidate(order, edges);
        seen.try_emplace(canonical_key(candidate), std::move(candidate));
      }
    }
    level.clear();
    for (auto& [key, graph] : seen) level.push_back(std::move(graph));
  }
  return level;
}

}  // namespace powerdom
