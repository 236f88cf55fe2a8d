#include "powerdom/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace powerdom {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

HDelta gen_h_delta(std::size_t delta) {
  require(delta >= 3, "H_delta needs delta >= 3, got " + std::to_string(delta));
  const std::size_t n = delta * delta + 1;
  std::vector<Edge> edges;
  edges.reserve(2 * delta * delta - delta - 1);

  HDeltaSpec spec;
  spec.delta = delta;
  spec.level_of.assign(n, 3);
  spec.paper_id.resize(n);
  std::iota(spec.paper_id.begin(), spec.paper_id.end(), std::size_t{1});
  spec.level_of[0] = 1;

  for (std::size_t j = 1; j <= delta; ++j) {
    spec.level_of[j] = 2;
    edges.emplace_back(0, static_cast<Vertex>(j));
    const std::size_t first_child = delta + 1 + (j - 1) * (delta - 1);
    for (std::size_t c = 0; c + 1 < delta; ++c)
      edges.emplace_back(static_cast<Vertex>(j), static_cast<Vertex>(first_child + c));
  }
  for (std::size_t v = delta + 1; v + 1 < n; ++v)
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));

  return {Graph(n, edges), std::move(spec)};
}

Graph gen_path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph gen_cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph gen_star(std::size_t leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph gen_complete(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph gen_spider(std::size_t legs, std::size_t leg_len) {
  require(legs >= 1 && leg_len >= 1, "spider needs legs >= 1 and leg length >= 1");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t l = 0; l < legs; ++l) {
    Vertex prev = 0;
    for (std::size_t k = 0; k < leg_len; ++k) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, edges);
}

namespace {

std::vector<Edge> random_tree_edges(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};

  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);

  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  Vertex u = 0;
  while (degree[u] != 1) ++u;
  Vertex v = u + 1;
  while (degree[v] != 1) ++v;
  edges.emplace_back(u, v);
  return edges;
}

}  // namespace

Graph gen_random_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  std::mt19937_64 rng(seed);
  return Graph(n, random_tree_edges(n, rng));
}

Graph gen_random_connected(std::size_t n, std::size_t m, std::uint64_t seed) {
  require(n >= 1, "graph needs n >= 1");
  require(m + 1 >= n && m <= n * (n - 1) / 2,
          "a connected graph on " + std::to_string(n) + " vertices needs " +
              std::to_string(n - 1) + " <= m <= " + std::to_string(n * (n - 1) / 2));
  std::mt19937_64 rng(seed);
  auto edges = random_tree_edges(n, rng);

  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) present[u][v] = present[v][u] = true;
  std::vector<Edge> spare;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!present[u][v]) spare.emplace_back(u, v);
  std::shuffle(spare.begin(), spare.end(), rng);
  edges.insert(edges.end(), spare.begin(), spare.begin() + static_cast<std::ptrdiff_t>(m - edges.size()));
  return Graph(n, edges);
}

}  // namespace powerdom
