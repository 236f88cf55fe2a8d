#include "powerdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "powerdom/errors.hpp"

namespace powerdom {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside [0, " + std::to_string(n) + ")");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  rows_.reserve(n);
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
    rows_.push_back(VertexSet::from_members(n, list));
  }
  edge_count_ /= 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
  VertexSet out = s;
  for (Vertex v : s.members()) out |= rows_.at(v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> index(order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<int>(i);
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : adj_[vertices[i]])
      if (index[w] > static_cast<int>(i))
        sub.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(index[w]));
  return Graph(vertices.size(), sub);
}

namespace {

// Splits a line into whitespace-separated tokens and parses each as a
// nonnegative integer.
std::vector<std::size_t> parse_ints(const std::string& line, std::size_t lineno) {
  std::vector<std::size_t> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(lineno, "expected a nonnegative integer, got '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

bool is_skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_skippable(line)) continue;
    const auto values = parse_ints(line, lineno);
    if (!have_header) {
      if (values.size() != 2) throw ParseError(lineno, "header must be 'n m'");
      n = values[0];
      m = values[1];
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m)
      throw ParseError(lineno, "more edge lines than the " + std::to_string(m) + " declared");
    if (values.size() != 2) throw ParseError(lineno, "edge line must be 'u v'");
    const auto u = values[0];
    const auto v = values[1];
    if (u >= n || v >= n)
      throw ParseError(lineno, "vertex ID out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'n m' header");
  if (edges.size() != m)
    throw ParseError(lineno, "expected " + std::to_string(m) + " edge lines, found " +
                                 std::to_string(edges.size()));
  return Graph(n, edges);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace {

void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("graph has no vertices");
}

}  // namespace

std::size_t max_degree(const Graph& g) {
  require_nonempty(g);
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  require_nonempty(g);
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph& g) { return is_connected(g) && g.size() + 1 == g.order(); }

std::size_t diameter(const Graph& g) {
  require_nonempty(g);
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) throw std::domain_error("diameter is undefined on a disconnected graph");
      best = std::max(best, static_cast<std::size_t>(d));
    }
  }
  return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    const auto dist = bfs_distances(g, s);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[v] < 0) continue;
      seen[v] = true;
      comp.push_back(v);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace powerdom
