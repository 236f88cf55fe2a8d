#include <doctest.h>

#include <random>
#include <stdexcept>

#include "powerdom/errors.hpp"
#include "powerdom/families.hpp"
#include "powerdom/graph.hpp"

using namespace powerdom;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error for: " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse_graph reads the documented examples") {
  const Graph p3 = parse_graph("3 2\n0 1\n1 2\n");
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3 == gen_path(3));

  const Graph k1 = parse_graph("1 0\n");
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);

  const Graph c4 = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(c4 == gen_cycle(4));
}

TEST_CASE("parse_graph skips comments and blank lines") {
  const Graph g = parse_graph("# family=path\n\n3 2\n  # inline comment line\n0 1\n\n1 2\n");
  CHECK(g == gen_path(3));
}

TEST_CASE("parse_graph collapses duplicate and reversed edge lines") {
  const Graph g = parse_graph("3 4\n0 1\n1 0\n1 2\n0 1\n");
  CHECK(g.size() == 2);
  CHECK(g == gen_path(3));
}

TEST_CASE("parse_graph reports the offending line") {
  CHECK(parse_error_line("3\n0 1\n") == 1);
  CHECK(parse_error_line("# c\n3 x\n") == 2);
  CHECK(parse_error_line("3 1\n0 3\n") == 2);
  CHECK(parse_error_line("3 1\n\n1 1\n") == 3);
  CHECK(parse_error_line("3 1\n0 -1\n") == 2);
  CHECK(parse_error_line("3 1\n0 1 2\n") == 2);
  CHECK(parse_error_line("3 1\n0 1\n1 2\n") == 3);
  CHECK(parse_error_line("3 2\n0 1\n") == 2);
  CHECK(parse_error_line("") == 1);
}

TEST_CASE("write_graph emits canonical edge order") {
  CHECK(write_graph(gen_path(1)) == "1 0\n");
  CHECK(write_graph(gen_path(3)) == "3 2\n0 1\n1 2\n");
  CHECK(write_graph(gen_cycle(4)) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
}

TEST_CASE("write/parse round trip on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(v, u);
    const Graph g(n, edges);
    CHECK(parse_graph(write_graph(g)) == g);
  }
}

TEST_CASE("Graph rejects self-loops and out-of-range endpoints") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
  const std::vector<Edge> far{{0, 3}};
  CHECK_THROWS_AS(Graph(3, far), std::invalid_argument);
}

TEST_CASE("max_degree") {
  CHECK(max_degree(gen_path(3)) == 2);
  CHECK(max_degree(gen_path(1)) == 0);
  CHECK(max_degree(gen_star(5)) == 5);
  CHECK_THROWS_AS(max_degree(Graph{}), std::invalid_argument);
}

TEST_CASE("diameter") {
  CHECK(diameter(gen_path(4)) == 3);
  CHECK(diameter(gen_path(1)) == 0);
  for (std::size_t n = 1; n <= 15; ++n) CHECK(diameter(gen_path(n)) == n - 1);
  for (std::size_t n = 2; n <= 10; ++n) CHECK(diameter(gen_complete(n)) == 1);
  CHECK(diameter(gen_cycle(7)) == 3);
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(diameter(Graph(4, two)), std::domain_error);
}

TEST_CASE("is_connected and is_tree") {
  CHECK(is_connected(gen_path(3)));
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_FALSE(is_connected(Graph(4, two)));
  CHECK(is_tree(gen_path(4)));
  CHECK_FALSE(is_tree(gen_cycle(4)));
  CHECK(is_tree(gen_star(5)));
  CHECK(is_tree(gen_path(1)));
  CHECK_FALSE(is_tree(Graph(4, two)));
  CHECK_THROWS_AS(is_connected(Graph{}), std::invalid_argument);
}

TEST_CASE("is_tree implies connected with n-1 edges") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    const Graph g(n, edges);
    if (is_tree(g)) {
      CHECK(is_connected(g));
      CHECK(g.size() + 1 == n);
    }
  }
}

TEST_CASE("components and induced subgraphs") {
  const std::vector<Edge> edges{{0, 2}, {2, 4}, {1, 3}};
  const Graph g(5, edges);
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<Vertex>{0, 2, 4});
  CHECK(comps[1] == std::vector<Vertex>{1, 3});
  CHECK(g.induced(comps[0]) == gen_path(3));
}

TEST_CASE("vertex list parsing") {
  CHECK(parse_vertex_list("0,5,12") == std::vector<Vertex>{0, 5, 12});
  CHECK(parse_vertex_list("").empty());
  CHECK_THROWS_AS(parse_vertex_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_vertex_list("a"), std::invalid_argument);
  CHECK_THROWS_AS(VertexSet::from_members(3, std::vector<Vertex>{3}), std::out_of_range);
  const auto s = VertexSet::from_members(70, std::vector<Vertex>{69, 0, 64});
  CHECK(format_vertex_list(s) == "0,64,69");
  CHECK(VertexSet::full(70).size() == 70);
}
