#include <doctest.h>

#include <random>
#include <stdexcept>

#include "corpus.hpp"
#include "powerdom/bounds.hpp"
#include "powerdom/families.hpp"

using namespace powerdom;

TEST_CASE("ceil_of") {
  CHECK(ceil_of(Rational(4, 5)) == 1);
  CHECK(ceil_of(Rational(80, 18)) == 5);
  CHECK(ceil_of(Rational(3)) == 3);
  CHECK(ceil_of(Rational(0)) == 0);
}

TEST_CASE("correct_lower_bound") {
  CHECK(correct_lower_bound(gen_path(4)) == Rational(4, 5));
  CHECK(correct_lower_bound(gen_path(1)) == Rational(1));
  // ppt(H_9) = 33 from brute force: 82 / (33*9 + 1).
  const Rational h9 = correct_lower_bound(gen_h_delta(9).graph);
  CHECK(h9 == Rational(82, 298));
  CHECK(h9 <= Rational(2));
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(correct_lower_bound(Graph(4, two)), std::domain_error);
}

TEST_CASE("refuted_diameter_bound") {
  CHECK(refuted_diameter_bound(gen_h_delta(9).graph) == Rational(82, 37));
  for (std::int64_t d = 3; d <= 16; ++d)
    CHECK(refuted_diameter_bound(gen_h_delta(static_cast<std::size_t>(d)).graph) ==
          Rational(d * d + 1, 4 * d + 1));
  CHECK(refuted_diameter_bound(gen_path(4)) == Rational(4, 7));
  CHECK(refuted_diameter_bound(gen_path(1)) == Rational(1));
}

TEST_CASE("ppt_lower_bound") {
  CHECK(ppt_lower_bound(gen_h_delta(9).graph) == 5);
  CHECK(ppt_lower_bound(gen_path(4)) == 2);
  CHECK(ppt_lower_bound(gen_path(2)) == 1);
  CHECK_THROWS_AS(ppt_lower_bound(gen_path(1)), std::domain_error);
}

TEST_CASE("tree_lower_bound") {
  CHECK(tree_lower_bound(gen_star(5)) == 1);
  CHECK(tree_lower_bound(gen_path(4)) == 1);
  CHECK(tree_lower_bound(gen_spider(3, 3)) == 1);
  CHECK(gamma_p(gen_spider(3, 3)).gamma_p >= 1);
  CHECK_THROWS_AS(tree_lower_bound(gen_cycle(4)), std::domain_error);
  CHECK_THROWS_AS(tree_lower_bound(gen_path(2)), std::domain_error);
}

TEST_CASE("bounds_report on the counterexample family") {
  const auto h9 = bounds_report(gen_h_delta(9).graph);
  CHECK(h9.n == 82);
  CHECK(h9.diameter == 4);
  CHECK(h9.max_degree == 9);
  CHECK(h9.gamma_p == 2);
  CHECK(h9.ppt_graph == 33);
  CHECK(h9.refuted_bound_raw == Rational(82, 37));
  CHECK(h9.refutation_flag);
  CHECK(h9.ppt_lower_bound == 5);
  CHECK_FALSE(h9.tree_bound.has_value());

  const auto h8 = bounds_report(gen_h_delta(8).graph);
  CHECK(h8.gamma_p == 2);
  CHECK(h8.refuted_bound_raw == Rational(65, 33));
  CHECK_FALSE(h8.refutation_flag);

  const auto p6 = bounds_report(gen_path(6));
  CHECK_FALSE(p6.refutation_flag);
  CHECK(p6.tree_bound == 1);

  const auto k1 = bounds_report(gen_path(1));
  CHECK_FALSE(k1.ppt_lower_bound.has_value());
}

TEST_CASE("refutation threshold is delta >= 9") {
  // (d^2+1)/(4d+1) > 2  <=>  d^2 - 8d - 1 > 0, checked by cross-multiplication.
  for (std::int64_t d = 3; d <= 40; ++d) {
    const bool expected = d * d - 8 * d - 1 > 0;
    CHECK((Rational(d * d + 1, 4 * d + 1) > Rational(2)) == expected);
    CHECK(expected == (d >= 9));
  }
}

TEST_CASE("valid bounds hold on random connected graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const auto r = bounds_report(corpus::random_connected(rng, n));
    CHECK(static_cast<std::int64_t>(r.gamma_p) >= ceil_of(r.correct_bound_raw));
    REQUIRE(r.ppt_lower_bound.has_value());
    CHECK(static_cast<std::int64_t>(r.ppt_graph) >= *r.ppt_lower_bound);
    if (r.tree_bound) CHECK(static_cast<std::int64_t>(r.gamma_p) >= *r.tree_bound);
    CHECK(r.refutation_flag == (r.refuted_bound_raw > Rational(static_cast<std::int64_t>(r.gamma_p))));
  }
}
