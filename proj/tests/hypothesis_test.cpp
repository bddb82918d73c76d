#include "doctest.h"

#include "fracfactor/constructions.hpp"
#include "fracfactor/criticality.hpp"
#include "fracfactor/errors.hpp"
#include "fracfactor/hypothesis.hpp"

using namespace fracfactor;

TEST_CASE("complete graphs pass all three conditions for a = b = 1") {
  for (int n = 4; n <= 12; ++n) {
    const HypothesisReport r = check_theorem1_hypotheses(complete_graph(n), FactorParams(1, 1));
    CHECK(r.order_ok);
    CHECK(r.min_degree_ok);
    CHECK(r.neighborhood_ok);
    CHECK_FALSE(r.worst_pair.has_value());
    CHECK_FALSE(r.neighborhood_margin.has_value());
    // 3(n-1) - (n + 3)
    CHECK(r.min_degree_margin == 2 * n - 6);
    CHECK(r.order_margin == n - 4);
  }
  const HypothesisReport k3 = check_theorem1_hypotheses(complete_graph(3), FactorParams(1, 1));
  CHECK_FALSE(k3.order_ok);
  CHECK(k3.order_margin == -1);
}

TEST_CASE("remark1 graph fails only the neighborhood condition for large enough t") {
  for (auto [a, b, t] : {std::tuple{1, 1, 1}, {1, 2, 1}, {2, 2, 2}, {2, 3, 2}}) {
    const FactorParams params(a, b);
    const Construction c = remark1_graph(params, t);
    const HypothesisReport r = check_theorem1_hypotheses(c.graph, params);
    const std::int64_t n = c.graph.order();
    CHECK_FALSE(r.neighborhood_ok);
    REQUIRE(r.worst_union_size.has_value());
    CHECK(*r.worst_union_size == (a + b) * t);
    CHECK((a + 2 * b) * *r.worst_union_size < (a + b) * n);
    CHECK(c.labels.part("bt1K1").contains(r.worst_pair->first));
    CHECK(c.labels.part("bt1K1").contains(r.worst_pair->second));
  }
  const FactorParams params(1, 1);
  const HypothesisReport big = check_theorem1_hypotheses(remark1_graph(params, 5).graph, params);
  CHECK(big.order_ok);
  CHECK(big.min_degree_ok);
}

TEST_CASE("remark2 graph misses the degree bound by exactly one") {
  for (auto [a, b, t] : {std::tuple{1, 1, 2}, {2, 2, 1}, {1, 2, 2}, {2, 2, 2}, {3, 4, 1}}) {
    const FactorParams params(a, b);
    const Construction c = remark2_graph(params, t);
    const HypothesisReport r = check_theorem1_hypotheses(c.graph, params);
    CHECK_FALSE(r.min_degree_ok);
    CHECK(r.min_degree == b * t + a - 1);
    CHECK(r.min_degree_margin == -(a + 2 * b));
  }
  // a = b = 1, t = 2: n = 6, delta(G) = 2 while the bound asks for 3.
  const Construction c = remark2_graph(FactorParams(1, 1), 2);
  CHECK(min_degree(c.graph) == 2);
  CHECK_FALSE(LinearBound{3, 1, 3}.holds(2, 6));
  CHECK(LinearBound{3, 1, 3}.holds(3, 6));
}

TEST_CASE("worst pair is the lexicographically first minimiser") {
  // Two disjoint triangles: every cross pair has |N∪N| = 4.
  const Graph g = disjoint_union(complete_graph(3), complete_graph(3));
  const HypothesisReport r = check_theorem1_hypotheses(g, FactorParams(1, 1));
  CHECK(r.worst_pair == std::make_pair(0, 3));
  CHECK(*r.worst_union_size == 4);
  CHECK(*r.neighborhood_margin == 3 * 4 - 2 * 6);
  CHECK(r.neighborhood_ok);
  CHECK_THROWS_AS(check_theorem1_hypotheses(Graph(), FactorParams(1, 1)), InputError);
}

TEST_CASE("corollary_thresholds") {
  CHECK(corollary_thresholds(1).min_order == 4);
  CHECK(corollary_thresholds(2).min_order == 16);
  CHECK(corollary_thresholds(3).min_order == 28);
  for (int k = 1; k <= 10; ++k) {
    const CorollaryThresholds c = corollary_thresholds(k);
    CHECK(c.min_order == 12 * k - 8);
    CHECK(order_condition_holds(12 * k - 8, FactorParams(k, k)));
    CHECK_FALSE(order_condition_holds(12 * k - 9, FactorParams(k, k)));
  }
  CHECK_THROWS_AS(corollary_thresholds(0), InputError);
}

TEST_CASE("a = b = k specialisation agrees with the general check") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int k = 1 + static_cast<int>(seed % 2);
    const int n = 10 + static_cast<int>(seed % 13);
    const Graph g = random_graph(n, Rational(static_cast<std::int64_t>(6 + seed % 4), 10), seed);
    const HypothesisReport r = check_theorem1_hypotheses(g, FactorParams(k, k));
    const CorollaryThresholds c = corollary_thresholds(k);
    CHECK(r.order_ok == (n >= c.min_order));
    CHECK(r.min_degree_ok == c.degree.holds(r.min_degree, n));
    if (r.worst_union_size) CHECK(r.neighborhood_ok == c.neighborhood.holds(*r.worst_union_size, n));
  }
}

TEST_CASE("check_proof_claims") {
  SUBCASE("K4 with X = {0}") {
    const ClaimReport r = check_proof_claims(complete_graph(4), FactorParams(1, 1), VertexSet{0});
    CHECK(r.independent_set_bound_ok);
    CHECK(r.independent_set_margin == 4 - 3);
    CHECK(r.residual_degree_ok);
    CHECK(r.residual_min_degree == 2);
  }
  SUBCASE("complete graph with X empty") {
    const ClaimReport r = check_proof_claims(complete_graph(6), FactorParams(1, 1), VertexSet{});
    CHECK(r.independent_set_margin == 6);
    CHECK(r.residual_min_degree == 5);
  }
  SUBCASE("every maximal independent set of hypothesis-passing random graphs") {
    int graphs = 0;
    for (std::uint64_t seed = 0; seed < 400 && graphs < 25; ++seed) {
      const Graph g = random_graph(12, Rational(4, 5), seed);
      const FactorParams params(1, 1 + static_cast<int>(seed % 2));
      if (!check_theorem1_hypotheses(g, params).all_ok()) continue;
      ++graphs;
      for (const VertexSet& x : maximal_independent_sets(g)) CHECK_NOTHROW(check_proof_claims(g, params, x));
    }
    CHECK(graphs > 0);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(check_proof_claims(cycle_graph(4), FactorParams(1, 1), VertexSet{0, 1}), InputError);
    // C4 fails the order condition.
    CHECK_THROWS_AS(check_proof_claims(cycle_graph(4), FactorParams(1, 1), VertexSet{0}), PreconditionError);
  }
}
