#include "doctest.h"

#include "fracfactor/constructions.hpp"
#include "fracfactor/errors.hpp"
#include "fracfactor/factor.hpp"
#include "oracles.hpp"

using namespace fracfactor;

namespace {

const std::vector<FactorParams> kParamGrid = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};

bool half_integral(const FractionalAssignment& h) {
  for (const auto& [e, value] : h.values()) {
    if (value != Rational(0) && value != Rational(1, 2) && value != Rational(1)) return false;
  }
  return true;
}

// Checks one instance against every cross-route property at once.
void check_instance(const Graph& g, const FactorParams& params) {
  const OracleVerdict oracle_verdict = has_fractional_factor_bruteforce(g, params);
  const FactorResult result = find_fractional_factor(g, params);
  REQUIRE(oracle_verdict.feasible() == result.feasible());
  CHECK(has_fractional_factor(g, params) == result.feasible());
  if (result.feasible()) {
    CHECK(validate_assignment(g, params, *result.assignment).valid);
    CHECK(half_integral(*result.assignment));
  } else {
    REQUIRE(result.certificate.has_value());
    CHECK(*result.certificate == *oracle_verdict.certificate);
    const DeltaValue again = delta_st(g, params, result.certificate->s);
    CHECK(again.delta == result.certificate->delta);
    CHECK(again.t == result.certificate->t);
    CHECK(result.certificate->delta <= -1);
    CHECK(result.certificate->delta == oracle::min_delta(g, params.a(), params.b()));
  }
}

}  // namespace

TEST_CASE("FactorParams requires 1 <= a <= b") {
  CHECK_NOTHROW(FactorParams(1, 1));
  CHECK_THROWS_AS(FactorParams(0, 1), InputError);
  CHECK_THROWS_AS(FactorParams(3, 2), InputError);
}

TEST_CASE("delta_st") {
  SUBCASE("remark1 graph minus btK1 with S = atK1 gives -a") {
    for (auto [a, b, t] : {std::tuple{1, 1, 1}, {1, 2, 1}, {2, 3, 2}, {3, 3, 1}}) {
      const FactorParams params(a, b);
      const Construction c = remark1_graph(params, t);
      const Deletion h = delete_vertices(c.graph, c.labels.part("btK1"));
      std::vector<Vertex> s;
      for (Vertex v : c.labels.part("atK1")) s.push_back(h.old_to_new[v]);
      const DeltaValue dv = delta_st(h.graph, params, VertexSet(s));
      CHECK(dv.delta == -a);
      CHECK(h.to_original(dv.t) == c.labels.part("bt1K1"));
    }
  }
  SUBCASE("complete graph with S empty") {
    const DeltaValue dv = delta_st(complete_graph(5), FactorParams(1, 1), VertexSet{});
    CHECK(dv.t.empty());
    CHECK(dv.delta == 0);
  }
  SUBCASE("star with S = center") {
    const DeltaValue dv = delta_st(star_graph(3), FactorParams(1, 1), VertexSet{0});
    CHECK(dv.t == VertexSet{1, 2, 3});
    CHECK(dv.delta == -2);
  }
  SUBCASE("agrees with the naive evaluation") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Graph g = random_graph(7, Rational(2, 5), seed);
      const FactorParams params(1 + static_cast<int>(seed % 2), 2);
      for (std::uint64_t mask = 0; mask < 128; mask += 5) {
        std::vector<bool> in_s(7);
        for (int v = 0; v < 7; ++v) in_s[v] = (mask >> v & 1U) != 0;
        const auto naive = oracle::delta(g, params.a(), params.b(), in_s);
        const auto fast = delta_st(g, params, VertexSet::from_mask(mask));
        CHECK(fast.delta == naive.delta);
        CHECK(fast.t == VertexSet(naive.t));
      }
    }
  }
  CHECK_THROWS_AS(delta_st(complete_graph(3), FactorParams(1, 1), VertexSet{3}), InputError);
}

TEST_CASE("brute-force oracle") {
  SUBCASE("path on three vertices") {
    const OracleVerdict v = has_fractional_factor_bruteforce(path_graph(3), FactorParams(1, 1));
    REQUIRE_FALSE(v.feasible());
    CHECK(v.certificate->s == VertexSet{1});
    CHECK(v.certificate->t == VertexSet{0, 2});
    CHECK(v.certificate->delta == -1);
  }
  SUBCASE("even cycle") {
    CHECK(has_fractional_factor_bruteforce(cycle_graph(4), FactorParams(1, 1)).feasible());
  }
  SUBCASE("remark1 graph minus btK1 has delta -a") {
    for (auto [a, b, t] : {std::tuple{1, 1, 1}, {1, 2, 2}, {2, 2, 1}}) {
      const FactorParams params(a, b);
      const Construction c = remark1_graph(params, t);
      const Graph h = delete_vertices(c.graph, c.labels.part("btK1")).graph;
      const OracleVerdict v = has_fractional_factor_bruteforce(h, params);
      REQUIRE_FALSE(v.feasible());
      CHECK(v.certificate->delta == -a);
    }
  }
  SUBCASE("tie-break prefers smaller then lexicographically first S") {
    // Two disjoint copies of P3: S = {1} and S = {4} both reach -1; S = {1,4}
    // reaches -2 and wins on value.
    const Graph twice = disjoint_union(path_graph(3), path_graph(3));
    const OracleVerdict v = has_fractional_factor_bruteforce(twice, FactorParams(1, 1));
    CHECK(v.certificate->s == VertexSet{1, 4});
    CHECK(v.certificate->delta == -2);
    // An isolated vertex: S = {} already gives -1 and is smallest.
    const OracleVerdict iso = has_fractional_factor_bruteforce(Graph(1), FactorParams(1, 1));
    CHECK(iso.certificate->s.empty());
    CHECK(iso.certificate->delta == -1);
  }
  SUBCASE("limit") {
    CHECK_THROWS_AS(has_fractional_factor_bruteforce(Graph(21), FactorParams(1, 1)), ResourceError);
    CHECK_THROWS_AS(has_fractional_factor_bruteforce(Graph(9), FactorParams(1, 1), 8), ResourceError);
    CHECK_NOTHROW(has_fractional_factor_bruteforce(Graph(9), FactorParams(1, 1), 9));
  }
}

TEST_CASE("find_fractional_factor fixtures") {
  SUBCASE("K2") {
    const FactorResult r = find_fractional_factor(complete_graph(2), FactorParams(1, 1));
    REQUIRE(r.feasible());
    CHECK(r.assignment->at({0, 1}) == Rational(1));
  }
  SUBCASE("triangle is half everywhere") {
    const FactorResult r = find_fractional_factor(complete_graph(3), FactorParams(1, 1));
    REQUIRE(r.feasible());
    for (const auto& [e, value] : r.assignment->values()) CHECK(value == Rational(1, 2));
  }
  SUBCASE("star K1,3 is infeasible") {
    const FactorResult r = find_fractional_factor(star_graph(3), FactorParams(1, 1));
    REQUIRE_FALSE(r.feasible());
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->s == VertexSet{0});
    CHECK(r.certificate->delta == -2);
  }
  SUBCASE("no certificate above the brute-force limit") {
    const Graph big = disjoint_union(star_graph(3), complete_graph(20));
    const FactorResult r = find_fractional_factor(big, FactorParams(1, 1));
    CHECK_FALSE(r.feasible());
    CHECK_FALSE(r.certificate.has_value());
  }
  SUBCASE("a above every degree is infeasible, not an error") {
    const FactorResult r = find_fractional_factor(complete_graph(3), FactorParams(3, 5));
    CHECK_FALSE(r.feasible());
  }
  SUBCASE("empty graph has the empty factor") {
    CHECK(find_fractional_factor(Graph(), FactorParams(1, 1)).feasible());
  }
  SUBCASE("large inputs run in polynomial time") {
    const Graph g = random_graph(400, Rational(1, 20), 11);
    const FactorResult r = find_fractional_factor(g, FactorParams(2, 3));
    if (r.feasible()) CHECK(validate_assignment(g, FactorParams(2, 3), *r.assignment).valid);
    CHECK(find_fractional_factor(complete_graph(200), FactorParams(5, 7)).feasible());
  }
}

TEST_CASE("validate_assignment") {
  FractionalAssignment c4;
  for (const Edge& e : cycle_graph(4).edges()) c4.set(e, Rational(1, 2));
  const AssignmentCheck ok = validate_assignment(cycle_graph(4), FactorParams(1, 1), c4);
  CHECK(ok.valid);
  for (const Rational& s : ok.sums) CHECK(s == Rational(1));

  FractionalAssignment k2;
  k2.set({0, 1}, Rational(1));
  const AssignmentCheck k2_check = validate_assignment(complete_graph(2), FactorParams(1, 2), k2);
  CHECK(k2_check.valid);
  CHECK(k2_check.sums == std::vector<Rational>{1, 1});

  FractionalAssignment path;
  path.set({0, 1}, Rational(1));
  path.set({1, 2}, Rational(1));
  const AssignmentCheck bad = validate_assignment(path_graph(3), FactorParams(1, 1), path);
  CHECK_FALSE(bad.valid);
  CHECK(bad.sums[1] == Rational(2));

  FractionalAssignment missing;
  missing.set({0, 1}, Rational(1));
  CHECK_THROWS_AS(validate_assignment(path_graph(3), FactorParams(1, 1), missing), InputError);
  FractionalAssignment extra = path;
  extra.set({0, 2}, Rational(0));
  CHECK_THROWS_AS(validate_assignment(path_graph(3), FactorParams(1, 1), extra), InputError);
  FractionalAssignment out_of_range;
  out_of_range.set({0, 1}, Rational(3, 2));
  CHECK_THROWS_AS(validate_assignment(complete_graph(2), FactorParams(1, 1), out_of_range), InputError);
}

TEST_CASE("assignment serialization round-trips") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(8, Rational(3, 4), seed);
    const FactorResult r = find_fractional_factor(g, FactorParams(1, 2));
    if (!r.feasible()) continue;
    const std::string text = format_assignment(*r.assignment);
    const FractionalAssignment back = parse_assignment(text);
    CHECK(back.values() == r.assignment->values());
    CHECK(validate_assignment(g, FactorParams(1, 2), back).valid);
  }
  CHECK(format_assignment(parse_assignment("0 1 2/4\n")) == "0 1 1/2\n");
  CHECK_THROWS_AS(parse_assignment("0 1\n"), InputError);
  CHECK_THROWS_AS(parse_assignment("0 1 1/0\n"), InputError);
  CHECK_THROWS_AS(parse_assignment("0 1 1/2\n1 0 1/2\n"), InputError);
}

TEST_CASE("labeled graph counts match the independently computed values") {
  // Number of labeled graphs on n = 1..5 vertices with a fractional
  // [a,b]-factor, from a separate scan of the subset criterion.
  const std::vector<std::pair<FactorParams, std::vector<int>>> expected = {
      {FactorParams(1, 1), {0, 1, 1, 37, 383}},
      {FactorParams(1, 2), {0, 1, 4, 37, 763}},
      {FactorParams(2, 2), {0, 0, 1, 10, 218}},
  };
  for (const auto& [params, counts] : expected) {
    for (int n = 1; n <= 5; ++n) {
      int feasible = 0;
      oracle::for_each_labeled_graph(n, [&](const Graph& g) {
        feasible += find_fractional_factor(g, params).feasible() ? 1 : 0;
      });
      CHECK(feasible == counts[n - 1]);
    }
  }
}

TEST_CASE("oracle and flow solver agree exhaustively for n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      for (const auto& params : kParamGrid) check_instance(g, params);
    });
  }
}

TEST_CASE("oracle and flow solver agree on random graphs with n <= 9") {
  const Rational grid[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const int n = 7 + static_cast<int>(seed % 3);
    const Graph g = random_graph(n, grid[seed % 3], seed * 7919);
    for (const auto& params : kParamGrid) check_instance(g, params);
  }
}

TEST_CASE("direct half-integral search agrees with the flow solver") {
  int checked = 0;
  for (int n = 1; n <= 5; ++n) {
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      if (g.size() > 8) return;
      for (const auto& params : {FactorParams(1, 1), FactorParams(1, 2), FactorParams(2, 2)}) {
        CHECK(oracle::half_integral_factor_exists(g, params.a(), params.b()) ==
              has_fractional_factor(g, params));
        ++checked;
      }
    });
  }
  CHECK(checked > 1000);
}

TEST_CASE("feasibility is monotone in widening [a,b]") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_graph(8, Rational(1, 2), seed + 5000);
    for (int a = 1; a <= 3; ++a) {
      for (int b = a; b <= 3; ++b) {
        if (!has_fractional_factor(g, FactorParams(a, b))) continue;
        for (int a2 = 1; a2 <= a; ++a2) {
          for (int b2 = b; b2 <= 4; ++b2) CHECK(has_fractional_factor(g, FactorParams(a2, b2)));
        }
      }
    }
  }
}
