// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fracfactor/constructions.hpp"
#include "fracfactor/criticality.hpp"
#include "fracfactor/edge_list.hpp"
#include "fracfactor/factor.hpp"
#include "fracfactor/hypothesis.hpp"
#include "fracfactor/sweep.hpp"
#include "oracles.hpp"

using namespace fracfactor;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::string params_string(int a, int b, int t) {
  return "(a,b,t)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(t) + ")";
}

bool half_integral(const FractionalAssignment& h) {
  for (const auto& [e, value] : h.values()) {
    if (value != Rational(0) && value != Rational(1, 2) && value != Rational(1)) return false;
  }
  return true;
}

bool all_halves(const FractionalAssignment& h) {
  for (const auto& [e, value] : h.values()) {
    if (value != Rational(1, 2)) return false;
  }
  return true;
}

FractionalAssignment constant(const Graph& g, const Rational& value) {
  FractionalAssignment h;
  for (const Edge& e : g.edges()) h.set(e, value);
  return h;
}

const std::vector<std::tuple<int, int, int>> kRemark1Cases = {
    {1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 3, 2}};

void remark1_reproduction(Outcome& out) {
  for (auto [a, b, t] : kRemark1Cases) {
    const std::string tag = params_string(a, b, t);
    const FactorParams params(a, b);
    const Construction c = remark1_graph(params, t);
    out.require(c.graph.order() == (a + 2 * b) * t + 1, tag + " order");

    const VertexSet& bt = c.labels.part("btK1");
    const Deletion h = delete_vertices(c.graph, bt);
    std::vector<Vertex> s;
    for (Vertex v : c.labels.part("atK1")) s.push_back(h.old_to_new[v]);
    const DeltaValue d = delta_st(h.graph, params, VertexSet(s));
    out.require(d.delta == -a, tag + " delta(S,T) = " + std::to_string(d.delta));

    const CriticalityReport r = is_fractional_id_factor_critical(c.graph, params);
    out.require(!r.verdict, tag + " reported critical");
    out.require(r.failing_set && *r.failing_set == bt, tag + " failing set differs from the btK1 part");
  }
  out.detail << kRemark1Cases.size() << " instances";
}

void remark2_reproduction(Outcome& out) {
  const std::vector<std::tuple<int, int, int>> cases = {{1, 1, 2}, {1, 2, 2}, {2, 2, 1}, {2, 2, 2}};
  for (auto [a, b, t] : cases) {
    const std::string tag = params_string(a, b, t);
    const FactorParams params(a, b);
    const Construction c = remark2_graph(params, t);
    out.require(c.graph.order() == (a + 2 * b) * t, tag + " order");
    out.require(min_degree(c.graph) == b * t + a - 1, tag + " min degree");

    const Deletion h = delete_vertices(c.graph, c.labels.part("btK1"));
    const Vertex u = h.old_to_new[c.labels.part("u").members().front()];
    out.require(h.graph.degree(u) == a - 1, tag + " d_H(u)");
    out.require(!has_fractional_factor(h.graph, params), tag + " flow solver finds a factor of H");
    out.require(!has_fractional_factor_bruteforce(h.graph, params).feasible(),
                tag + " oracle finds no violation in H");
  }
  out.detail << cases.size() << " instances";
}

void oracle_agreement(Outcome& out) {
  const std::vector<FactorParams> grid = {FactorParams(1, 1), FactorParams(1, 2), FactorParams(2, 2)};
  std::int64_t instances = 0;
  std::int64_t feasible = 0;
  std::int64_t disagreements = 0;
  auto compare = [&](const Graph& g) {
    for (const FactorParams& params : grid) {
      ++instances;
      const OracleVerdict oracle = has_fractional_factor_bruteforce(g, params);
      const FactorResult solver = find_fractional_factor(g, params);
      if (oracle.feasible() != solver.feasible()) {
        ++disagreements;
        out.require(false, "verdicts differ on\n" + format_edge_list(g));
        continue;
      }
      if (solver.feasible()) {
        ++feasible;
        out.require(validate_assignment(g, params, *solver.assignment).valid, "invalid h");
        out.require(half_integral(*solver.assignment), "h is not half-integral");
      } else {
        out.require(solver.certificate && solver.certificate->delta == oracle.certificate->delta,
                    "certificate differs from the oracle minimum");
      }
    }
  };
  oracle::for_each_labeled_graph(6, compare);
  const Rational ps[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (int k = 0; k < 3; ++k) {
    for (std::uint64_t i = 0; i < 1000; ++i) compare(random_graph(9, ps[k], 1000 * k + i));
  }
  out.detail << instances << " instances, " << feasible << " feasible, " << disagreements << " disagreements";
}

void theorem_sweep(Outcome& out) {
  const SweepConfig config = parse_sweep_config(
      "[exhaustive]\n"
      "kind = exhaustive\n"
      "params = 1:1\n"
      "min_order = 1\n"
      "max_order = 6\n"
      "\n"
      "[random]\n"
      "kind = random\n"
      "params = 1:1, 1:2\n"
      "orders = 9, 12\n"
      "samples = 500\n"
      "p = 1/2, 3/4, 7/8, 15/16\n"
      "seed = 2024\n");
  const SweepSummary s = run_sweep(config);
  std::int64_t graphs = 0;
  std::int64_t sets = 0;
  for (const auto& row : s.rows) {
    graphs += row.graphs_examined;
    sets += row.claim_sets_checked;
  }
  out.require(s.counterexamples.empty(), "counterexample to criticality");
  out.require(s.claim_failures.empty(), "proof claim failure");
  out.require(s.total_hypothesis_passing() > 0, "no graph satisfied the hypotheses");
  out.detail << graphs << " graph checks, " << s.total_hypothesis_passing() << " hypothesis-passing, "
             << sets << " maximal sets, " << s.counterexamples.size() << " counterexamples";
}

void corollary_consistency(Outcome& out) {
  for (int k = 1; k <= 10; ++k) {
    const std::string tag = "k=" + std::to_string(k);
    out.require(corollary_thresholds(k).min_order == 12 * k - 8, tag + " min_order");
    out.require(order_condition_holds(12 * k - 8, FactorParams(k, k)), tag + " rejects 12k-8");
    out.require(!order_condition_holds(12 * k - 9, FactorParams(k, k)), tag + " accepts 12k-9");
  }
  out.detail << "k = 1..10";
}

void sharpness_margin(Outcome& out) {
  for (auto [a, b, t] : kRemark1Cases) {
    const std::string tag = params_string(a, b, t);
    const FactorParams params(a, b);
    const Graph g = remark1_graph(params, t).graph;
    const std::int64_t n = g.order();
    const HypothesisReport r = check_theorem1_hypotheses(g, params);
    if (!r.worst_union_size) {
      out.require(false, tag + " has no nonadjacent pair");
      continue;
    }
    const std::int64_t u = *r.worst_union_size;
    out.require((a + 2 * b) * u < (a + b) * n, tag + " union not below the bound");
    out.require((a + 2 * b) * (u + 1) > (a + b) * n, tag + " union more than one below the bound");
  }
  out.detail << kRemark1Cases.size() << " instances";
}

void fixtures(Outcome& out) {
  const FactorParams one(1, 1);
  const Graph p3 = path_graph(3);
  const Graph k13 = star_graph(3);
  const Graph c4 = cycle_graph(4);
  const Graph k3 = complete_graph(3);

  const OracleVerdict p3_verdict = has_fractional_factor_bruteforce(p3, one);
  out.require(!p3_verdict.feasible() && p3_verdict.certificate->delta == -1, "P3 certificate");
  const OracleVerdict k13_verdict = has_fractional_factor_bruteforce(k13, one);
  out.require(!k13_verdict.feasible() && k13_verdict.certificate->delta == -2, "K1,3 certificate");
  out.require(!find_fractional_factor(p3, one).feasible(), "P3 solver");
  out.require(!find_fractional_factor(k13, one).feasible(), "K1,3 solver");

  for (const Graph* g : {&c4, &k3}) {
    const std::string name = g == &c4 ? "C4" : "K3";
    out.require(validate_assignment(*g, one, constant(*g, Rational(1, 2))).valid, name + " h = 1/2");
    const FactorResult r = find_fractional_factor(*g, one);
    out.require(r.feasible(), name + " solver infeasible");
    if (r.feasible()) {
      out.require(validate_assignment(*g, one, *r.assignment).valid, name + " solver h invalid");
      out.detail << name << " solver h " << (all_halves(*r.assignment) ? "= 1/2" : "half-integral") << "; ";
    }
  }
  out.require(find_fractional_factor(k3, one).feasible() && all_halves(*find_fractional_factor(k3, one).assignment),
              "K3 solver h is not 1/2");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"remark1 construction", remark1_reproduction},
      {"remark2 construction", remark2_reproduction},
      {"oracle/solver agreement", oracle_agreement},
      {"theorem verification sweep", theorem_sweep},
      {"corollary consistency", corollary_consistency},
      {"sharpness margin", sharpness_margin},
      {"hand-computable fixtures", fixtures},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failed;
    std::printf("criterion %zu %-28s %s  (%.2f s)  %s\n", i + 1, criteria[i].first.c_str(),
                out.pass ? "PASS" : "FAIL", seconds, out.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
