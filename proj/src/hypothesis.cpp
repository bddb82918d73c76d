#include "fracfactor/hypothesis.hpp"

#include <string>

#include "fracfactor/errors.hpp"

namespace fracfactor {

bool order_condition_holds(std::int64_t n, const FactorParams& params) {
  const std::int64_t a = params.a();
  const std::int64_t b = params.b();
  return b * n >= (a + 2 * b) * (2 * a + 2 * b - 3) + 1;
}

HypothesisReport check_theorem1_hypotheses(const Graph& g, const FactorParams& params) {
  if (g.order() < 1) throw InputError("hypothesis check needs a nonempty graph");
  const std::int64_t a = params.a();
  const std::int64_t b = params.b();
  const std::int64_t n = g.order();
  const std::int64_t w = a + 2 * b;

  HypothesisReport report;
  report.order_margin = b * n - (w * (2 * a + 2 * b - 3) + 1);
  report.order_ok = report.order_margin >= 0;

  report.min_degree = min_degree(g);
  report.min_degree_margin = w * report.min_degree - (b * n + a * w);
  report.min_degree_ok = report.min_degree_margin >= 0;

  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      if (g.adjacent(x, y)) continue;
      const int size = static_cast<int>(neighborhood_union(g, x, y).size());
      if (!report.worst_union_size || size < *report.worst_union_size) {
        report.worst_union_size = size;
        report.worst_pair = std::make_pair(x, y);
      }
    }
  }
  if (report.worst_union_size) {
    report.neighborhood_margin = w * *report.worst_union_size - (a + b) * n;
    report.neighborhood_ok = *report.neighborhood_margin >= 0;
  } else {
    report.neighborhood_ok = true;
  }
  return report;
}

CorollaryThresholds corollary_thresholds(int k) {
  if (k < 1) throw InputError("corollary thresholds need k >= 1");
  const std::int64_t kk = k;
  CorollaryThresholds out;
  out.k = k;
  // Smallest n with k*n >= 3k(4k-3) + 1.
  const std::int64_t rhs = 3 * kk * (4 * kk - 3) + 1;
  out.min_order = (rhs + kk - 1) / kk;
  // (3k)*delta >= k*n + 3k^2 and (3k)*|N∪N| >= 2k*n, divided through by k.
  out.degree = LinearBound{3, 1, 3 * kk};
  out.neighborhood = LinearBound{3, 2, 0};
  return out;
}

ClaimReport check_proof_claims(const Graph& g, const FactorParams& params, const VertexSet& x) {
  g.check_set(x);
  if (!is_independent(g, x)) throw InputError("claim check needs an independent set");
  const HypothesisReport hypotheses = check_theorem1_hypotheses(g, params);
  if (!hypotheses.all_ok()) {
    throw PreconditionError("claim check needs a graph satisfying all three hypotheses");
  }
  const std::int64_t a = params.a();
  const std::int64_t b = params.b();
  const std::int64_t n = g.order();

  ClaimReport report;
  report.independent_set_size = static_cast<std::int64_t>(x.size());
  report.independent_set_margin = b * n - (a + 2 * b) * report.independent_set_size;
  report.independent_set_bound_ok = report.independent_set_margin >= 0;
  if (!report.independent_set_bound_ok) {
    throw InconsistencyError("independent set of size " + std::to_string(x.size()) +
                             " exceeds bn/(a+2b) on a hypothesis-satisfying graph");
  }
  const Deletion h = delete_vertices(g, x);
  if (h.graph.order() == 0) {
    throw InconsistencyError("independent set covers every vertex of a hypothesis-satisfying graph");
  }
  report.residual_min_degree = min_degree(h.graph);
  report.residual_degree_ok = report.residual_min_degree >= params.a();
  if (!report.residual_degree_ok) {
    throw InconsistencyError("delta(G - X) = " + std::to_string(report.residual_min_degree) +
                             " < a on a hypothesis-satisfying graph");
  }
  return report;
}

}  // namespace fracfactor
