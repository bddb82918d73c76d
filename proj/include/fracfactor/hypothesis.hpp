#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "fracfactor/factor.hpp"
#include "fracfactor/graph.hpp"

namespace fracfactor {

// The three sufficient conditions for fractional ID-[a,b]-factor-criticality,
// each evaluated as an integer inequality after multiplying through by the
// positive denominators b or a+2b:
//
//   order         b*n                 >= (a+2b)(2a+2b-3) + 1
//   min degree    (a+2b)*delta(G)     >= b*n + a(a+2b)
//   neighborhood  (a+2b)*|N(x)∪N(y)|  >= (a+b)*n   for all nonadjacent x != y
//
// Each margin is left side minus right side, so a condition holds iff its
// margin is nonnegative.
struct HypothesisReport {
  bool order_ok = false;
  bool min_degree_ok = false;
  bool neighborhood_ok = false;

  std::int64_t order_margin = 0;
  std::int64_t min_degree_margin = 0;
  // Absent when g has no nonadjacent pair; the condition then holds vacuously.
  std::optional<std::int64_t> neighborhood_margin;

  int min_degree = 0;
  // Lexicographically first nonadjacent pair attaining the minimum union.
  std::optional<std::pair<Vertex, Vertex>> worst_pair;
  std::optional<int> worst_union_size;

  bool all_ok() const { return order_ok && min_degree_ok && neighborhood_ok; }
};

// Requires n >= 1.
HypothesisReport check_theorem1_hypotheses(const Graph& g, const FactorParams& params);

// lhs_coefficient * value >= n_coefficient * n + constant.
struct LinearBound {
  std::int64_t lhs_coefficient = 0;
  std::int64_t n_coefficient = 0;
  std::int64_t constant = 0;

  bool holds(std::int64_t value, std::int64_t n) const {
    return lhs_coefficient * value >= n_coefficient * n + constant;
  }
};

// The conditions specialised to a = b = k.
struct CorollaryThresholds {
  int k = 1;
  std::int64_t min_order = 0;  // 12k - 8
  LinearBound degree;          // 3*delta >= n + 3k
  LinearBound neighborhood;    // 3*|N(x)∪N(y)| >= 2n
};

// Throws InputError for k < 1.
CorollaryThresholds corollary_thresholds(int k);

// Order condition alone, for probing the boundary without building a graph.
bool order_condition_holds(std::int64_t n, const FactorParams& params);

struct ClaimReport {
  std::int64_t independent_set_size = 0;
  // (a+2b)|X| <= b*n
  bool independent_set_bound_ok = false;
  std::int64_t independent_set_margin = 0;
  // delta(G - X) >= a
  bool residual_degree_ok = false;
  int residual_min_degree = 0;
};

// Checks the two consequences of the hypotheses that hold for every
// independent X: |X| <= bn/(a+2b) and delta(G - X) >= a. Throws InputError
// when X is not independent, PreconditionError when the hypotheses fail, and
// InconsistencyError when either consequence is violated.
ClaimReport check_proof_claims(const Graph& g, const FactorParams& params, const VertexSet& x);

}  // namespace fracfactor
