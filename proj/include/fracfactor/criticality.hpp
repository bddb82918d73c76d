#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fracfactor/factor.hpp"
#include "fracfactor/graph.hpp"

namespace fracfactor {

inline constexpr int kDefaultCriticalityLimit = 20;

// Calls `visit` on every independent set of g, the empty set included, in
// order of increasing size and lexicographically within a size. Sets larger
// than `max_size` are skipped. Enumeration stops early when `visit` returns
// false.
void for_each_independent_set(const Graph& g, std::optional<int> max_size,
                              const std::function<bool(const VertexSet&)>& visit);

std::vector<VertexSet> enumerate_independent_sets(const Graph& g,
                                                  std::optional<int> max_size = std::nullopt);

// Independent sets that cannot be extended by any further vertex.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

struct CriticalityReport {
  bool verdict = false;
  std::int64_t independent_sets_checked = 0;
  std::optional<VertexSet> failing_set;  // original labels of g
  // Certificate for G - I in the renumbered labels of `failing_deletion`;
  // absent when G - I is beyond the brute-force limit.
  std::optional<ViolationCertificate> failing_certificate;
  std::optional<Deletion> failing_deletion;
};

struct CriticalityOptions {
  int criticality_limit = kDefaultCriticalityLimit;
  int brute_force_limit = kDefaultBruteForceLimit;
};

// Decides whether G - I has a fractional [a,b]-factor for every independent
// I. Every independent set is tested, not only the maximal ones. Stops at the
// first failing set in enumeration order. Throws ResourceError above the limit.
CriticalityReport is_fractional_id_factor_critical(const Graph& g, const FactorParams& params,
                                                   const CriticalityOptions& options = {});

}  // namespace fracfactor
