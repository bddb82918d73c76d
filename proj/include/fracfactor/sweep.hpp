#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fracfactor/criticality.hpp"
#include "fracfactor/factor.hpp"
#include "fracfactor/graph.hpp"
#include "fracfactor/hypothesis.hpp"

namespace fracfactor {

// Largest order for exhaustive labeled-graph enumeration (2^21 graphs).
inline constexpr int kMaxExhaustiveOrder = 7;

enum class EnsembleKind { exhaustive, random };

struct EnsembleSpec {
  std::string name;
  EnsembleKind kind = EnsembleKind::exhaustive;
  std::vector<FactorParams> params;
  // exhaustive: every labeled graph with min_order <= n <= max_order.
  int min_order = 1;
  int max_order = 6;
  // random: `samples` graphs at each order, sample i drawn with
  // p_grid[i % |p_grid|] and seed + i.
  std::vector<int> orders;
  int samples = 0;
  std::vector<Rational> p_grid;
  std::uint64_t seed = 0;
};

struct SweepConfig {
  std::vector<EnsembleSpec> ensembles;
  int brute_force_limit = kDefaultBruteForceLimit;
  int criticality_limit = kDefaultCriticalityLimit;
  std::string output;  // optional path for the JSON summary
};

// INI-style configuration. Top-level keys set the limits and output path,
// each [section] declares one ensemble:
//
//   brute_limit = 20
//   crit_limit = 20
//   output = sweep.json
//
//   [small]
//   kind = exhaustive
//   params = 1:1, 1:2
//   min_order = 1
//   max_order = 6
//
//   [medium]
//   kind = random
//   params = 1:2
//   orders = 9, 12
//   samples = 500
//   p = 1/2, 3/4
//   seed = 7
//
// Throws InputError on unknown keys, empty parameter lists, invalid (a,b),
// or orders above the criticality limit.
SweepConfig parse_sweep_config(std::string_view text);

// Re-checks the invariants enforced by the parser, for configs assembled or
// modified in code.
void validate_sweep_config(const SweepConfig& config);
SweepConfig read_sweep_config(const std::string& path);

struct EnsembleSummary {
  std::string ensemble;
  EnsembleKind kind = EnsembleKind::exhaustive;
  FactorParams params{1, 1};
  std::int64_t graphs_examined = 0;
  std::int64_t hypothesis_passing = 0;
  std::int64_t critical_confirmed = 0;
  std::int64_t claim_sets_checked = 0;
  std::int64_t counterexamples = 0;
  std::int64_t claim_failures = 0;
};

// A graph satisfying all three hypotheses that is not critical.
struct Counterexample {
  std::string ensemble;
  FactorParams params{1, 1};
  Graph graph;
  HypothesisReport hypotheses;
  CriticalityReport criticality;
};

struct ClaimFailure {
  std::string ensemble;
  FactorParams params{1, 1};
  Graph graph;
  VertexSet independent_set;
  std::string message;
};

struct SweepSummary {
  std::vector<EnsembleSummary> rows;
  std::vector<Counterexample> counterexamples;
  std::vector<ClaimFailure> claim_failures;

  std::int64_t total_hypothesis_passing() const;
  bool ok() const { return counterexamples.empty() && claim_failures.empty(); }
};

// Every graph of every ensemble is checked against every (a,b): when the
// three hypotheses hold, criticality is decided and the two proof claims are
// checked on each maximal independent set.
SweepSummary run_sweep(const SweepConfig& config);

const char* to_string(EnsembleKind kind);

}  // namespace fracfactor
