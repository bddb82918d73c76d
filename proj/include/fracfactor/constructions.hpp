#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracfactor/criticality.hpp"
#include "fracfactor/factor.hpp"
#include "fracfactor/graph.hpp"

namespace fracfactor {

// Named vertex groups of a generated graph. `parts` partition V(G) into
// contiguous index ranges; `markers` name distinguished subsets of parts.
struct ConstructionLabels {
  std::map<std::string, VertexSet> parts;
  std::map<std::string, VertexSet> markers;

  const VertexSet& part(const std::string& name) const { return parts.at(name); }
};

struct Construction {
  Graph graph;
  ConstructionLabels labels;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// K_{1,leaves} with the center at vertex 0.
Graph star_graph(int leaves);
Graph complete_multipartite(std::span<const int> part_sizes);

// Complete tripartite graph with parts of sizes bt, at and bt+1, laid out in
// that index order as "btK1", "atK1", "bt1K1". Order (a+2b)t+1.
//
// Deleting btK1 leaves a graph in which S = atK1 gives delta(S,T) = -a. The
// lexicographic criticality search reports btK1 as the failing independent
// set, also when a = b.
Construction remark1_graph(const FactorParams& params, int t);

// Parts "btK1", "at1K1" (at-1 vertices), "K2s" (bt/2 disjoint edges) and the
// single vertex "u", in that index order. The first three parts are joined
// completely, u is joined to all of btK1 and to the marker set "x_i", the
// first a-1 vertices of at1K1. Order (a+2b)t. Requires bt even and at >= 2.
Construction remark2_graph(const FactorParams& params, int t);

// G(n, p): each pair is an edge independently with probability p. Uses the
// raw 64-bit output of a mt19937_64 seeded with `seed`, so samples are
// identical across platforms. Requires 0 <= p <= 1.
Graph random_graph(int n, const Rational& p, std::uint64_t seed);

enum class SharpnessKind { remark1, remark2 };

struct SharpnessClaim {
  std::string name;
  bool holds = false;
  // Essential claims hold for every t >= 1; the others depend on t being
  // large and are reported, not enforced.
  bool essential = false;
  std::string detail;
};

struct SharpnessReport {
  SharpnessKind kind = SharpnessKind::remark1;
  int a = 1;
  int b = 1;
  int t = 1;
  int order = 0;
  std::vector<SharpnessClaim> claims;
  std::optional<CriticalityReport> criticality;  // absent above the limit

  const SharpnessClaim* find(const std::string& name) const;
};

// Rebuilds the construction and evaluates every numeric claim made about it.
// Throws InconsistencyError when an essential claim fails.
SharpnessReport verify_sharpness(SharpnessKind kind, const FactorParams& params, int t,
                                 const CriticalityOptions& options = {});

const char* to_string(SharpnessKind kind);

}  // namespace fracfactor
