#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "fracfactor/graph.hpp"

namespace fracfactor {

using Rational = boost::rational<std::int64_t>;

inline constexpr int kDefaultBruteForceLimit = 20;
// Subset masks are 64-bit; a cap above this is meaningless anyway.
inline constexpr int kMaxBruteForceLimit = 40;

// Degree bounds 1 <= a <= b of a fractional [a,b]-factor.
class FactorParams {
 public:
  // Throws InputError unless 1 <= a <= b.
  FactorParams(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }

  friend bool operator==(const FactorParams&, const FactorParams&) = default;

 private:
  int a_;
  int b_;
};

// The indicator function h : E(G) -> [0,1], keyed by every edge of its graph.
class FractionalAssignment {
 public:
  void set(Edge e, Rational value) { values_[e] = value; }
  Rational at(Edge e) const;
  const std::map<Edge, Rational>& values() const { return values_; }

  // F_h = {e : h(e) > 0}.
  std::vector<Edge> support() const;

 private:
  std::map<Edge, Rational> values_;
};

// T = {x in V \ S : d_{G-S}(x) <= a} together with
// delta(S,T) = b|S| + d_{G-S}(T) - a|T|.
struct DeltaValue {
  VertexSet t;
  std::int64_t delta = 0;
};

DeltaValue delta_st(const Graph& g, const FactorParams& params, const VertexSet& s);

// A subset S whose induced T makes delta(S,T) <= -1, proving that no
// fractional [a,b]-factor exists.
struct ViolationCertificate {
  VertexSet s;
  VertexSet t;
  std::int64_t delta = 0;

  friend bool operator==(const ViolationCertificate&, const ViolationCertificate&) = default;
};

struct OracleVerdict {
  std::optional<ViolationCertificate> certificate;  // empty iff feasible

  bool feasible() const { return !certificate.has_value(); }
};

// Scans every S ⊆ V. Returns the certificate with the most negative delta,
// ties broken by smaller |S| and then lexicographically smaller S. Throws
// ResourceError when the order exceeds `limit`.
OracleVerdict has_fractional_factor_bruteforce(const Graph& g, const FactorParams& params,
                                               int limit = kDefaultBruteForceLimit);

struct SolverOptions {
  int brute_force_limit = kDefaultBruteForceLimit;
  // Run the oracle on infeasible inputs within the limit to attach (S,T).
  bool attach_certificate = true;
};

struct FactorResult {
  std::optional<FractionalAssignment> assignment;    // present iff feasible
  std::optional<ViolationCertificate> certificate;   // infeasible and small enough

  bool feasible() const { return assignment.has_value(); }
};

// Feasible-flow construction on the bipartite double cover. Every returned h
// is half-integral. Polynomial in the size of g.
FactorResult find_fractional_factor(const Graph& g, const FactorParams& params,
                                    const SolverOptions& options = {});

// Decision-only variant of find_fractional_factor.
bool has_fractional_factor(const Graph& g, const FactorParams& params);

struct AssignmentCheck {
  bool valid = false;
  std::vector<Rational> sums;  // sum of h over the edges at each vertex
};

// Throws InputError when h is not keyed exactly by E(g) or a value leaves [0,1].
AssignmentCheck validate_assignment(const Graph& g, const FactorParams& params,
                                    const FractionalAssignment& h);

// One line per edge, `u v p/q` in lowest terms, edges in increasing order.
std::string format_assignment(const FractionalAssignment& h);
FractionalAssignment parse_assignment(std::string_view text);

std::string format_rational(const Rational& r);

}  // namespace fracfactor
