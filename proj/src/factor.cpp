#include "fracfactor/factor.hpp"

#include <bit>
#include <charconv>
#include <sstream>

#include "fracfactor/errors.hpp"
#include "max_flow.hpp"

namespace fracfactor {

FactorParams::FactorParams(int a, int b) : a_(a), b_(b) {
  if (a < 1 || a > b) {
    throw InputError("factor parameters must satisfy 1 <= a <= b (got a=" + std::to_string(a) +
                     ", b=" + std::to_string(b) + ")");
  }
}

Rational FractionalAssignment::at(Edge e) const {
  auto it = values_.find(e);
  if (it == values_.end()) {
    throw InputError("assignment has no value for edge " + std::to_string(e.u) + " " +
                     std::to_string(e.v));
  }
  return it->second;
}

std::vector<Edge> FractionalAssignment::support() const {
  std::vector<Edge> out;
  for (const auto& [e, value] : values_) {
    if (value > 0) out.push_back(e);
  }
  return out;
}

DeltaValue delta_st(const Graph& g, const FactorParams& params, const VertexSet& s) {
  g.check_set(s);
  DeltaValue out;
  std::vector<Vertex> t;
  std::int64_t degree_sum = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (s.contains(x)) continue;
    int d = 0;
    for (Vertex y : g.neighbors(x)) {
      if (!s.contains(y)) ++d;
    }
    if (d <= params.a()) {
      t.push_back(x);
      degree_sum += d;
    }
  }
  out.delta = static_cast<std::int64_t>(params.b()) * static_cast<std::int64_t>(s.size()) +
              degree_sum - static_cast<std::int64_t>(params.a()) * static_cast<std::int64_t>(t.size());
  out.t = VertexSet(std::move(t));
  return out;
}

namespace {

// Lexicographic comparison of the sorted member lists encoded by two masks.
bool lex_less(std::uint64_t x, std::uint64_t y) {
  while (x != 0 && y != 0) {
    int lx = std::countr_zero(x);
    int ly = std::countr_zero(y);
    if (lx != ly) return lx < ly;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

}  // namespace

OracleVerdict has_fractional_factor_bruteforce(const Graph& g, const FactorParams& params,
                                               int limit) {
  const int n = g.order();
  if (limit > kMaxBruteForceLimit) limit = kMaxBruteForceLimit;
  if (n > limit) {
    throw ResourceError("brute-force oracle limited to " + std::to_string(limit) +
                        " vertices (graph has " + std::to_string(n) +
                        "); use the flow solver instead");
  }
  std::vector<std::uint64_t> adjacency(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adjacency[e.u] |= std::uint64_t{1} << e.v;
    adjacency[e.v] |= std::uint64_t{1} << e.u;
  }
  const std::int64_t a = params.a();
  const std::int64_t b = params.b();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  bool found = false;
  std::int64_t best_delta = 0;
  std::uint64_t best_s = 0;
  std::uint64_t best_t = 0;
  for (std::uint64_t s = 0;; ++s) {
    const std::uint64_t rest = all & ~s;
    std::int64_t delta = b * std::popcount(s);
    std::uint64_t t = 0;
    for (std::uint64_t r = rest; r != 0; r &= r - 1) {
      const int x = std::countr_zero(r);
      const int d = std::popcount(adjacency[x] & rest);
      if (d <= a) {
        t |= std::uint64_t{1} << x;
        delta += d - a;
      }
    }
    if (delta < 0) {
      bool better = !found || delta < best_delta;
      if (found && delta == best_delta) {
        const int ps = std::popcount(s);
        const int pb = std::popcount(best_s);
        better = ps < pb || (ps == pb && lex_less(s, best_s));
      }
      if (better) {
        found = true;
        best_delta = delta;
        best_s = s;
        best_t = t;
      }
    }
    if (s == all) break;
  }
  OracleVerdict verdict;
  if (found) {
    verdict.certificate =
        ViolationCertificate{VertexSet::from_mask(best_s), VertexSet::from_mask(best_t), best_delta};
  }
  return verdict;
}

namespace {

// Feasible integral flow on the double cover with source arcs s -> v+ and
// sink arcs v- -> t bounded to [a,b], and unit arcs u+ -> v-, v+ -> u- per
// edge uv. Lower bounds are removed by the usual circulation transformation.
// Returns the flow on each cover arc (two per edge, in g.edges() order), or
// nothing when infeasible.
std::optional<std::vector<std::int64_t>> double_cover_flow(const Graph& g,
                                                           const FactorParams& params) {
  const int n = g.order();
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  const int super_source = 2 * n + 2;
  const int super_sink = 2 * n + 3;
  const std::int64_t a = params.a();
  const std::int64_t b = params.b();

  detail::MaxFlow network(2 * n + 4);
  const std::vector<Edge> edges = g.edges();
  std::vector<int> cover_arcs;
  cover_arcs.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    cover_arcs.push_back(network.add_arc(e.u, n + e.v, 1));
    cover_arcs.push_back(network.add_arc(e.v, n + e.u, 1));
  }
  // Each bounded arc carries a mandatory a units: the head gains a supply of
  // a, the tail a demand of a. Net excess is a*n at every cover node and
  // -a*n / +a*n at the source / sink.
  for (Vertex v = 0; v < n; ++v) {
    network.add_arc(source, v, b - a);
    network.add_arc(n + v, sink, b - a);
    network.add_arc(super_source, v, a);
    network.add_arc(n + v, super_sink, a);
  }
  network.add_arc(super_source, sink, a * n);
  network.add_arc(source, super_sink, a * n);
  network.add_arc(sink, source, b * n);

  const std::int64_t required = 2 * a * n;
  if (network.solve(super_source, super_sink) != required) return std::nullopt;

  std::vector<std::int64_t> flows;
  flows.reserve(cover_arcs.size());
  for (int id : cover_arcs) flows.push_back(network.flow(id));
  return flows;
}

}  // namespace

bool has_fractional_factor(const Graph& g, const FactorParams& params) {
  return double_cover_flow(g, params).has_value();
}

FactorResult find_fractional_factor(const Graph& g, const FactorParams& params,
                                    const SolverOptions& options) {
  FactorResult result;
  auto flows = double_cover_flow(g, params);
  if (flows) {
    FractionalAssignment h;
    const std::vector<Edge> edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      h.set(edges[i], Rational((*flows)[2 * i] + (*flows)[2 * i + 1], 2));
    }
    result.assignment = std::move(h);
    return result;
  }
  if (options.attach_certificate && g.order() <= options.brute_force_limit &&
      g.order() <= kMaxBruteForceLimit) {
    auto verdict = has_fractional_factor_bruteforce(g, params, options.brute_force_limit);
    if (verdict.feasible()) {
      throw InconsistencyError("flow solver reports infeasible but no violating subset exists");
    }
    result.certificate = std::move(verdict.certificate);
  }
  return result;
}

AssignmentCheck validate_assignment(const Graph& g, const FactorParams& params,
                                    const FractionalAssignment& h) {
  AssignmentCheck check;
  check.sums.assign(static_cast<std::size_t>(g.order()), Rational(0));
  const std::vector<Edge> edges = g.edges();
  if (h.values().size() != edges.size()) {
    for (const auto& [e, value] : h.values()) {
      if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
        throw InputError("assignment keys non-edge " + std::to_string(e.u) + " " +
                         std::to_string(e.v));
      }
    }
  }
  for (const Edge& e : edges) {
    const Rational value = h.at(e);
    if (value < 0 || value > 1) {
      throw InputError("assignment value " + format_rational(value) + " on edge " +
                       std::to_string(e.u) + " " + std::to_string(e.v) + " outside [0,1]");
    }
    check.sums[e.u] += value;
    check.sums[e.v] += value;
  }
  check.valid = true;
  for (const Rational& sum : check.sums) {
    if (sum < params.a() || sum > params.b()) check.valid = false;
  }
  return check;
}

std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_assignment(const FractionalAssignment& h) {
  std::ostringstream out;
  for (const auto& [e, value] : h.values()) {
    out << e.u << ' ' << e.v << ' ' << format_rational(value) << '\n';
  }
  return out.str();
}

namespace {

std::int64_t parse_int(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line_no) + ": bad integer '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

FractionalAssignment parse_assignment(std::string_view text) {
  FractionalAssignment h;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string u;
    std::string v;
    std::string value;
    if (!(fields >> u)) continue;
    if (u.front() == '#') continue;
    std::string extra;
    if (!(fields >> v >> value) || (fields >> extra)) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v p/q'");
    }
    const auto slash = value.find('/');
    std::int64_t num = parse_int(std::string_view(value).substr(0, slash), line_no);
    std::int64_t den = slash == std::string::npos
                           ? 1
                           : parse_int(std::string_view(value).substr(slash + 1), line_no);
    if (den <= 0) throw InputError("line " + std::to_string(line_no) + ": nonpositive denominator");
    Edge e(static_cast<Vertex>(parse_int(u, line_no)), static_cast<Vertex>(parse_int(v, line_no)));
    if (e.u == e.v) throw InputError("line " + std::to_string(line_no) + ": loop");
    if (h.values().contains(e)) {
      throw InputError("line " + std::to_string(line_no) + ": edge listed twice");
    }
    h.set(e, Rational(num, den));
  }
  return h;
}

}  // namespace fracfactor
