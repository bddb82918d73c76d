#include "fracfactor/constructions.hpp"

#include <random>
#include <sstream>

#include "fracfactor/errors.hpp"
#include "fracfactor/hypothesis.hpp"

namespace fracfactor {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw InputError("leaf count must be nonnegative");
  return join(Graph(1), Graph(leaves));
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  Graph g;
  for (int size : part_sizes) g = join(g, Graph(size));
  return g;
}

Construction remark1_graph(const FactorParams& params, int t) {
  if (t < 1) throw InputError("construction parameter t must be positive");
  const int at = params.a() * t;
  const int bt = params.b() * t;
  const int sizes[] = {bt, at, bt + 1};
  Construction c;
  c.graph = complete_multipartite(sizes);
  c.labels.parts["btK1"] = VertexSet::range(0, bt);
  c.labels.parts["atK1"] = VertexSet::range(bt, bt + at);
  c.labels.parts["bt1K1"] = VertexSet::range(bt + at, 2 * bt + at + 1);
  return c;
}

Construction remark2_graph(const FactorParams& params, int t) {
  if (t < 1) throw InputError("construction parameter t must be positive");
  const int a = params.a();
  const int at = a * t;
  const int bt = params.b() * t;
  if (bt % 2 != 0) throw InputError("remark2 construction needs bt even (bt = " + std::to_string(bt) + ")");
  if (at < 2) throw InputError("remark2 construction needs at >= 2 so that (at-1)K1 is nonempty");

  Graph matching;
  for (int i = 0; i < bt / 2; ++i) matching = disjoint_union(matching, complete_graph(2));
  Graph core = join(join(Graph(bt), Graph(at - 1)), matching);

  const Vertex u = core.order();
  std::vector<Edge> edges = core.edges();
  for (Vertex v = 0; v < bt; ++v) edges.emplace_back(v, u);
  for (Vertex v = bt; v < bt + a - 1; ++v) edges.emplace_back(v, u);

  Construction c;
  c.graph = Graph::from_edges(core.order() + 1, edges);
  c.labels.parts["btK1"] = VertexSet::range(0, bt);
  c.labels.parts["at1K1"] = VertexSet::range(bt, bt + at - 1);
  c.labels.parts["K2s"] = VertexSet::range(bt + at - 1, 2 * bt + at - 1);
  c.labels.parts["u"] = VertexSet{u};
  c.labels.markers["x_i"] = VertexSet::range(bt, bt + a - 1);
  return c;
}

Graph random_graph(int n, const Rational& p, std::uint64_t seed) {
  if (n < 0) throw InputError("graph order must be nonnegative");
  if (p < 0 || p > 1) throw InputError("edge probability must lie in [0,1]");
  std::mt19937_64 engine(seed);
  // An edge is kept when a uniform 64-bit draw falls below p * 2^64.
  const bool always = p == Rational(1);
  const auto threshold = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(p.numerator()) << 64) /
      static_cast<unsigned __int128>(p.denominator()));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t draw = engine();
      if (always || draw < threshold) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

const char* to_string(SharpnessKind kind) {
  return kind == SharpnessKind::remark1 ? "remark1" : "remark2";
}

const SharpnessClaim* SharpnessReport::find(const std::string& name) const {
  for (const auto& claim : claims) {
    if (claim.name == name) return &claim;
  }
  return nullptr;
}

namespace {

class ClaimLog {
 public:
  explicit ClaimLog(SharpnessReport& report) : report_(report) {}

  void add(std::string name, bool holds, bool essential, std::string detail) {
    report_.claims.push_back({std::move(name), holds, essential, std::move(detail)});
  }

  void enforce() const {
    for (const auto& claim : report_.claims) {
      if (claim.essential && !claim.holds) {
        throw InconsistencyError(std::string(to_string(report_.kind)) + " claim '" + claim.name +
                                 "' failed: " + claim.detail);
      }
    }
  }

 private:
  SharpnessReport& report_;
};

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

// Shared tail of both remarks: G - btK1 has no factor and criticality fails.
void check_designated_failure(const Construction& c, const FactorParams& params,
                              const CriticalityOptions& options, SharpnessReport& report,
                              ClaimLog& log) {
  const VertexSet& x = c.labels.part("btK1");
  const bool independent = is_independent(c.graph, x);
  const bool infeasible = !has_fractional_factor(delete_vertices(c.graph, x).graph, params);
  log.add("designated_set_fails", independent && infeasible, true,
          describe("btK1 independent=", independent, ", G - btK1 infeasible=", infeasible));
  if (c.graph.order() > options.criticality_limit) return;
  report.criticality = is_fractional_id_factor_critical(c.graph, params, options);
  log.add("not_critical", !report.criticality->verdict, true,
          describe("checked ", report.criticality->independent_sets_checked, " independent sets"));
  const bool first_is_designated =
      report.criticality->failing_set && *report.criticality->failing_set == x;
  log.add("first_failing_set_is_btK1", first_is_designated, false,
          "first failing independent set in enumeration order");
}

}  // namespace

SharpnessReport verify_sharpness(SharpnessKind kind, const FactorParams& params, int t,
                                 const CriticalityOptions& options) {
  const std::int64_t a = params.a();
  const std::int64_t b = params.b();
  const std::int64_t w = a + 2 * b;
  SharpnessReport report;
  report.kind = kind;
  report.a = params.a();
  report.b = params.b();
  report.t = t;
  ClaimLog log(report);

  if (kind == SharpnessKind::remark1) {
    const Construction c = remark1_graph(params, t);
    const std::int64_t n = c.graph.order();
    report.order = c.graph.order();
    log.add("order", n == w * t + 1, true, describe("n=", n, ", (a+2b)t+1=", w * t + 1));

    const HypothesisReport hyp = check_theorem1_hypotheses(c.graph, params);
    log.add("order_condition", hyp.order_ok, false, describe("margin ", hyp.order_margin));
    log.add("min_degree_condition", hyp.min_degree_ok, false,
            describe("delta(G)=", hyp.min_degree, ", margin ", hyp.min_degree_margin));
    log.add("neighborhood_condition_fails", !hyp.neighborhood_ok, true,
            describe("margin ", hyp.neighborhood_margin.value_or(0)));

    const int worst = hyp.worst_union_size.value_or(-1);
    log.add("worst_union_is_(a+b)t", worst == (a + b) * t, true,
            describe("|N(x)∪N(y)|=", worst, ", (a+b)t=", (a + b) * t));
    log.add("within_one_unit_of_bound", w * (worst + 1) > (a + b) * n, true,
            describe("(a+2b)(|N∪N|+1)=", w * (worst + 1), " vs (a+b)n=", (a + b) * n));

    bool pairs_exact = true;
    const VertexSet& last = c.labels.part("bt1K1");
    for (Vertex x : last) {
      for (Vertex y : last) {
        if (x < y && (c.graph.adjacent(x, y) ||
                      neighborhood_union(c.graph, x, y).size() != static_cast<std::size_t>((a + b) * t))) {
          pairs_exact = false;
        }
      }
    }
    log.add("bt1K1_pairs_exact", pairs_exact, true,
            "every pair in bt1K1 is nonadjacent with |N(x)∪N(y)| = (a+b)t");

    const Deletion h = delete_vertices(c.graph, c.labels.part("btK1"));
    VertexSet s;
    {
      std::vector<Vertex> mapped;
      for (Vertex v : c.labels.part("atK1")) mapped.push_back(h.old_to_new[v]);
      s = VertexSet(std::move(mapped));
    }
    const DeltaValue dv = delta_st(h.graph, params, s);
    const bool t_is_last = h.to_original(dv.t) == last;
    log.add("delta_equals_minus_a", dv.delta == -a && t_is_last, true,
            describe("delta_H(S,T)=", dv.delta, ", T = bt1K1: ", t_is_last));

    check_designated_failure(c, params, options, report, log);
  } else {
    const Construction c = remark2_graph(params, t);
    const std::int64_t n = c.graph.order();
    report.order = c.graph.order();
    log.add("order", n == w * t, true, describe("n=", n, ", (a+2b)t=", w * t));

    const HypothesisReport hyp = check_theorem1_hypotheses(c.graph, params);
    log.add("order_condition", hyp.order_ok, false, describe("margin ", hyp.order_margin));
    log.add("neighborhood_condition", hyp.neighborhood_ok, false,
            describe("margin ", hyp.neighborhood_margin.value_or(0)));
    log.add("min_degree_is_bt+a-1", hyp.min_degree == b * t + a - 1, true,
            describe("delta(G)=", hyp.min_degree, ", bt+a-1=", b * t + a - 1));
    log.add("min_degree_one_below_bound", hyp.min_degree_margin == -w, true,
            describe("(a+2b)delta(G) - (bn + a(a+2b)) = ", hyp.min_degree_margin));

    const Deletion h = delete_vertices(c.graph, c.labels.part("btK1"));
    const Vertex u = h.old_to_new[c.labels.part("u").members().front()];
    const int du = h.graph.degree(u);
    const int dh = min_degree(h.graph);
    log.add("residual_degree_of_u", du == a - 1 && dh == a - 1, true,
            describe("d_H(u)=", du, ", delta(H)=", dh, ", a-1=", a - 1));

    check_designated_failure(c, params, options, report, log);
  }
  log.enforce();
  return report;
}

}  // namespace fracfactor
