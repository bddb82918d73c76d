#include "fracfactor/report.hpp"

#include <iomanip>
#include <sstream>

#include "fracfactor/edge_list.hpp"

namespace fracfactor {

using nlohmann::json;

json to_json(const VertexSet& s) {
  return json(std::vector<Vertex>(s.begin(), s.end()));
}

json to_json(const ViolationCertificate& c) {
  return {{"S", to_json(c.s)}, {"T", to_json(c.t)}, {"delta", c.delta}};
}

json to_json(const FractionalAssignment& h) {
  json out = json::array();
  for (const auto& [e, value] : h.values()) {
    out.push_back({{"u", e.u}, {"v", e.v}, {"h", format_rational(value)}});
  }
  return out;
}

std::string describe(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s) {
    out << (first ? "" : ", ") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string describe(const ViolationCertificate& c) {
  return "S = " + describe(c.s) + ", T = " + describe(c.t) + ", delta = " + std::to_string(c.delta);
}

json to_json(const CriticalityReport& r) {
  json out = {{"critical", r.verdict}, {"independent_sets_checked", r.independent_sets_checked}};
  out["failing_set"] = r.failing_set ? to_json(*r.failing_set) : json(nullptr);
  out["certificate"] = r.failing_certificate ? to_json(*r.failing_certificate) : json(nullptr);
  if (r.failing_deletion) {
    out["certificate_labels"] = r.failing_deletion->new_to_old;
    if (r.failing_certificate) {
      out["certificate_original"] = {
          {"S", to_json(r.failing_deletion->to_original(r.failing_certificate->s))},
          {"T", to_json(r.failing_deletion->to_original(r.failing_certificate->t))}};
    }
  }
  return out;
}

json to_json(const HypothesisReport& r) {
  json out = {{"order_ok", r.order_ok},
              {"order_margin", r.order_margin},
              {"min_degree_ok", r.min_degree_ok},
              {"min_degree", r.min_degree},
              {"min_degree_margin", r.min_degree_margin},
              {"neighborhood_ok", r.neighborhood_ok},
              {"all_ok", r.all_ok()}};
  out["neighborhood_margin"] = r.neighborhood_margin ? json(*r.neighborhood_margin) : json(nullptr);
  out["worst_pair"] = r.worst_pair ? json({r.worst_pair->first, r.worst_pair->second}) : json(nullptr);
  out["worst_union_size"] = r.worst_union_size ? json(*r.worst_union_size) : json(nullptr);
  if (!r.worst_pair) out["note"] = "no nonadjacent pair";
  return out;
}

json to_json(const SharpnessReport& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"name", c.name}, {"holds", c.holds}, {"essential", c.essential}, {"detail", c.detail}});
  }
  json out = {{"kind", to_string(r.kind)}, {"a", r.a}, {"b", r.b}, {"t", r.t}, {"order", r.order},
              {"claims", claims}};
  out["criticality"] = r.criticality ? to_json(*r.criticality) : json(nullptr);
  return out;
}

json to_json(const SweepSummary& s) {
  json rows = json::array();
  for (const auto& row : s.rows) {
    rows.push_back({{"ensemble", row.ensemble},
                    {"kind", to_string(row.kind)},
                    {"a", row.params.a()},
                    {"b", row.params.b()},
                    {"graphs_examined", row.graphs_examined},
                    {"hypothesis_passing", row.hypothesis_passing},
                    {"critical_confirmed", row.critical_confirmed},
                    {"claim_sets_checked", row.claim_sets_checked},
                    {"counterexamples", row.counterexamples},
                    {"claim_failures", row.claim_failures}});
  }
  json counterexamples = json::array();
  for (const auto& c : s.counterexamples) {
    counterexamples.push_back({{"ensemble", c.ensemble},
                               {"a", c.params.a()},
                               {"b", c.params.b()},
                               {"graph", format_edge_list(c.graph)},
                               {"hypotheses", to_json(c.hypotheses)},
                               {"criticality", to_json(c.criticality)}});
  }
  json failures = json::array();
  for (const auto& f : s.claim_failures) {
    failures.push_back({{"ensemble", f.ensemble},
                        {"a", f.params.a()},
                        {"b", f.params.b()},
                        {"graph", format_edge_list(f.graph)},
                        {"independent_set", to_json(f.independent_set)},
                        {"message", f.message}});
  }
  return {{"ok", s.ok()},
          {"hypothesis_passing", s.total_hypothesis_passing()},
          {"rows", rows},
          {"counterexamples", counterexamples},
          {"claim_failures", failures}};
}

Report make_factor_report(const Graph& g, const FactorParams& params, const FactorResult& result,
                          bool include_witness) {
  Report report;
  report.holds = result.feasible();
  json& doc = report.document;
  doc = {{"command", "check-factor"}, {"a", params.a()}, {"b", params.b()}, {"order", g.order()},
         {"edges", g.size()}, {"feasible", result.feasible()}};
  std::ostringstream text;
  text << "fractional [" << params.a() << "," << params.b() << "]-factor: "
       << (result.feasible() ? "exists" : "none") << '\n';
  if (result.feasible()) {
    if (include_witness) {
      doc["assignment"] = to_json(*result.assignment);
      text << "indicator function h (u v h):\n" << format_assignment(*result.assignment);
    }
  } else if (result.certificate) {
    doc["certificate"] = to_json(*result.certificate);
    text << "certificate: " << describe(*result.certificate) << '\n';
  } else {
    doc["certificate"] = nullptr;
    text << "certificate: not computed (order above the brute-force limit)\n";
  }
  report.text = text.str();
  return report;
}

Report make_criticality_report(const Graph& g, const FactorParams& params,
                               const CriticalityReport& r) {
  Report report;
  report.holds = r.verdict;
  report.document = to_json(r);
  report.document["command"] = "check-critical";
  report.document["a"] = params.a();
  report.document["b"] = params.b();
  report.document["order"] = g.order();
  std::ostringstream text;
  text << "fractional ID-[" << params.a() << "," << params.b() << "]-factor-critical: "
       << (r.verdict ? "yes" : "no") << '\n'
       << "independent sets checked: " << r.independent_sets_checked << '\n';
  if (r.failing_set) {
    text << "failing independent set I: " << describe(*r.failing_set) << '\n';
    if (r.failing_certificate && r.failing_deletion) {
      text << "certificate in G - I: " << describe(*r.failing_certificate) << '\n'
           << "  (original labels: S = " << describe(r.failing_deletion->to_original(r.failing_certificate->s))
           << ", T = " << describe(r.failing_deletion->to_original(r.failing_certificate->t)) << ")\n";
    } else {
      text << "certificate: not computed (G - I above the brute-force limit)\n";
    }
  }
  report.text = text.str();
  return report;
}

Report make_hypothesis_report(const Graph& g, const FactorParams& params,
                              const HypothesisReport& r) {
  Report report;
  report.holds = r.all_ok();
  report.document = to_json(r);
  report.document["command"] = "check-hypotheses";
  report.document["a"] = params.a();
  report.document["b"] = params.b();
  report.document["order"] = g.order();
  auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
  std::ostringstream text;
  text << "order        " << mark(r.order_ok) << "  margin " << r.order_margin << '\n'
       << "min degree   " << mark(r.min_degree_ok) << "  delta(G) = " << r.min_degree << ", margin "
       << r.min_degree_margin << '\n'
       << "neighborhood " << mark(r.neighborhood_ok);
  if (r.worst_pair) {
    text << "  worst pair (" << r.worst_pair->first << ", " << r.worst_pair->second
         << ") |N(x)∪N(y)| = " << *r.worst_union_size << ", margin " << *r.neighborhood_margin << '\n';
  } else {
    text << "  no nonadjacent pair\n";
  }
  report.text = text.str();
  return report;
}

Report make_sharpness_report(const SharpnessReport& r) {
  Report report;
  report.holds = true;
  for (const auto& c : r.claims) {
    if (c.essential && !c.holds) report.holds = false;
  }
  report.document = to_json(r);
  std::ostringstream text;
  text << to_string(r.kind) << " a=" << r.a << " b=" << r.b << " t=" << r.t << " n=" << r.order << '\n';
  for (const auto& c : r.claims) {
    text << "  " << (c.holds ? "holds " : "fails ") << (c.essential ? "* " : "  ") << c.name << ": "
         << c.detail << '\n';
  }
  text << "  (* = essential: a failure aborts verification)\n";
  report.text = text.str();
  return report;
}

Report make_sweep_report(const SweepSummary& s) {
  Report report;
  report.holds = s.ok();
  report.document = to_json(s);
  std::ostringstream text;
  text << std::left << std::setw(16) << "ensemble" << std::setw(12) << "kind" << std::right << std::setw(3)
       << "a" << std::setw(3) << "b" << std::setw(10) << "graphs" << std::setw(10) << "hyp-pass"
       << std::setw(10) << "critical" << std::setw(12) << "claim-sets" << std::setw(11) << "counterex"
       << '\n';
  for (const auto& row : s.rows) {
    text << std::left << std::setw(16) << row.ensemble << std::setw(12) << to_string(row.kind) << std::right
         << std::setw(3) << row.params.a() << std::setw(3) << row.params.b() << std::setw(10)
         << row.graphs_examined << std::setw(10) << row.hypothesis_passing << std::setw(10)
         << row.critical_confirmed << std::setw(12) << row.claim_sets_checked << std::setw(11)
         << row.counterexamples << '\n';
  }
  text << "hypothesis-passing graphs: " << s.total_hypothesis_passing() << '\n'
       << "counterexamples: " << s.counterexamples.size() << '\n'
       << "claim failures: " << s.claim_failures.size() << '\n';
  for (const auto& c : s.counterexamples) {
    text << "COUNTEREXAMPLE [" << c.ensemble << "] a=" << c.params.a() << " b=" << c.params.b() << '\n'
         << format_edge_list(c.graph);
    if (c.criticality.failing_set) text << "failing I: " << describe(*c.criticality.failing_set) << '\n';
  }
  for (const auto& f : s.claim_failures) {
    text << "CLAIM FAILURE [" << f.ensemble << "] X = " << describe(f.independent_set) << ": " << f.message
         << '\n'
         << format_edge_list(f.graph);
  }
  report.text = text.str();
  return report;
}

json labels_to_json(const std::string& kind, const FactorParams& params, int t,
                    const ConstructionLabels& labels) {
  auto ranges = [](const std::map<std::string, VertexSet>& groups) {
    json out = json::object();
    for (const auto& [name, set] : groups) {
      const Vertex begin = set.empty() ? 0 : set.members().front();
      const Vertex end = set.empty() ? 0 : set.members().back() + 1;
      out[name] = {{"begin", begin}, {"end", end}};
    }
    return out;
  };
  return {{"kind", kind},       {"a", params.a()}, {"b", params.b()},
          {"t", t},             {"parts", ranges(labels.parts)},
          {"markers", ranges(labels.markers)}};
}

}  // namespace fracfactor
