#include "fracfactor/fracfactor.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "fracfactor/constructions.hpp"
#include "fracfactor/edge_list.hpp"
#include "fracfactor/errors.hpp"
#include "fracfactor/hypothesis.hpp"
#include "fracfactor/report.hpp"
#include "fracfactor/sweep.hpp"

struct ff_graph {
  fracfactor::Graph graph;
};

struct ff_labels {
  std::string kind;
  fracfactor::FactorParams params;
  int t;
  fracfactor::ConstructionLabels labels;
};

struct ff_report {
  fracfactor::Report report;
};

namespace {

thread_local std::string last_error;

// Runs `body`, translating exceptions into status codes.
template <typename Body>
ff_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return FF_OK;
  } catch (const fracfactor::InputError& e) {
    last_error = e.what();
    return FF_ERROR_INPUT;
  } catch (const fracfactor::ResourceError& e) {
    last_error = e.what();
    return FF_ERROR_RESOURCE;
  } catch (const fracfactor::PreconditionError& e) {
    last_error = e.what();
    return FF_ERROR_PRECONDITION;
  } catch (const fracfactor::InconsistencyError& e) {
    last_error = e.what();
    return FF_ERROR_INCONSISTENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FF_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FF_ERROR_INTERNAL;
  }
}

template <typename T>
T& deref(T* p, const char* what) {
  if (p == nullptr) throw fracfactor::InputError(std::string("null ") + what);
  return *p;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fracfactor::CriticalityOptions criticality_options(const ff_limits* limits) {
  fracfactor::CriticalityOptions options;
  if (limits != nullptr) {
    options.brute_force_limit = limits->brute_force_limit;
    options.criticality_limit = limits->criticality_limit;
  }
  return options;
}

fracfactor::SharpnessKind to_kind(ff_construction kind) {
  switch (kind) {
    case FF_REMARK1:
      return fracfactor::SharpnessKind::remark1;
    case FF_REMARK2:
      return fracfactor::SharpnessKind::remark2;
  }
  throw fracfactor::InputError("unknown construction kind");
}

ff_status run_sweep(fracfactor::SweepConfig config, const ff_limits* limits, ff_report** out) {
  return guarded([&] {
    deref(out, "output pointer") = nullptr;
    if (limits != nullptr) {
      config.brute_force_limit = limits->brute_force_limit;
      config.criticality_limit = limits->criticality_limit;
      fracfactor::validate_sweep_config(config);
    }
    auto report = std::make_unique<ff_report>();
    report->report = fracfactor::make_sweep_report(fracfactor::run_sweep(config));
    if (!config.output.empty()) {
      std::ofstream file(config.output, std::ios::binary);
      if (!file) throw fracfactor::InputError("cannot write sweep output '" + config.output + "'");
      file << report->report.document.dump(2) << '\n';
    }
    *out = report.release();
  });
}

}  // namespace

extern "C" {

void ff_limits_default(ff_limits* out) {
  if (out == nullptr) return;
  out->brute_force_limit = fracfactor::kDefaultBruteForceLimit;
  out->criticality_limit = fracfactor::kDefaultCriticalityLimit;
}

const char* ff_last_error(void) { return last_error.c_str(); }

const char* ff_status_name(ff_status status) {
  switch (status) {
    case FF_OK:
      return "ok";
    case FF_ERROR_INPUT:
      return "input error";
    case FF_ERROR_RESOURCE:
      return "resource limit";
    case FF_ERROR_PRECONDITION:
      return "precondition violated";
    case FF_ERROR_INCONSISTENT:
      return "inconsistency";
    case FF_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void ff_string_free(char* s) { std::free(s); }

ff_status ff_graph_parse(const char* text, size_t length, ff_graph** out) {
  return guarded([&] {
    deref(out, "output pointer") = nullptr;
    if (text == nullptr && length > 0) throw fracfactor::InputError("null text");
    auto g = std::make_unique<ff_graph>();
    g->graph = fracfactor::parse_edge_list(std::string_view(text == nullptr ? "" : text, length));
    *out = g.release();
  });
}

ff_status ff_graph_load(const char* path, ff_graph** out) {
  return guarded([&] {
    deref(out, "output pointer") = nullptr;
    auto g = std::make_unique<ff_graph>();
    g->graph = fracfactor::read_edge_list(&deref(path, "path"));
    *out = g.release();
  });
}

ff_status ff_graph_from_edges(int order, const int* endpoints, size_t edge_count, ff_graph** out) {
  return guarded([&] {
    deref(out, "output pointer") = nullptr;
    if (endpoints == nullptr && edge_count > 0) throw fracfactor::InputError("null edge array");
    std::vector<fracfactor::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    auto g = std::make_unique<ff_graph>();
    g->graph = fracfactor::Graph::from_edges(order, edges);
    *out = g.release();
  });
}

void ff_graph_destroy(ff_graph* graph) { delete graph; }

ff_status ff_graph_order(const ff_graph* graph, int* out) {
  return guarded([&] { deref(out, "output pointer") = deref(graph, "graph").graph.order(); });
}

ff_status ff_graph_edge_count(const ff_graph* graph, size_t* out) {
  return guarded([&] { deref(out, "output pointer") = deref(graph, "graph").graph.size(); });
}

ff_status ff_graph_degree(const ff_graph* graph, int vertex, int* out) {
  return guarded([&] { deref(out, "output pointer") = deref(graph, "graph").graph.degree(vertex); });
}

ff_status ff_graph_min_degree(const ff_graph* graph, int* out) {
  return guarded(
      [&] { deref(out, "output pointer") = fracfactor::min_degree(deref(graph, "graph").graph); });
}

ff_status ff_graph_format(const ff_graph* graph, char** out) {
  return guarded([&] {
    deref(out, "output pointer") = duplicate(fracfactor::format_edge_list(deref(graph, "graph").graph));
  });
}

ff_status ff_graph_save(const ff_graph* graph, const char* path) {
  return guarded([&] {
    const auto& g = deref(graph, "graph").graph;
    std::ofstream file(&deref(path, "path"), std::ios::binary);
    if (!file) throw fracfactor::InputError(std::string("cannot write '") + path + "'");
    fracfactor::write_edge_list(file, g);
  });
}

ff_status ff_generate_construction(ff_construction kind, int a, int b, int t, ff_graph** graph,
                                   ff_labels** labels) {
  return guarded([&] {
    deref(graph, "output pointer") = nullptr;
    if (labels != nullptr) *labels = nullptr;
    const fracfactor::FactorParams params(a, b);
    const auto sharp = to_kind(kind);
    fracfactor::Construction c = sharp == fracfactor::SharpnessKind::remark1
                                     ? fracfactor::remark1_graph(params, t)
                                     : fracfactor::remark2_graph(params, t);
    auto g = std::make_unique<ff_graph>();
    g->graph = std::move(c.graph);
    if (labels != nullptr) {
      *labels = new ff_labels{fracfactor::to_string(sharp), params, t, std::move(c.labels)};
    }
    *graph = g.release();
  });
}

ff_status ff_generate_random(int order, int64_t p_numerator, int64_t p_denominator, uint64_t seed,
                             ff_graph** out) {
  return guarded([&] {
    deref(out, "output pointer") = nullptr;
    if (p_denominator <= 0) throw fracfactor::InputError("probability denominator must be positive");
    auto g = std::make_unique<ff_graph>();
    g->graph = fracfactor::random_graph(order, fracfactor::Rational(p_numerator, p_denominator), seed);
    *out = g.release();
  });
}

ff_status ff_labels_format(const ff_labels* labels, char** out) {
  return guarded([&] {
    const auto& l = deref(labels, "labels");
    deref(out, "output pointer") =
        duplicate(fracfactor::labels_to_json(l.kind, l.params, l.t, l.labels).dump(2) + "\n");
  });
}

ff_status ff_labels_part(const ff_labels* labels, const char* name, int* begin, int* end) {
  return guarded([&] {
    const auto& l = deref(labels, "labels");
    const std::string key = &deref(name, "name");
    auto it = l.labels.parts.find(key);
    if (it == l.labels.parts.end()) {
      it = l.labels.markers.find(key);
      if (it == l.labels.markers.end()) throw fracfactor::InputError("no part named '" + key + "'");
    }
    const auto& set = it->second;
    deref(begin, "begin") = set.empty() ? 0 : set.members().front();
    deref(end, "end") = set.empty() ? 0 : set.members().back() + 1;
  });
}

void ff_labels_destroy(ff_labels* labels) { delete labels; }

ff_status ff_delta_st(const ff_graph* graph, int a, int b, const int* s, size_t s_size,
                      int64_t* delta, size_t* t_size) {
  return guarded([&] {
    const auto& g = deref(graph, "graph").graph;
    if (s == nullptr && s_size > 0) throw fracfactor::InputError("null vertex array");
    const fracfactor::VertexSet set(std::vector<int>(s, s + s_size));
    const auto value = fracfactor::delta_st(g, fracfactor::FactorParams(a, b), set);
    deref(delta, "delta") = value.delta;
    if (t_size != nullptr) *t_size = value.t.size();
  });
}

ff_status ff_bruteforce_factor(const ff_graph* graph, int a, int b, const ff_limits* limits,
                               int* feasible, int64_t* delta) {
  return guarded([&] {
    const auto& g = deref(graph, "graph").graph;
    const int limit = limits != nullptr ? limits->brute_force_limit : fracfactor::kDefaultBruteForceLimit;
    const auto verdict = fracfactor::has_fractional_factor_bruteforce(g, fracfactor::FactorParams(a, b), limit);
    deref(feasible, "feasible") = verdict.feasible() ? 1 : 0;
    if (delta != nullptr) *delta = verdict.feasible() ? 0 : verdict.certificate->delta;
  });
}

ff_status ff_validate_assignment(const ff_graph* graph, int a, int b, const char* text, size_t length,
                                 int* valid) {
  return guarded([&] {
    const auto& g = deref(graph, "graph").graph;
    if (text == nullptr && length > 0) throw fracfactor::InputError("null text");
    const auto h = fracfactor::parse_assignment(std::string_view(text == nullptr ? "" : text, length));
    deref(valid, "valid") =
        fracfactor::validate_assignment(g, fracfactor::FactorParams(a, b), h).valid ? 1 : 0;
  });
}

ff_status ff_corollary_min_order(int k, int64_t* out) {
  return guarded([&] { deref(out, "output pointer") = fracfactor::corollary_thresholds(k).min_order; });
}

ff_status ff_check_factor(const ff_graph* graph, int a, int b, const ff_limits* limits,
                          int include_witness, ff_report** out) {
  return guarded([&] {
    const auto& g = deref(graph, "graph").graph;
    deref(out, "output pointer") = nullptr;
    const fracfactor::FactorParams params(a, b);
    fracfactor::SolverOptions options;
    if (limits != nullptr) options.brute_force_limit = limits->brute_force_limit;
    auto report = std::make_unique<ff_report>();
    report->report = fracfactor::make_factor_report(
        g, params, fracfactor::find_fractional_factor(g, params, options), include_witness != 0);
    *out = report.release();
  });
}

ff_status ff_check_critical(const ff_graph* graph, int a, int b, const ff_limits* limits,
                            ff_report** out) {
  return guarded([&] {
    const auto& g = deref(graph, "graph").graph;
    deref(out, "output pointer") = nullptr;
    const fracfactor::FactorParams params(a, b);
    auto report = std::make_unique<ff_report>();
    report->report = fracfactor::make_criticality_report(
        g, params, fracfactor::is_fractional_id_factor_critical(g, params, criticality_options(limits)));
    *out = report.release();
  });
}

ff_status ff_check_hypotheses(const ff_graph* graph, int a, int b, ff_report** out) {
  return guarded([&] {
    const auto& g = deref(graph, "graph").graph;
    deref(out, "output pointer") = nullptr;
    const fracfactor::FactorParams params(a, b);
    auto report = std::make_unique<ff_report>();
    report->report =
        fracfactor::make_hypothesis_report(g, params, fracfactor::check_theorem1_hypotheses(g, params));
    *out = report.release();
  });
}

ff_status ff_verify_sharpness(ff_construction kind, int a, int b, int t, const ff_limits* limits,
                              ff_report** out) {
  return guarded([&] {
    deref(out, "output pointer") = nullptr;
    auto report = std::make_unique<ff_report>();
    report->report = fracfactor::make_sharpness_report(fracfactor::verify_sharpness(
        to_kind(kind), fracfactor::FactorParams(a, b), t, criticality_options(limits)));
    *out = report.release();
  });
}

ff_status ff_verify_theorem(const char* config_text, size_t length, const ff_limits* limits,
                            ff_report** out) {
  if (out != nullptr) *out = nullptr;
  fracfactor::SweepConfig config;
  const ff_status parsed = guarded([&] {
    if (config_text == nullptr && length > 0) throw fracfactor::InputError("null config text");
    config = fracfactor::parse_sweep_config(
        std::string_view(config_text == nullptr ? "" : config_text, length));
  });
  if (parsed != FF_OK) return parsed;
  return run_sweep(std::move(config), limits, out);
}

ff_status ff_verify_theorem_file(const char* path, const ff_limits* limits, ff_report** out) {
  if (out != nullptr) *out = nullptr;
  fracfactor::SweepConfig config;
  const ff_status parsed =
      guarded([&] { config = fracfactor::read_sweep_config(&deref(path, "path")); });
  if (parsed != FF_OK) return parsed;
  return run_sweep(std::move(config), limits, out);
}

ff_status ff_report_holds(const ff_report* report, int* out) {
  return guarded([&] { deref(out, "output pointer") = deref(report, "report").report.holds ? 1 : 0; });
}

ff_status ff_report_render(const ff_report* report, ff_format format, char** out) {
  return guarded([&] {
    const auto& r = deref(report, "report").report;
    deref(out, "output pointer") =
        duplicate(format == FF_FORMAT_JSON ? r.document.dump(2) + "\n" : r.text);
  });
}

void ff_report_destroy(ff_report* report) { delete report; }

}  // extern "C"
