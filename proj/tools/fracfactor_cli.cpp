// Command-line front end over the fracfactor C API.
//
// Exit codes: 0 the property holds, 1 it fails, 2 usage or input error,
// 3 resource cap exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fracfactor/fracfactor.h"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t seed = 1;
  ff_limits limits{};
};

int exit_code(ff_status status) {
  switch (status) {
    case FF_OK:
      return kExitHolds;
    case FF_ERROR_INPUT:
    case FF_ERROR_PRECONDITION:
      return kExitUsage;
    case FF_ERROR_RESOURCE:
      return kExitResource;
    case FF_ERROR_INCONSISTENT:
    case FF_ERROR_INTERNAL:
      break;
  }
  return kExitFails;
}

int report_error(ff_status status) {
  std::cerr << "fracfactor: " << ff_status_name(status) << ": " << ff_last_error() << '\n';
  return exit_code(status);
}

// Prints the report and maps its verdict to 0 / 1.
int emit(ff_report* report, const GlobalOptions& global) {
  char* text = nullptr;
  const ff_format format = global.format == "json" ? FF_FORMAT_JSON : FF_FORMAT_TEXT;
  ff_status status = ff_report_render(report, format, &text);
  int holds = 0;
  if (status == FF_OK) status = ff_report_holds(report, &holds);
  ff_report_destroy(report);
  if (status != FF_OK) {
    ff_string_free(text);
    return report_error(status);
  }
  std::cout << text;
  ff_string_free(text);
  return holds ? kExitHolds : kExitFails;
}

class GraphHandle {
 public:
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  ~GraphHandle() { ff_graph_destroy(graph_); }

  ff_graph** out() { return &graph_; }
  const ff_graph* get() const { return graph_; }

 private:
  ff_graph* graph_ = nullptr;
};

bool write_file(const std::string& path, const char* contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << contents;
  return static_cast<bool>(out);
}

struct GraphQuery {
  std::string path;
  int a = 1;
  int b = 1;
  bool witness = false;
};

void add_graph_query(CLI::App* cmd, GraphQuery& query) {
  cmd->add_option("graph", query.path, "edge-list file")->required();
  cmd->add_option("-a,--lower", query.a, "lower degree bound a")->required();
  cmd->add_option("-b,--upper", query.b, "upper degree bound b")->required();
}

int run_graph_command(const std::string& name, const GraphQuery& query, const GlobalOptions& global) {
  GraphHandle graph;
  if (ff_status s = ff_graph_load(query.path.c_str(), graph.out()); s != FF_OK) return report_error(s);
  ff_report* report = nullptr;
  ff_status status = FF_OK;
  if (name == "check-factor") {
    status = ff_check_factor(graph.get(), query.a, query.b, &global.limits, query.witness ? 1 : 0, &report);
  } else if (name == "check-critical") {
    status = ff_check_critical(graph.get(), query.a, query.b, &global.limits, &report);
  } else {
    status = ff_check_hypotheses(graph.get(), query.a, query.b, &report);
  }
  if (status != FF_OK) return report_error(status);
  return emit(report, global);
}

struct GenRequest {
  std::string kind;
  int a = 1;
  int b = 1;
  int t = 1;
  int order = 0;
  std::string p = "1/2";
  std::string out;
  bool verify = false;
};

bool parse_probability(const std::string& text, std::int64_t& num, std::int64_t& den) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) return false;
    den = 1;
    if (slash != std::string::npos) {
      const std::string rest = text.substr(slash + 1);
      den = std::stoll(rest, &used);
      if (used != rest.size()) return false;
    }
    return den > 0;
  } catch (const std::exception&) {
    return false;
  }
}

int run_gen(const GenRequest& req, const GlobalOptions& global) {
  GraphHandle graph;
  ff_labels* labels = nullptr;
  ff_status status = FF_OK;
  if (req.kind == "random") {
    std::int64_t num = 0;
    std::int64_t den = 1;
    if (!parse_probability(req.p, num, den)) {
      std::cerr << "fracfactor: --p must be a rational p/q\n";
      return kExitUsage;
    }
    if (req.verify) {
      std::cerr << "fracfactor: --verify applies to remark1 and remark2 only\n";
      return kExitUsage;
    }
    status = ff_generate_random(req.order, num, den, global.seed, graph.out());
  } else {
    const ff_construction kind = req.kind == "remark1" ? FF_REMARK1 : FF_REMARK2;
    status = ff_generate_construction(kind, req.a, req.b, req.t, graph.out(), &labels);
  }
  if (status != FF_OK) return report_error(status);

  char* edge_list = nullptr;
  char* sidecar = nullptr;
  status = ff_graph_format(graph.get(), &edge_list);
  if (status == FF_OK && labels != nullptr) status = ff_labels_format(labels, &sidecar);
  ff_labels_destroy(labels);
  if (status != FF_OK) {
    ff_string_free(edge_list);
    return report_error(status);
  }
  int code = kExitHolds;
  if (req.out.empty()) {
    std::cout << edge_list;
  } else if (!write_file(req.out, edge_list) ||
             (sidecar != nullptr && !write_file(req.out + ".labels.json", sidecar))) {
    std::cerr << "fracfactor: cannot write '" << req.out << "'\n";
    code = kExitUsage;
  }
  ff_string_free(edge_list);
  ff_string_free(sidecar);
  if (code != kExitHolds || !req.verify) return code;

  ff_report* report = nullptr;
  status = ff_verify_sharpness(req.kind == "remark1" ? FF_REMARK1 : FF_REMARK2, req.a, req.b, req.t,
                               &global.limits, &report);
  if (status != FF_OK) return report_error(status);
  // Without --out the edge list owns stdout and the report goes to stderr.
  if (req.out.empty()) {
    char* text = nullptr;
    ff_report_render(report, FF_FORMAT_TEXT, &text);
    std::cerr << text;
    ff_string_free(text);
    int holds = 0;
    ff_report_holds(report, &holds);
    ff_report_destroy(report);
    return holds ? kExitHolds : kExitFails;
  }
  return emit(report, global);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional [a,b]-factors and ID-factor-criticality"};
  app.require_subcommand(1);

  GlobalOptions global;
  ff_limits_default(&global.limits);
  app.add_option("--format", global.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", global.seed, "seed for random generation")->capture_default_str();
  app.add_option("--brute-limit", global.limits.brute_force_limit, "largest order for the brute-force oracle")
      ->capture_default_str();
  app.add_option("--crit-limit", global.limits.criticality_limit, "largest order for criticality checks")
      ->capture_default_str();

  GraphQuery factor_query;
  auto* check_factor = app.add_subcommand("check-factor", "decide whether a fractional [a,b]-factor exists");
  add_graph_query(check_factor, factor_query);
  check_factor->add_flag("--witness", factor_query.witness, "print the indicator function");

  GraphQuery critical_query;
  auto* check_critical =
      app.add_subcommand("check-critical", "decide fractional ID-[a,b]-factor-criticality");
  add_graph_query(check_critical, critical_query);

  GraphQuery hypothesis_query;
  auto* check_hypotheses =
      app.add_subcommand("check-hypotheses", "evaluate the order, degree and neighborhood conditions");
  add_graph_query(check_hypotheses, hypothesis_query);

  std::string config_path;
  bool limits_from_flags = false;
  auto* verify = app.add_subcommand("verify-theorem", "run a verification sweep from a config file");
  verify->add_option("config", config_path, "sweep configuration file")->required();
  verify->add_flag("--override-limits", limits_from_flags,
                   "use --brute-limit/--crit-limit instead of the config's caps");

  GenRequest gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a sharpness construction or a random graph");
  gen_cmd->add_option("kind", gen.kind, "remark1, remark2 or random")
      ->required()
      ->check(CLI::IsMember({"remark1", "remark2", "random"}));
  gen_cmd->add_option("-a,--lower", gen.a, "lower degree bound a")->capture_default_str();
  gen_cmd->add_option("-b,--upper", gen.b, "upper degree bound b")->capture_default_str();
  gen_cmd->add_option("-t", gen.t, "construction size parameter")->capture_default_str();
  gen_cmd->add_option("-n,--order", gen.order, "order of a random graph")->capture_default_str();
  gen_cmd->add_option("-p,--probability", gen.p, "edge probability p/q")->capture_default_str();
  gen_cmd->add_option("-o,--out", gen.out, "output path (sidecar written to <out>.labels.json)");
  gen_cmd->add_flag("--verify", gen.verify, "check the construction's claimed properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (check_factor->parsed()) return run_graph_command("check-factor", factor_query, global);
  if (check_critical->parsed()) return run_graph_command("check-critical", critical_query, global);
  if (check_hypotheses->parsed()) return run_graph_command("check-hypotheses", hypothesis_query, global);
  if (verify->parsed()) {
    ff_report* report = nullptr;
    const ff_status status =
        ff_verify_theorem_file(config_path.c_str(), limits_from_flags ? &global.limits : nullptr, &report);
    if (status != FF_OK) return report_error(status);
    return emit(report, global);
  }
  return run_gen(gen, global);
}
