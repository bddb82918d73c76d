#include "fracfactor/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/algorithm/string/trim.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "fracfactor/constructions.hpp"
#include "fracfactor/errors.hpp"

namespace fracfactor {
namespace {

namespace pt = boost::property_tree;

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    boost::algorithm::trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::int64_t to_integer(const std::string& key, std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("config key '" + key + "': expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

int to_int(const std::string& key, std::string_view text) {
  const std::int64_t value = to_integer(key, text);
  if (value < 0 || value > 1'000'000) {
    throw InputError("config key '" + key + "': value out of range");
  }
  return static_cast<int>(value);
}

FactorParams to_params(const std::string& item) {
  const auto colon = item.find(':');
  if (colon == std::string::npos) {
    throw InputError("config key 'params': expected a:b, got '" + item + "'");
  }
  std::string a = item.substr(0, colon);
  std::string b = item.substr(colon + 1);
  boost::algorithm::trim(a);
  boost::algorithm::trim(b);
  return FactorParams(to_int("params", a), to_int("params", b));
}

Rational to_probability(const std::string& item) {
  const auto slash = item.find('/');
  std::int64_t num = to_integer("p", std::string_view(item).substr(0, slash));
  std::int64_t den = slash == std::string::npos ? 1 : to_integer("p", std::string_view(item).substr(slash + 1));
  if (den <= 0) throw InputError("config key 'p': nonpositive denominator in '" + item + "'");
  Rational p(num, den);
  if (p < 0 || p > 1) throw InputError("config key 'p': probability '" + item + "' outside [0,1]");
  return p;
}

EnsembleSpec parse_ensemble(const std::string& name, const pt::ptree& section) {
  static const std::set<std::string> known = {"kind",    "params", "min_order", "max_order",
                                              "orders",  "samples", "p",         "seed"};
  EnsembleSpec spec;
  spec.name = name;
  for (const auto& [key, child] : section) {
    if (!known.contains(key)) throw InputError("[" + name + "]: unknown key '" + key + "'");
    if (!child.empty()) throw InputError("[" + name + "]: nested sections are not supported");
  }
  const std::string kind = section.get<std::string>("kind", "");
  if (kind == "exhaustive") {
    spec.kind = EnsembleKind::exhaustive;
  } else if (kind == "random") {
    spec.kind = EnsembleKind::random;
  } else {
    throw InputError("[" + name + "]: kind must be 'exhaustive' or 'random'");
  }
  for (const auto& item : split_list(section.get<std::string>("params", ""))) {
    spec.params.push_back(to_params(item));
  }
  if (spec.params.empty()) throw InputError("[" + name + "]: empty parameter list");

  if (spec.kind == EnsembleKind::exhaustive) {
    spec.min_order = to_int("min_order", section.get<std::string>("min_order", "1"));
    spec.max_order = to_int("max_order", section.get<std::string>("max_order", "6"));
    if (spec.min_order < 1 || spec.min_order > spec.max_order) {
      throw InputError("[" + name + "]: need 1 <= min_order <= max_order");
    }
    if (spec.max_order > kMaxExhaustiveOrder) {
      throw InputError("[" + name + "]: exhaustive enumeration is limited to order " +
                       std::to_string(kMaxExhaustiveOrder));
    }
  } else {
    for (const auto& item : split_list(section.get<std::string>("orders", ""))) {
      const int n = to_int("orders", item);
      if (n < 1) throw InputError("[" + name + "]: orders must be positive");
      spec.orders.push_back(n);
    }
    if (spec.orders.empty()) throw InputError("[" + name + "]: empty order list");
    spec.samples = to_int("samples", section.get<std::string>("samples", "0"));
    for (const auto& item : split_list(section.get<std::string>("p", ""))) {
      spec.p_grid.push_back(to_probability(item));
    }
    if (spec.p_grid.empty()) throw InputError("[" + name + "]: empty probability grid");
    const std::int64_t seed = to_integer("seed", section.get<std::string>("seed", "0"));
    spec.seed = static_cast<std::uint64_t>(seed);
  }
  return spec;
}

int largest_order(const EnsembleSpec& spec) {
  if (spec.kind == EnsembleKind::exhaustive) return spec.max_order;
  return *std::max_element(spec.orders.begin(), spec.orders.end());
}

}  // namespace

SweepConfig parse_sweep_config(std::string_view text) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw InputError("sweep config line " + std::to_string(e.line()) + ": " + e.message());
  }
  SweepConfig config;
  for (const auto& [key, child] : tree) {
    if (!child.empty()) {
      config.ensembles.push_back(parse_ensemble(key, child));
    } else if (key == "brute_limit") {
      config.brute_force_limit = to_int(key, child.data());
    } else if (key == "crit_limit") {
      config.criticality_limit = to_int(key, child.data());
    } else if (key == "output") {
      config.output = child.data();
    } else {
      throw InputError("sweep config: unknown top-level key '" + key + "'");
    }
  }
  validate_sweep_config(config);
  return config;
}

void validate_sweep_config(const SweepConfig& config) {
  if (config.ensembles.empty()) throw InputError("sweep config declares no ensemble");
  for (const auto& spec : config.ensembles) {
    if (spec.params.empty()) throw InputError("[" + spec.name + "]: empty parameter list");
    if (spec.kind == EnsembleKind::random && (spec.orders.empty() || spec.p_grid.empty())) {
      throw InputError("[" + spec.name + "]: random ensemble needs orders and p");
    }
    const int n = largest_order(spec);
    if (n > config.criticality_limit || n > config.brute_force_limit) {
      throw InputError("[" + spec.name + "]: order " + std::to_string(n) +
                       " exceeds the configured limits");
    }
  }
}

SweepConfig read_sweep_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open sweep config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sweep_config(buf.str());
}

const char* to_string(EnsembleKind kind) {
  return kind == EnsembleKind::exhaustive ? "exhaustive" : "random";
}

std::int64_t SweepSummary::total_hypothesis_passing() const {
  std::int64_t total = 0;
  for (const auto& row : rows) total += row.hypothesis_passing;
  return total;
}

namespace {

class SweepRunner {
 public:
  SweepRunner(const SweepConfig& config, SweepSummary& summary)
      : config_(config), summary_(summary) {}

  void run(const EnsembleSpec& spec) {
    const std::size_t first_row = summary_.rows.size();
    for (const auto& params : spec.params) {
      EnsembleSummary row;
      row.ensemble = spec.name;
      row.kind = spec.kind;
      row.params = params;
      summary_.rows.push_back(row);
    }
    auto visit = [&](const Graph& g) {
      for (std::size_t i = 0; i < spec.params.size(); ++i) {
        examine(spec, spec.params[i], g, summary_.rows[first_row + i]);
      }
    };
    if (spec.kind == EnsembleKind::exhaustive) {
      for (int n = spec.min_order; n <= spec.max_order; ++n) {
        std::vector<Edge> pairs;
        for (Vertex u = 0; u < n; ++u) {
          for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        }
        const std::uint64_t count = std::uint64_t{1} << pairs.size();
        for (std::uint64_t mask = 0; mask < count; ++mask) {
          std::vector<Edge> edges;
          for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1U) edges.push_back(pairs[i]);
          }
          visit(Graph::from_edges(n, edges));
        }
      }
    } else {
      for (int n : spec.orders) {
        for (int i = 0; i < spec.samples; ++i) {
          const Rational& p = spec.p_grid[static_cast<std::size_t>(i) % spec.p_grid.size()];
          visit(random_graph(n, p, spec.seed + static_cast<std::uint64_t>(i)));
        }
      }
    }
  }

 private:
  void examine(const EnsembleSpec& spec, const FactorParams& params, const Graph& g,
               EnsembleSummary& row) {
    ++row.graphs_examined;
    const HypothesisReport hyp = check_theorem1_hypotheses(g, params);
    if (!hyp.all_ok()) return;
    ++row.hypothesis_passing;

    CriticalityOptions options;
    options.criticality_limit = config_.criticality_limit;
    options.brute_force_limit = config_.brute_force_limit;
    CriticalityReport crit = is_fractional_id_factor_critical(g, params, options);
    if (crit.verdict) {
      ++row.critical_confirmed;
    } else {
      ++row.counterexamples;
      summary_.counterexamples.push_back({spec.name, params, g, hyp, std::move(crit)});
    }

    for (const VertexSet& x : maximal_independent_sets(g)) {
      ++row.claim_sets_checked;
      try {
        check_proof_claims(g, params, x);
      } catch (const Error& e) {
        ++row.claim_failures;
        summary_.claim_failures.push_back({spec.name, params, g, x, e.what()});
      }
    }
  }

  const SweepConfig& config_;
  SweepSummary& summary_;
};

}  // namespace

SweepSummary run_sweep(const SweepConfig& config) {
  SweepSummary summary;
  SweepRunner runner(config, summary);
  for (const auto& spec : config.ensembles) runner.run(spec);
  return summary;
}

}  // namespace fracfactor
