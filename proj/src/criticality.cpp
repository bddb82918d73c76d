#include "fracfactor/criticality.hpp"

#include <string>

#include "fracfactor/errors.hpp"

namespace fracfactor {
namespace {

// Backtracking over candidates in increasing index order yields sets of a
// fixed size in lexicographic order.
bool extend(const Graph& g, std::size_t target, Vertex next, std::vector<Vertex>& chosen,
            std::vector<int>& blocked, const std::function<bool(const VertexSet&)>& visit) {
  if (chosen.size() == target) return visit(VertexSet(chosen));
  const auto remaining = target - chosen.size();
  for (Vertex v = next; v < g.order(); ++v) {
    if (static_cast<std::size_t>(g.order() - v) < remaining) break;
    if (blocked[v] > 0) continue;
    chosen.push_back(v);
    for (Vertex w : g.neighbors(v)) ++blocked[w];
    const bool keep_going = extend(g, target, v + 1, chosen, blocked, visit);
    for (Vertex w : g.neighbors(v)) --blocked[w];
    chosen.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_independent_set(const Graph& g, std::optional<int> max_size,
                              const std::function<bool(const VertexSet&)>& visit) {
  const int largest = max_size ? std::min(*max_size, g.order()) : g.order();
  std::vector<Vertex> chosen;
  std::vector<int> blocked(static_cast<std::size_t>(g.order()), 0);
  for (int k = 0; k <= largest; ++k) {
    bool any = false;
    const bool keep_going = extend(g, static_cast<std::size_t>(k), 0, chosen, blocked,
                                   [&](const VertexSet& s) {
                                     any = true;
                                     return visit(s);
                                   });
    if (!keep_going) return;
    // No independent set of size k means none larger either.
    if (!any) return;
  }
}

std::vector<VertexSet> enumerate_independent_sets(const Graph& g, std::optional<int> max_size) {
  std::vector<VertexSet> out;
  for_each_independent_set(g, max_size, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_independent_set(g, std::nullopt, [&](const VertexSet& s) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (s.contains(v)) continue;
      bool free = true;
      for (Vertex w : g.neighbors(v)) {
        if (s.contains(w)) {
          free = false;
          break;
        }
      }
      if (free) return true;
    }
    out.push_back(s);
    return true;
  });
  return out;
}

CriticalityReport is_fractional_id_factor_critical(const Graph& g, const FactorParams& params,
                                                   const CriticalityOptions& options) {
  if (g.order() > options.criticality_limit) {
    throw ResourceError("criticality check limited to " + std::to_string(options.criticality_limit) +
                        " vertices (graph has " + std::to_string(g.order()) + ")");
  }
  CriticalityReport report;
  report.verdict = true;
  for_each_independent_set(g, std::nullopt, [&](const VertexSet& independent) {
    ++report.independent_sets_checked;
    Deletion deletion = delete_vertices(g, independent);
    if (has_fractional_factor(deletion.graph, params)) return true;
    report.verdict = false;
    report.failing_set = independent;
    SolverOptions solver;
    solver.brute_force_limit = options.brute_force_limit;
    auto result = find_fractional_factor(deletion.graph, params, solver);
    report.failing_certificate = std::move(result.certificate);
    report.failing_deletion = std::move(deletion);
    return false;
  });
  return report;
}

}  // namespace fracfactor
