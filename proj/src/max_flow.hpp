#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace fracfactor::detail {

// Dinic's algorithm on integer capacities. Flows stay integral.
class MaxFlow {
 public:
  using Flow = std::int64_t;

  explicit MaxFlow(int nodes) : adjacency_(static_cast<std::size_t>(nodes)) {}

  // Returns the id of the forward arc; its reverse is id ^ 1.
  int add_arc(int from, int to, Flow capacity) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, 0});
    arcs_.push_back({from, 0, 0});
    adjacency_[from].push_back(id);
    adjacency_[to].push_back(id + 1);
    return id;
  }

  Flow flow(int arc) const { return arcs_[arc].flow; }

  Flow solve(int source, int sink) {
    Flow total = 0;
    while (build_levels(source, sink)) {
      next_.assign(adjacency_.size(), 0);
      while (Flow pushed = augment(source, sink, std::numeric_limits<Flow>::max())) {
        total += pushed;
      }
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    Flow capacity;
    Flow flow;
  };

  bool build_levels(int source, int sink) {
    level_.assign(adjacency_.size(), -1);
    std::queue<int> frontier;
    level_[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int id : adjacency_[v]) {
        const Arc& arc = arcs_[id];
        if (arc.capacity - arc.flow > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[v] + 1;
          frontier.push(arc.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Flow augment(int v, int sink, Flow limit) {
    if (v == sink) return limit;
    for (std::size_t& i = next_[v]; i < adjacency_[v].size(); ++i) {
      const int id = adjacency_[v][i];
      Arc& arc = arcs_[id];
      const Flow residual = arc.capacity - arc.flow;
      if (residual <= 0 || level_[arc.to] != level_[v] + 1) continue;
      if (Flow pushed = augment(arc.to, sink, residual < limit ? residual : limit)) {
        arc.flow += pushed;
        arcs_[id ^ 1].flow -= pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace fracfactor::detail
