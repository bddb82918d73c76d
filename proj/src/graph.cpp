#include "fracfactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "fracfactor/errors.hpp"

namespace fracfactor {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InputError("vertex set contains a duplicate");
  }
  if (!members_.empty() && members_.front() < 0) {
    throw InputError("vertex set contains a negative index");
  }
}

VertexSet VertexSet::range(Vertex begin, Vertex end) {
  VertexSet s;
  for (Vertex v = begin; v < end; ++v) s.members_.push_back(v);
  return s;
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  s.members_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    s.members_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::disjoint_from(const VertexSet& other) const {
  auto i = members_.begin();
  auto j = other.members_.begin();
  while (i != members_.end() && j != other.members_.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

Graph::Graph(int order) {
  if (order < 0) throw InputError("graph order must be nonnegative");
  adjacency_.resize(static_cast<std::size_t>(order));
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= order) {
      throw InputError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                       " out of range for order " + std::to_string(order));
    }
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < g.adjacency_.size(); ++v) {
    auto& row = g.adjacency_[v];
    std::sort(row.begin(), row.end());
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end()) {
      throw InputError("duplicate edge " + std::to_string(std::min<Vertex>(v, *dup)) +
                       " " + std::to_string(std::max<Vertex>(v, *dup)));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order()));
  }
}

void Graph::check_set(const VertexSet& s) const {
  if (!s.empty()) check_vertex(s.members().back());
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adjacency_[v].size());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw InputError("minimum degree of the empty graph is undefined");
  int best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

VertexSet neighborhood_union(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw InputError("neighborhood union needs two distinct vertices");
  std::vector<Vertex> out;
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  std::vector<bool> hit(static_cast<std::size_t>(g.order()), false);
  for (Vertex x : s) {
    for (Vertex y : g.neighbors(x)) hit[y] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (hit[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  std::vector<Vertex> out(nb.begin(), nb.end());
  out.push_back(v);
  return VertexSet(std::move(out));
}

VertexSet Deletion::to_original(const VertexSet& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(new_to_old.at(static_cast<std::size_t>(v)));
  return VertexSet(std::move(out));
}

Deletion delete_vertices(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  Deletion d;
  d.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    d.old_to_new[v] = static_cast<Vertex>(d.new_to_old.size());
    d.new_to_old.push_back(v);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (d.old_to_new[e.u] >= 0 && d.old_to_new[e.v] >= 0) {
      kept.emplace_back(d.old_to_new[e.u], d.old_to_new[e.v]);
    }
  }
  d.graph = Graph::from_edges(static_cast<int>(d.new_to_old.size()), kept);
  return d;
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + n1, e.v + n1);
  for (Vertex u = 0; u < n1; ++u) {
    for (Vertex v = 0; v < n2; ++v) edges.emplace_back(u, v + n1);
  }
  return Graph::from_edges(n1 + n2, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + n1, e.v + n1);
  return Graph::from_edges(n1 + g2.order(), edges);
}

std::int64_t edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  g.check_set(s);
  g.check_set(t);
  if (!s.disjoint_from(t)) throw InputError("e_G(S,T) needs disjoint S and T");
  std::int64_t count = 0;
  for (Vertex x : s) {
    for (Vertex y : g.neighbors(x)) {
      if (t.contains(y)) ++count;
    }
  }
  return count;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  for (Vertex x : s) {
    for (Vertex y : g.neighbors(x)) {
      if (y > x && s.contains(y)) return false;
    }
  }
  return true;
}

}  // namespace fracfactor
