#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace fracfactor {

using Vertex = int;

// Unordered vertex pair stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free set of vertex indices. Houses S, T, X and I.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  // Throws InputError on duplicates or negative indices.
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet range(Vertex begin, Vertex end);
  static VertexSet from_mask(std::uint64_t mask);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool disjoint_from(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Lexicographic on the sorted member lists.
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph of the given order.
  explicit Graph(int order);

  // Throws InputError on loops, duplicate edges or out-of-range endpoints.
  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edge_count_; }

  int degree(Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;

  // Throws InputError unless 0 <= v < order().
  void check_vertex(Vertex v) const;
  void check_set(const VertexSet& s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// d_G minimum. Throws InputError on the empty graph.
int min_degree(const Graph& g);

// N_G(u) ∪ N_G(v) for u != v.
VertexSet neighborhood_union(const Graph& g, Vertex u, Vertex v);

// N_G(S), the union of the open neighborhoods of the members of S.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

// N_G[v].
VertexSet closed_neighborhood(const Graph& g, Vertex v);

// G - S with the surviving vertices renumbered in increasing order.
struct Deletion {
  Graph graph;
  std::vector<Vertex> old_to_new;  // -1 for deleted vertices
  std::vector<Vertex> new_to_old;

  VertexSet to_original(const VertexSet& s) const;
};

Deletion delete_vertices(const Graph& g, const VertexSet& s);

// G ∨ H: vertices of g2 are shifted by g1.order().
Graph join(const Graph& g1, const Graph& g2);

// G ∪ H on disjoint vertex sets, vertices of g2 shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);

// e_G(S,T) for disjoint S and T.
std::int64_t edges_between(const Graph& g, const VertexSet& s, const VertexSet& t);

bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace fracfactor
