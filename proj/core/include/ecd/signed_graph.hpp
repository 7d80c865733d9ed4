#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ecd {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  bool odd = false;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph with a parity bit on every edge. The signature is the
// set of odd edges. Edge ids are positions in insertion order and never change;
// parallel edges and loops are representable.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int num_vertices);

  // Throws PreconditionError when an endpoint is out of range.
  EdgeId add_edge(VertexId u, VertexId v, bool odd);
  VertexId add_vertex();

  int num_vertices() const { return static_cast<int>(incidence_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  bool is_odd(EdgeId e) const { return edge(e).odd; }

  // Edge ids incident to v, ascending; a loop appears twice.
  const std::vector<EdgeId>& incident(VertexId v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  std::vector<EdgeId> signature() const;
  int signature_size() const;

  // Vertices with at least one incident edge.
  std::vector<VertexId> support() const;
  int num_support_vertices() const;

  void set_sign(EdgeId e, bool odd) { edges_[static_cast<std::size_t>(e)].odd = odd; }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.edges_ == b.edges_ && a.num_vertices() == b.num_vertices();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// A graph on a subset of another graph's edges. Vertex ids are shared with the
// parent; `parent[e]` is the parent id of local edge e, or -1 for edges that do
// not exist in the parent (virtual edges).
struct EdgeSubgraph {
  SignedGraph graph;
  std::vector<EdgeId> parent;

  EdgeId add_virtual(VertexId u, VertexId v, bool odd) {
    parent.push_back(-1);
    return graph.add_edge(u, v, odd);
  }
};

EdgeSubgraph edge_subgraph(const SignedGraph& g, std::span<const EdgeId> edges);

// Sum of signs over an edge set, mod 2.
bool parity_of(const SignedGraph& g, std::span<const EdgeId> edges);

// Vertices touched by an edge set, ascending.
std::vector<VertexId> vertices_of(const SignedGraph& g, std::span<const EdgeId> edges);

std::vector<EdgeId> all_edges(const SignedGraph& g);

// Sorted complement of an edge set.
std::vector<EdgeId> complement_edges(const SignedGraph& g, std::span<const EdgeId> edges);

}  // namespace ecd
