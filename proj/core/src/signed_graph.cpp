#include "ecd/signed_graph.hpp"

#include <algorithm>
#include <string>

#include "ecd/errors.hpp"

namespace ecd {

SignedGraph::SignedGraph(int num_vertices) {
  if (num_vertices < 0) throw PreconditionError("negative vertex count");
  incidence_.resize(static_cast<std::size_t>(num_vertices));
}

EdgeId SignedGraph::add_edge(VertexId u, VertexId v, bool odd) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " +
                            std::to_string(v));
  }
  const EdgeId id = num_edges();
  edges_.push_back(Edge{u, v, odd});
  incidence_[static_cast<std::size_t>(u)].push_back(id);
  incidence_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

VertexId SignedGraph::add_vertex() {
  incidence_.emplace_back();
  return num_vertices() - 1;
}

std::vector<EdgeId> SignedGraph::signature() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (edges_[static_cast<std::size_t>(e)].odd) out.push_back(e);
  }
  return out;
}

int SignedGraph::signature_size() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const Edge& e) { return e.odd; }));
}

std::vector<VertexId> SignedGraph::support() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (!incident(v).empty()) out.push_back(v);
  }
  return out;
}

int SignedGraph::num_support_vertices() const { return static_cast<int>(support().size()); }

EdgeSubgraph edge_subgraph(const SignedGraph& g, std::span<const EdgeId> edges) {
  EdgeSubgraph sub{SignedGraph(g.num_vertices()), {}};
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (EdgeId e : sorted) {
    const Edge& ed = g.edge(e);
    sub.graph.add_edge(ed.u, ed.v, ed.odd);
    sub.parent.push_back(e);
  }
  return sub;
}

bool parity_of(const SignedGraph& g, std::span<const EdgeId> edges) {
  bool p = false;
  for (EdgeId e : edges) p ^= g.is_odd(e);
  return p;
}

std::vector<VertexId> vertices_of(const SignedGraph& g, std::span<const EdgeId> edges) {
  std::vector<VertexId> out;
  for (EdgeId e : edges) {
    out.push_back(g.edge(e).u);
    out.push_back(g.edge(e).v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeId> all_edges(const SignedGraph& g) {
  std::vector<EdgeId> out(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) out[static_cast<std::size_t>(e)] = e;
  return out;
}

std::vector<EdgeId> complement_edges(const SignedGraph& g, std::span<const EdgeId> edges) {
  std::vector<char> in(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId e : edges) in[static_cast<std::size_t>(e)] = 1;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!in[static_cast<std::size_t>(e)]) out.push_back(e);
  }
  return out;
}

}  // namespace ecd
