#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ecd/signed_graph.hpp"

namespace ecd {

// Connectivity notions here ignore isolated vertices: a graph is connected
// when the edges span a single component. The edgeless graph is connected.
bool is_connected(const SignedGraph& g);

// True iff the subgraph formed by `edges` (and their endpoints) is connected.
bool edges_connected(const SignedGraph& g, std::span<const EdgeId> edges);

// Edge sets of the connected components, ordered by smallest edge id.
std::vector<std::vector<EdgeId>> edge_components(const SignedGraph& g);

// 2-connected blocks as edge-id sets, ordered by smallest edge id. A bridge is
// a singleton block; so is a loop.
std::vector<std::vector<EdgeId>> blocks(const SignedGraph& g);

std::vector<VertexId> cut_vertices(const SignedGraph& g);

// Connected, no cut vertex, and at least two vertices (or no edges at all).
bool is_two_connected(const SignedGraph& g);

bool is_eulerian(const SignedGraph& g);

struct ValidityReport {
  bool loopless = false;
  bool connected = false;
  bool two_connected = false;
  bool eulerian = false;
  bool signature_even = false;
  bool admissible = false;
};

ValidityReport validate_instance(const SignedGraph& g);

enum class SeparationParity { Odd, Even };

struct Separation {
  std::vector<EdgeId> left;
  std::vector<EdgeId> right;
  std::vector<VertexId> boundary;
  int order = 0;
  bool proper = false;
  // Set for order-2 separations of Eulerian graphs.
  std::optional<SeparationParity> parity;

  Separation swapped() const;
};

// Builds the separation (left, complement) and its derived fields. Throws
// PreconditionError if either side is empty.
Separation make_separation(const SignedGraph& g, std::span<const EdgeId> left);

// All separations of order 1..k with both sides non-empty, found by choosing a
// boundary set and distributing the components of G - boundary (and the edges
// inside the boundary) between the sides. Each unordered separation appears
// once, with `left` holding the smallest edge id. Sorted by boundary, then
// left. Throws BudgetExceeded if a boundary set induces more than 22 pieces.
std::vector<Separation> enumerate_separations(const SignedGraph& g, int k, bool require_proper);

// Degree of v counting only the given edges.
int degree_within(const SignedGraph& g, std::span<const EdgeId> edges, VertexId v);

}  // namespace ecd
