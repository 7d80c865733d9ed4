#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ecd/signed_graph.hpp"

namespace ecd {

// A dart is one end of an edge: dart 2e leaves edge e's `u` end, dart 2e+1
// leaves its `v` end.
inline int dart_of(EdgeId e, int side) { return 2 * e + side; }
inline EdgeId dart_edge(int d) { return d / 2; }
inline int reverse_dart(int d) { return d ^ 1; }

// Rotation system: for every vertex, the cyclic order of the darts leaving it.
struct Embedding {
  std::vector<std::vector<int>> rotation;
};

struct Face {
  std::vector<int> darts;     // facial walk as a sequence of darts
  std::vector<EdgeId> edges;  // dart_edge of each dart
  bool odd = false;           // odd number of odd-edge traversals
};

// Face tracing: from dart d (x -> y) continue with the dart following
// reverse(d) in y's rotation. Throws PreconditionError if the rotation does
// not list each dart exactly once at its tail vertex.
std::vector<Face> faces_and_parities(const SignedGraph& g, const Embedding& emb);

// Euler's formula on the edge-spanned part: V - E + F == 2. Requires g connected.
bool is_planar_embedding(const SignedGraph& g, const Embedding& emb);

int count_odd_faces(const std::vector<Face>& faces);

struct EmbeddingSearchOptions {
  std::int64_t node_budget = 2'000'000;
};

// Searches the planar embeddings of a connected loopless graph for one with at
// most two odd faces. Embeddings are built edge by edge: an edge to a new
// vertex picks a corner at its old end, an edge between placed vertices picks
// two corners of one face. The odd-face count never drops along a branch,
// which bounds the search. Returns nullopt when no such embedding exists.
// Throws BudgetExceeded when the node budget runs out.
std::optional<Embedding> find_two_odd_face_embedding(const SignedGraph& g,
                                                     EmbeddingSearchOptions opts = {});

}  // namespace ecd
