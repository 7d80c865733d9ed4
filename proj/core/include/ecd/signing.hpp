#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ecd/signed_graph.hpp"

namespace ecd {

// Flips the sign of every edge with exactly one end in `x`. Ids are unchanged.
// Throws PreconditionError for out-of-range vertices.
SignedGraph switch_signs(const SignedGraph& g, std::span<const VertexId> x);

// Symmetric difference of the signature with the cut induced by `x`.
std::vector<EdgeId> switched_signature(const SignedGraph& g, std::span<const VertexId> x);

struct EquivalenceResult {
  bool equivalent = false;
  // When equivalent: Σ △ sigma2 = δ(switching). Lowest-id-first 2-colouring.
  std::vector<VertexId> switching;
  // When not: a cycle whose parity differs between the two signatures.
  std::vector<EdgeId> refuting_cycle;
};

EquivalenceResult signatures_equivalent(const SignedGraph& g, std::span<const EdgeId> sigma2);

// True iff `edges` is a cycle: at least two distinct non-loop edges forming a
// connected subgraph in which every vertex has degree two.
bool is_cycle(const SignedGraph& g, std::span<const EdgeId> edges);

// Reorders a cycle into walk order, starting at its smallest edge id and
// continuing towards the smaller of that edge's two neighbours on the cycle.
// Throws PreconditionError if `edges` is not a cycle.
std::vector<EdgeId> order_cycle(const SignedGraph& g, std::span<const EdgeId> edges);

enum class Parity { Even, Odd };

// Throws PreconditionError if `cycle` is not a cycle.
Parity cycle_parity(const SignedGraph& g, std::span<const EdgeId> cycle);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<VertexId> switching;   // switch_signs(g, switching) has no odd edge
  std::vector<EdgeId> odd_cycle;     // failure witness
};

// Signed bipartiteness: no odd cycle. An odd loop is reported as the
// one-edge witness [loop].
BipartiteResult is_bipartite_signed(const SignedGraph& g);

// Returns a signature equivalent to Σ that avoids every edge of `forest`.
// Throws PreconditionError if `forest` contains a cycle.
std::vector<EdgeId> disjoint_signature(const SignedGraph& g, std::span<const EdgeId> forest);

}  // namespace ecd
