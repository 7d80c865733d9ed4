#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecd/connectivity.hpp"
#include "ecd/embedding.hpp"
#include "ecd/necklace.hpp"
#include "ecd/signed_graph.hpp"

namespace ecd {

// Smallest vertex whose deletion leaves a graph without odd cycles.
std::optional<VertexId> almost_bipartite_witness(const SignedGraph& g);

// Three vertices, each pair joined by exactly one odd and one even edge.
bool is_k32_tilde(const SignedGraph& g);

struct Albatross {
  std::vector<EdgeId> edges;  // the four edges, ascending
  VertexId center = -1;
};

// Centers of degree 4 in g whose edges form two odd digons to two distinct
// neighbours. Sign patterns are literal, not up to switching.
std::vector<Albatross> find_albatrosses(const SignedGraph& g);

// Four edges forming two odd digons that share exactly one vertex.
bool is_albatross_shape(const SignedGraph& g, std::span<const EdgeId> edges);

struct AlmostThreeConnected {
  bool holds = true;
  std::optional<Separation> violation;
};

// Every proper 2-separation has a side that is an albatross shape.
AlmostThreeConnected is_almost_3_connected(const SignedGraph& g);

enum class CaseKind {
  NotTwoConnected,
  AlmostBipartite,
  PlanarTwoOdd,
  IsK32,
  TwoSeparation,
  ThreeSeparationBipartiteSide,
  NoCaseFound,
};

std::string to_string(CaseKind k);

struct StructureCase {
  CaseKind kind = CaseKind::NoCaseFound;
  std::optional<VertexId> apex;
  std::optional<Embedding> embedding;
  // For ThreeSeparationBipartiteSide the bipartite side is `right`.
  std::optional<Separation> separation;
  // NoCaseFound on a graph whose odd-K4 search came back absent.
  bool coverage_violation = false;
};

// Tries the cases in order: not 2-connected, almost bipartite, planar with at
// most two odd faces, K32-tilde, a 2-separation whose sides are connected and
// not contained in an odd digon (proper ones first), a 3-separation with a
// connected bipartite side of at least four edges (smallest such side).
// Embedding and minor searches may throw BudgetExceeded.
StructureCase structure_classify(const SignedGraph& g);

// Witness necklace when every even 2-separation with connected sides yields a
// three-bead necklace with two odd digon beads. Throws PreconditionError when
// g has no even proper 2-separation with connected sides.
std::optional<Necklace> is_bermuda(const SignedGraph& g);

}  // namespace ecd
