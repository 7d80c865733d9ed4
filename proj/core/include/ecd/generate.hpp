#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecd/signed_graph.hpp"

namespace ecd {

// Instance families. `n` and `m` are size hints whose meaning depends on the
// family:
//   eulerian-bipartite      n vertices, about m edges
//   almost-bipartite        n vertices including the apex, about m edges
//   planar-two-odd          grows ear pairs until at least m edges
//   necklace-composite      n beads
//   bermuda                 m edges in the non-digon bead (m = 4 gives the
//                           4-cycle with two odd digons)
//   random-eulerian-signed  n vertices, m random edges before parity repair
//   doubled-graph           n vertices, every edge of a 2-connected simple
//                           graph doubled
struct FamilySpec {
  std::string family;
  int n = 6;
  int m = 0;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& family_names();

// Deterministic in (family, n, m, seed). Every family except
// random-eulerian-signed emits admissible instances; each instance passes a
// family self-check before it is returned. Throws PreconditionError for an
// unknown family or out-of-range parameters.
SignedGraph generate(const FamilySpec& spec);

}  // namespace ecd
