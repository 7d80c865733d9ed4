#pragma once

#include <span>
#include <vector>

#include "ecd/signed_graph.hpp"

namespace ecd {

enum class SurgeryKind { Original, Subdivision, Suppression, Virtual };

// Provenance of the edges of a derived graph. forward[e] lists the source
// edges that new edge e stands for (empty for virtual edges).
struct SurgeryMap {
  std::vector<std::vector<EdgeId>> forward;
  std::vector<SurgeryKind> kind;

  // Union of the source edges of `edges`, sorted and without repeats.
  std::vector<EdgeId> lift(std::span<const EdgeId> edges) const;
};

struct Surgery {
  SignedGraph graph;
  SurgeryMap map;
};

// `second` was applied to the output of `first`; the result maps straight to
// the graph `first` started from.
SurgeryMap compose(const SurgeryMap& first, const SurgeryMap& second);

// Replaces each even edge uv by odd edges u-w, w-v through a fresh vertex w.
// Original vertices keep their ids; new vertices are appended in edge order.
Surgery subdivide_even(const SignedGraph& g);

// Repeatedly replaces the two edges at a degree-2 vertex with distinct
// neighbours by one edge carrying their parity sum. Vertices keep their ids
// (suppressed ones become isolated). Throws PreconditionError on loops.
Surgery suppress_degree2(const SignedGraph& g);

}  // namespace ecd
