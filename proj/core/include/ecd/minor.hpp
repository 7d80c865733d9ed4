#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecd/signed_graph.hpp"

namespace ecd {

enum class MinorTarget { K3 = 3, K4 = 4, K5 = 5 };

// Branch sets realise the vertices of H; after switching on `switching`, every
// branch-tree edge is even and every connector is odd. connectors[i] joins the
// pair (a, b) listed in pair order (0,1), (0,2), ..., (k-2,k-1).
struct MinorModel {
  std::vector<std::vector<VertexId>> branch_sets;
  std::vector<std::vector<EdgeId>> branch_trees;
  std::vector<EdgeId> connectors;
  std::vector<VertexId> switching;
};

enum class MinorOutcome { Found, Absent, Unknown };

struct MinorResult {
  MinorOutcome outcome = MinorOutcome::Absent;
  std::optional<MinorModel> model;
};

struct MinorSearchOptions {
  int max_vertices = 12;  // on the reduced graph
};

// Exhaustive odd-K_k minor search. Before searching, for K4 and K5, vertices
// that cannot carry a branch set of degree >= 3 are removed (degree <= 1 or a
// single neighbour) and degree-2 vertices are suppressed; parallel edges of
// equal sign are collapsed for every target. A found model is lifted back and
// checked with check_minor_model before it is returned. Graphs whose reduced
// form has more than `max_vertices` vertices yield Unknown.
MinorResult odd_minor(const SignedGraph& g, MinorTarget target, MinorSearchOptions opts = {});

// Independent certificate check. Returns an empty string when the model is
// valid, otherwise a description of the first violated condition.
std::string check_minor_model(const SignedGraph& g, const MinorModel& m, MinorTarget target);

}  // namespace ecd
