#pragma once

#include <span>
#include <vector>

#include "ecd/signed_graph.hpp"

namespace ecd {

// Greedy closed-walk peeling of an Eulerian edge set into cycles (unordered
// edge lists). Parity is not examined.
std::vector<std::vector<EdgeId>> peel_cycles(const SignedGraph& g, std::span<const EdgeId> edges);

}  // namespace ecd
