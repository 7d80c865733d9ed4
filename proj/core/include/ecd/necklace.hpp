#pragma once

#include <string>
#include <vector>

#include "ecd/connectivity.hpp"
#include "ecd/signed_graph.hpp"

namespace ecd {

// Beads in cyclic order; beads[0..split_index) cover the left side of the
// separation the necklace was built from and the remaining beads the right.
struct Necklace {
  std::vector<std::vector<EdgeId>> beads;
  int split_index = 0;
};

// Starts from the two sides of an even 2-separation with connected sides and
// splits beads at cut vertices until every bead is 2-connected or has two
// vertices. Throws PreconditionError when g is not a 2-connected loopless
// Eulerian graph or `sep` is not such a separation.
Necklace necklace(const SignedGraph& g, const Separation& sep);

// Literal check of the necklace properties against g and the separation it
// claims to extend: the beads partition E, each is connected, Eulerian and
// 2-connected or two-vertex, two beads form a 2-separation, three or more meet
// cyclically in single vertices, and a prefix of the beads equals sep.left.
// Returns an empty string on success, else the first failed property.
std::string check_necklace(const SignedGraph& g, const Separation& sep, const Necklace& n);

// Two edges on the same pair of distinct vertices with opposite signs.
bool is_odd_digon(const SignedGraph& g, std::span<const EdgeId> edges);

// Contained in some odd digon: at most two edges, all on one vertex pair, and
// not two edges of the same sign.
bool is_signed_subgraph_of_odd_digon(const SignedGraph& g, std::span<const EdgeId> edges);

}  // namespace ecd
