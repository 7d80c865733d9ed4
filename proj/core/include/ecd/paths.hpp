#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecd/signed_graph.hpp"

namespace ecd {

struct Path {
  VertexId from = -1;
  VertexId to = -1;
  std::vector<EdgeId> edges;  // in walk order from `from` to `to`
};

struct PathSystem {
  std::vector<Path> paths;
};

// k pairwise edge-disjoint paths whose ends are exactly the 2k distinct
// terminals. Works on a BFS spanning tree by peeling leaves: a non-terminal
// leaf is dropped; a terminal leaf next to a terminal closes a path; otherwise
// the leaf's partial path is handed to its neighbour. Throws PreconditionError
// if g is disconnected, a terminal is repeated, has no edges, or the count is odd.
PathSystem pair_paths(const SignedGraph& g, std::span<const VertexId> terminals);

// Empty string when `ps` is edge-disjoint, consists of paths, and has exactly
// `terminals` as its multiset of ends; otherwise the first violation.
std::string check_path_system(const SignedGraph& g, std::span<const VertexId> terminals,
                              const PathSystem& ps);

// True iff `edges`, walked from `from`, is a path ending at `to` without
// repeating a vertex.
bool is_path(const SignedGraph& g, VertexId from, VertexId to, std::span<const EdgeId> edges);

// Paths from `center` to every target inside the subgraph `allowed`, pairwise
// sharing only `center`, via unit-capacity flow with split vertices. Targets
// are never interior vertices. nullopt if no such fan exists.
std::optional<std::vector<Path>> fan_paths(const SignedGraph& g, std::span<const EdgeId> allowed,
                                           VertexId center, std::span<const VertexId> targets);

// Vertex-disjoint paths pairing sources[i] with some sink, one per source,
// inside `allowed`. nullopt if the flow falls short.
std::optional<std::vector<Path>> disjoint_paths(const SignedGraph& g,
                                                std::span<const EdgeId> allowed,
                                                std::span<const VertexId> sources,
                                                std::span<const VertexId> sinks);

// Shortest path inside `allowed` avoiding the `blocked` vertices (the ends are
// never blocked). nullopt if none.
std::optional<Path> shortest_path(const SignedGraph& g, std::span<const EdgeId> allowed,
                                  VertexId from, VertexId to,
                                  std::span<const VertexId> blocked = {});

}  // namespace ecd
