#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecd/paths.hpp"
#include "ecd/signed_graph.hpp"

// Brute-force reference implementations for tests. Nothing here calls the
// library's algorithms; only the graph container is shared.
namespace ecd::testing {

// Every cycle (length >= 2) as a sorted edge-id list, found by DFS from each
// cycle's smallest edge.
std::vector<std::vector<EdgeId>> all_cycles(const SignedGraph& g);

bool odd_parity(const SignedGraph& g, std::span<const EdgeId> edges);

// No cycle with an odd number of odd edges.
bool brute_bipartite(const SignedGraph& g);

// Connected after deleting each single vertex, and connected itself;
// isolated vertices ignored.
bool brute_two_connected(const SignedGraph& g);

// Exact cover of the edge set by even cycles.
bool brute_decomposable(const SignedGraph& g);

// Checks the certificate conditions of an odd-K_k model directly: disjoint
// connected branch sets, even trees and odd connectors after switching.
std::string brute_check_model(const SignedGraph& g, const std::vector<std::vector<VertexId>>& branch_sets,
                              const std::vector<std::vector<EdgeId>>& trees, const std::vector<EdgeId>& connectors,
                              const std::vector<VertexId>& switching);

// Odd-K_k minor by trying every switching and every assignment of vertices
// to k branch sets or none. Feasible for about 7 vertices.
bool brute_has_odd_minor(const SignedGraph& g, int k);

// Path system check written from the definition.
std::string brute_check_paths(const SignedGraph& g, std::span<const VertexId> terminals, const PathSystem& ps);

// A 2-separation-free witness search: true iff some vertex pair splits the
// edges into two parts that both have a private vertex.
bool brute_has_proper_2sep(const SignedGraph& g);

}  // namespace ecd::testing
