#pragma once

#include <initializer_list>
#include <tuple>

#include "ecd/signed_graph.hpp"

// Small named graphs shared by the tests.
namespace ecd::testing {

inline SignedGraph make_graph(int n, std::initializer_list<std::tuple<int, int, int>> edges) {
  SignedGraph g(n);
  for (auto [u, v, s] : edges) g.add_edge(u, v, s != 0);
  return g;
}

// Cycle 0-1-...-(n-1)-0 with the given sign on every edge.
inline SignedGraph cycle_graph(int n, bool odd) {
  SignedGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, odd);
  return g;
}

inline SignedGraph complete_graph(int n, bool odd) {
  SignedGraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b, odd);
  }
  return g;
}

// Triangle with every pair joined by one odd and one even edge.
inline SignedGraph k32_tilde() {
  return make_graph(3, {{0, 1, 1}, {0, 1, 0}, {1, 2, 1}, {1, 2, 0}, {0, 2, 1}, {0, 2, 0}});
}

// Octahedron: 0 and 5 are the poles, 1-2-3-4 the equator. Edges 0-1 and 0-2
// are odd.
inline SignedGraph octahedron_two_odd() {
  SignedGraph g(6);
  for (int i = 1; i <= 4; ++i) {
    g.add_edge(0, i, i <= 2);
    g.add_edge(i, i % 4 + 1, false);
    g.add_edge(5, i, false);
  }
  return g;
}

// All-even 4-cycle 0-1-2-3 with odd digons 2-4 and 4-0 (edges 0..7).
inline SignedGraph bermuda_square() {
  return make_graph(5, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 0, 0}, {2, 4, 0}, {2, 4, 1}, {4, 0, 0}, {4, 0, 1}});
}

// Two all-even 4-cycles sharing the non-adjacent pair {0, 2}.
inline SignedGraph two_squares() {
  return make_graph(6, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 0, 0}, {0, 4, 0}, {4, 2, 0}, {2, 5, 0}, {5, 0, 0}});
}

}  // namespace ecd::testing
