#include "ecd/signing.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "ecd/errors.hpp"

namespace ecd {
namespace {

struct Potential {
  std::vector<int> value;       // 0/1 per vertex, -1 if untouched
  std::vector<EdgeId> via;      // BFS tree edge into each vertex, -1 for roots
  EdgeId conflict = -1;         // first edge violating the potential
};

// 2-colours vertices so that label(e) == value[u] ^ value[v] on every edge,
// BFS from the lowest unvisited vertex. Stops at the first violation.
template <typename Label>
Potential solve_potential(const SignedGraph& g, Label label) {
  Potential p;
  p.value.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  p.via.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (p.value[root] != -1) continue;
    p.value[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId a = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(a)) {
        const Edge& ed = g.edge(e);
        VertexId b = ed.other(a);
        const int want = p.value[a] ^ (label(e) ? 1 : 0);
        if (p.value[b] == -1) {
          p.value[b] = want;
          p.via[b] = e;
          queue.push_back(b);
        } else if (p.value[b] != want && p.conflict == -1) {
          p.conflict = e;
        }
      }
    }
  }
  return p;
}

std::vector<VertexId> tree_path_to_root(const SignedGraph& g, const Potential& p, VertexId v,
                                        std::vector<EdgeId>* edges) {
  std::vector<VertexId> verts{v};
  while (p.via[v] != -1) {
    edges->push_back(p.via[v]);
    v = g.edge(p.via[v]).other(v);
    verts.push_back(v);
  }
  return verts;
}

// Fundamental cycle of a non-tree edge with respect to the BFS forest.
std::vector<EdgeId> fundamental_cycle(const SignedGraph& g, const Potential& p, EdgeId e) {
  const Edge& ed = g.edge(e);
  if (ed.is_loop()) return {e};
  std::vector<EdgeId> up_u, up_v;
  auto path_u = tree_path_to_root(g, p, ed.u, &up_u);
  auto path_v = tree_path_to_root(g, p, ed.v, &up_v);
  // Trim the common suffix above the lowest common ancestor.
  while (!up_u.empty() && !up_v.empty() && up_u.back() == up_v.back()) {
    up_u.pop_back();
    up_v.pop_back();
  }
  std::vector<EdgeId> cycle = up_u;
  cycle.insert(cycle.end(), up_v.rbegin(), up_v.rend());
  cycle.push_back(e);
  return cycle;
}

std::vector<VertexId> ones(const std::vector<int>& value) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(value.size()); ++v) {
    if (value[v] == 1) out.push_back(v);
  }
  return out;
}

std::vector<char> membership(int size, std::span<const VertexId> x) {
  std::vector<char> in(static_cast<std::size_t>(size), 0);
  for (VertexId v : x) {
    if (v < 0 || v >= size) throw PreconditionError("vertex out of range in switching set");
    in[v] = 1;
  }
  return in;
}

}  // namespace

SignedGraph switch_signs(const SignedGraph& g, std::span<const VertexId> x) {
  auto in = membership(g.num_vertices(), x);
  SignedGraph out = g;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (in[ed.u] != in[ed.v]) out.set_sign(e, !ed.odd);
  }
  return out;
}

std::vector<EdgeId> switched_signature(const SignedGraph& g, std::span<const VertexId> x) {
  return switch_signs(g, x).signature();
}

EquivalenceResult signatures_equivalent(const SignedGraph& g, std::span<const EdgeId> sigma2) {
  std::vector<char> other(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId e : sigma2) {
    if (e < 0 || e >= g.num_edges()) throw PreconditionError("edge id out of range in signature");
    other[e] = 1;
  }
  auto diff = [&](EdgeId e) { return g.is_odd(e) != static_cast<bool>(other[e]); };
  Potential p = solve_potential(g, diff);
  EquivalenceResult r;
  if (p.conflict == -1) {
    r.equivalent = true;
    r.switching = ones(p.value);
  } else {
    r.refuting_cycle = fundamental_cycle(g, p, p.conflict);
  }
  return r;
}

bool is_cycle(const SignedGraph& g, std::span<const EdgeId> edges) {
  if (edges.size() < 2) return false;
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId e : sorted) {
    if (e < 0 || e >= g.num_edges()) return false;
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) return false;
    ++deg[ed.u];
    ++deg[ed.v];
  }
  int touched = 0;
  for (int d : deg) {
    if (d != 0 && d != 2) return false;
    if (d == 2) ++touched;
  }
  // Degree-2 everywhere; connected iff vertex count equals edge count and a
  // single walk covers everything.
  if (touched != static_cast<int>(sorted.size())) return false;
  std::vector<char> used(sorted.size(), 0);
  VertexId start = g.edge(sorted[0]).u;
  VertexId cur = start;
  std::size_t steps = 0;
  do {
    bool moved = false;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (used[i]) continue;
      const Edge& ed = g.edge(sorted[i]);
      if (ed.u == cur || ed.v == cur) {
        used[i] = 1;
        cur = ed.other(cur);
        moved = true;
        ++steps;
        break;
      }
    }
    if (!moved) break;
  } while (cur != start);
  return cur == start && steps == sorted.size();
}

std::vector<EdgeId> order_cycle(const SignedGraph& g, std::span<const EdgeId> edges) {
  if (!is_cycle(g, edges)) throw PreconditionError("edge set is not a cycle");
  std::vector<EdgeId> rest(edges.begin(), edges.end());
  std::sort(rest.begin(), rest.end());
  const EdgeId first = rest.front();
  rest.erase(rest.begin());
  const Edge& f = g.edge(first);
  // Candidate continuations from either endpoint; pick the direction whose
  // next edge id is smaller.
  auto next_from = [&](VertexId at) {
    for (EdgeId e : rest) {
      if (g.edge(e).u == at || g.edge(e).v == at) return e;
    }
    return EdgeId{-1};
  };
  EdgeId via_v = next_from(f.v);
  EdgeId via_u = next_from(f.u);
  VertexId cur = via_v <= via_u ? f.v : f.u;
  std::vector<EdgeId> out{first};
  while (!rest.empty()) {
    auto it = std::find_if(rest.begin(), rest.end(), [&](EdgeId e) {
      return g.edge(e).u == cur || g.edge(e).v == cur;
    });
    out.push_back(*it);
    cur = g.edge(*it).other(cur);
    rest.erase(it);
  }
  return out;
}

Parity cycle_parity(const SignedGraph& g, std::span<const EdgeId> cycle) {
  if (!is_cycle(g, cycle)) throw PreconditionError("edge set is not a cycle");
  return parity_of(g, cycle) ? Parity::Odd : Parity::Even;
}

BipartiteResult is_bipartite_signed(const SignedGraph& g) {
  Potential p = solve_potential(g, [&](EdgeId e) { return g.is_odd(e); });
  BipartiteResult r;
  if (p.conflict == -1) {
    r.bipartite = true;
    r.switching = ones(p.value);
  } else {
    r.odd_cycle = fundamental_cycle(g, p, p.conflict);
  }
  return r;
}

std::vector<EdgeId> disjoint_signature(const SignedGraph& g, std::span<const EdgeId> forest) {
  std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<char> in_tree(static_cast<std::size_t>(g.num_edges()), 0);
  auto try_add = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    int a = find(ed.u), b = find(ed.v);
    if (a == b) return false;
    parent[a] = b;
    in_tree[e] = 1;
    return true;
  };
  for (EdgeId e : forest) {
    if (e < 0 || e >= g.num_edges()) throw PreconditionError("edge id out of range");
    if (in_tree[e] || !try_add(e)) throw PreconditionError("edge set contains a cycle");
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!in_tree[e]) try_add(e);
  }
  // Potentials along the spanning forest make every forest edge even.
  std::vector<int> value(static_cast<std::size_t>(g.num_vertices()), -1);
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (value[root] != -1) continue;
    value[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId a = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(a)) {
        if (!in_tree[e]) continue;
        VertexId b = g.edge(e).other(a);
        if (value[b] != -1) continue;
        value[b] = value[a] ^ (g.is_odd(e) ? 1 : 0);
        queue.push_back(b);
      }
    }
  }
  return switched_signature(g, ones(value));
}

}  // namespace ecd
