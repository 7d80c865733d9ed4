#include "ecd/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "ecd/errors.hpp"

namespace ecd {
namespace {

// Components over the vertices touched by `edges`.
std::vector<std::vector<EdgeId>> components_of(const SignedGraph& g,
                                               std::span<const EdgeId> edges) {
  std::vector<std::vector<EdgeId>> adj(static_cast<std::size_t>(g.num_vertices()));
  for (EdgeId e : edges) {
    adj[g.edge(e).u].push_back(e);
    adj[g.edge(e).v].push_back(e);
  }
  std::vector<char> seen_edge(static_cast<std::size_t>(g.num_edges()), 0);
  std::vector<char> seen_vertex(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<EdgeId>> out;
  for (EdgeId start : sorted) {
    if (seen_edge[start]) continue;
    std::vector<EdgeId> comp;
    std::deque<VertexId> queue{g.edge(start).u};
    seen_vertex[g.edge(start).u] = 1;
    while (!queue.empty()) {
      VertexId a = queue.front();
      queue.pop_front();
      for (EdgeId e : adj[a]) {
        if (!seen_edge[e]) {
          seen_edge[e] = 1;
          comp.push_back(e);
        }
        VertexId b = g.edge(e).other(a);
        if (!seen_vertex[b]) {
          seen_vertex[b] = 1;
          queue.push_back(b);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

bool edges_connected(const SignedGraph& g, std::span<const EdgeId> edges) {
  return components_of(g, edges).size() <= 1;
}

bool is_connected(const SignedGraph& g) { return edge_components(g).size() <= 1; }

std::vector<std::vector<EdgeId>> edge_components(const SignedGraph& g) {
  auto all = all_edges(g);
  return components_of(g, all);
}

namespace {

struct BlockSearch {
  const SignedGraph& g;
  std::vector<int> disc, low;
  std::vector<EdgeId> stack;
  std::vector<std::vector<EdgeId>> found;
  std::vector<char> is_cut;
  int timer = 0;

  explicit BlockSearch(const SignedGraph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.num_vertices()), -1),
        low(static_cast<std::size_t>(graph.num_vertices()), 0),
        is_cut(static_cast<std::size_t>(graph.num_vertices()), 0) {}

  void run() {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (g.edge(e).is_loop()) found.push_back({e});
    }
    for (VertexId r = 0; r < g.num_vertices(); ++r) {
      if (disc[r] == -1 && !g.incident(r).empty()) dfs(r, -1, true);
    }
    for (auto& b : found) std::sort(b.begin(), b.end());
    std::sort(found.begin(), found.end());
  }

  void dfs(VertexId v, EdgeId via, bool root) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (EdgeId e : g.incident(v)) {
      if (e == via) continue;
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      VertexId w = ed.other(v);
      if (disc[w] == -1) {
        stack.push_back(e);
        ++children;
        dfs(w, e, false);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (!root) is_cut[v] = 1;
          std::vector<EdgeId> block;
          while (true) {
            EdgeId top = stack.back();
            stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          found.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (root && children > 1) is_cut[v] = 1;
  }
};

}  // namespace

std::vector<std::vector<EdgeId>> blocks(const SignedGraph& g) {
  BlockSearch s(g);
  s.run();
  return s.found;
}

std::vector<VertexId> cut_vertices(const SignedGraph& g) {
  BlockSearch s(g);
  s.run();
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (s.is_cut[v]) out.push_back(v);
  }
  return out;
}

bool is_two_connected(const SignedGraph& g) {
  if (g.num_edges() == 0) return true;
  if (!is_connected(g)) return false;
  if (g.num_support_vertices() < 2) return false;
  return cut_vertices(g).empty();
}

bool is_eulerian(const SignedGraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return true;
}

ValidityReport validate_instance(const SignedGraph& g) {
  ValidityReport r;
  r.loopless = std::none_of(g.edges().begin(), g.edges().end(),
                            [](const Edge& e) { return e.is_loop(); });
  r.connected = is_connected(g);
  r.two_connected = is_two_connected(g);
  r.eulerian = is_eulerian(g);
  r.signature_even = g.signature_size() % 2 == 0;
  r.admissible = r.loopless && r.two_connected && r.eulerian && r.signature_even;
  return r;
}

int degree_within(const SignedGraph& g, std::span<const EdgeId> edges, VertexId v) {
  int d = 0;
  for (EdgeId e : edges) {
    if (g.edge(e).u == v) ++d;
    if (g.edge(e).v == v) ++d;
  }
  return d;
}

Separation Separation::swapped() const {
  Separation s = *this;
  std::swap(s.left, s.right);
  // Parity is unchanged: deg_left(v) + deg_right(v) is even on Eulerian graphs.
  return s;
}

Separation make_separation(const SignedGraph& g, std::span<const EdgeId> left) {
  Separation s;
  s.left.assign(left.begin(), left.end());
  std::sort(s.left.begin(), s.left.end());
  s.left.erase(std::unique(s.left.begin(), s.left.end()), s.left.end());
  s.right = complement_edges(g, s.left);
  if (s.left.empty() || s.right.empty()) throw PreconditionError("separation side is empty");
  auto vl = vertices_of(g, s.left);
  auto vr = vertices_of(g, s.right);
  std::set_intersection(vl.begin(), vl.end(), vr.begin(), vr.end(),
                        std::back_inserter(s.boundary));
  s.order = static_cast<int>(s.boundary.size());
  s.proper = vl.size() > s.boundary.size() && vr.size() > s.boundary.size();
  if (s.order == 2 && is_eulerian(g)) {
    s.parity = degree_within(g, s.left, s.boundary[0]) % 2 == 1 ? SeparationParity::Odd
                                                                 : SeparationParity::Even;
  }
  return s;
}

std::vector<Separation> enumerate_separations(const SignedGraph& g, int k, bool require_proper) {
  std::vector<Separation> out;
  const auto support = g.support();
  const int ns = static_cast<int>(support.size());
  std::set<std::vector<EdgeId>> seen;

  std::vector<int> pick;
  std::function<void(int)> choose = [&](int from) {
    if (!pick.empty()) {
      std::vector<char> in_s(static_cast<std::size_t>(g.num_vertices()), 0);
      std::vector<VertexId> boundary;
      for (int i : pick) {
        in_s[support[i]] = 1;
        boundary.push_back(support[i]);
      }
      // Pieces: components of G - S (with their attaching edges) and single
      // edges with both ends in S.
      std::vector<std::vector<EdgeId>> pieces;
      std::vector<EdgeId> outside;
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (in_s[ed.u] && in_s[ed.v]) {
          pieces.push_back({e});
        } else {
          outside.push_back(e);
        }
      }
      // Group outside edges by the component of their non-boundary ends.
      std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()), -1);
      int ncomp = 0;
      for (VertexId v : support) {
        if (in_s[v] || comp[v] != -1) continue;
        std::deque<VertexId> queue{v};
        comp[v] = ncomp;
        while (!queue.empty()) {
          VertexId a = queue.front();
          queue.pop_front();
          for (EdgeId e : g.incident(a)) {
            VertexId b = g.edge(e).other(a);
            if (in_s[b] || comp[b] != -1) continue;
            comp[b] = ncomp;
            queue.push_back(b);
          }
        }
        ++ncomp;
      }
      std::vector<std::vector<EdgeId>> comp_edges(static_cast<std::size_t>(ncomp));
      for (EdgeId e : outside) {
        const Edge& ed = g.edge(e);
        VertexId inner = in_s[ed.u] ? ed.v : ed.u;
        comp_edges[comp[inner]].push_back(e);
      }
      for (auto& c : comp_edges) pieces.push_back(std::move(c));
      const int np = static_cast<int>(pieces.size());
      if (np > 22) throw BudgetExceeded("separation enumeration: too many pieces");
      if (np >= 2) {
        // Fix piece 0 on the left to enumerate unordered pairs only.
        for (unsigned long mask = 1; mask < (1UL << np); mask += 2) {
          if (mask == (1UL << np) - 1) continue;
          std::vector<EdgeId> left;
          for (int i = 0; i < np; ++i) {
            if (mask & (1UL << i)) left.insert(left.end(), pieces[i].begin(), pieces[i].end());
          }
          std::sort(left.begin(), left.end());
          Separation s = make_separation(g, left);
          if (s.boundary != boundary) continue;
          if (require_proper && !s.proper) continue;
          if (s.left.front() > s.right.front()) s = s.swapped();
          if (!seen.insert(s.left).second) continue;
          out.push_back(std::move(s));
        }
      }
    }
    if (static_cast<int>(pick.size()) == k) return;
    for (int i = from; i < ns; ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  std::sort(out.begin(), out.end(), [](const Separation& a, const Separation& b) {
    if (a.boundary != b.boundary) return a.boundary < b.boundary;
    return a.left < b.left;
  });
  return out;
}

}  // namespace ecd
