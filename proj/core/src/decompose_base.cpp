#include <algorithm>
#include <deque>
#include <map>

#include "decompose_internal.hpp"
#include "ecd/decompose.hpp"
#include "ecd/errors.hpp"
#include "ecd/paths.hpp"
#include "ecd/recognition.hpp"
#include "ecd/signing.hpp"
#include "ecd/surgery.hpp"

namespace ecd {

std::vector<std::vector<EdgeId>> peel_cycles(const SignedGraph& g, std::span<const EdgeId> edges) {
  std::vector<char> alive(static_cast<std::size_t>(g.num_edges()), 0);
  std::size_t remaining = 0;
  for (EdgeId e : edges) {
    if (g.edge(e).is_loop()) throw PreconditionError("cannot peel a loop");
    if (!alive[e]) ++remaining;
    alive[e] = 1;
  }
  std::vector<int> pos(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t scan = 0;
  while (remaining > 0) {
    while (!alive[sorted[scan]]) ++scan;
    std::vector<VertexId> path_v{g.edge(sorted[scan]).u};
    std::vector<EdgeId> path_e;
    pos[path_v[0]] = 0;
    while (!path_v.empty()) {
      const VertexId at = path_v.back();
      EdgeId next = -1;
      for (EdgeId e : g.incident(at)) {
        if (alive[e]) {
          next = e;
          break;
        }
      }
      if (next == -1) {
        if (path_v.size() != 1) throw PreconditionError("peel_cycles needs an Eulerian edge set");
        pos[at] = -1;
        path_v.clear();
        break;
      }
      alive[next] = 0;
      --remaining;
      const VertexId to = g.edge(next).other(at);
      if (pos[to] == -1) {
        pos[to] = static_cast<int>(path_v.size());
        path_v.push_back(to);
        path_e.push_back(next);
        continue;
      }
      // Closed a cycle at `to`.
      const int start = pos[to];
      std::vector<EdgeId> cycle(path_e.begin() + start, path_e.end());
      cycle.push_back(next);
      out.push_back(std::move(cycle));
      path_e.resize(static_cast<std::size_t>(start));
      for (std::size_t i = static_cast<std::size_t>(start) + 1; i < path_v.size(); ++i) pos[path_v[i]] = -1;
      path_v.resize(static_cast<std::size_t>(start) + 1);
      if (path_v.size() == 1 && path_e.empty()) {
        // Back at the walk's start: continue from here if edges remain.
        bool more = false;
        for (EdgeId e : g.incident(to)) more = more || alive[e];
        if (!more) {
          pos[to] = -1;
          path_v.clear();
        }
      }
    }
  }
  return out;
}

CycleDecomposition decompose_eulerian_bipartite(const SignedGraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) throw PreconditionError("decompose_eulerian_bipartite: graph has a loop");
  }
  if (!is_eulerian(g)) throw PreconditionError("decompose_eulerian_bipartite: graph is not Eulerian");
  if (!is_bipartite_signed(g).bipartite) {
    throw PreconditionError("decompose_eulerian_bipartite: graph has an odd cycle");
  }
  return normalize_decomposition(g, peel_cycles(g, all_edges(g)));
}

CycleDecomposition decompose_almost_bipartite(const SignedGraph& g) {
  if (!validate_instance(g).admissible) {
    throw PreconditionError("decompose_almost_bipartite: instance is not admissible");
  }
  const auto apex = almost_bipartite_witness(g);
  if (!apex) throw PreconditionError("decompose_almost_bipartite: graph is not almost bipartite");
  const VertexId v = *apex;
  const Surgery sub = subdivide_even(g);
  const SignedGraph& s = sub.graph;
  std::vector<char> alive(static_cast<std::size_t>(s.num_edges()), 1);
  std::vector<std::vector<EdgeId>> cycles;

  // At most two parallel edges per pair: strip 2-cycles beyond that.
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> classes;
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    classes[std::minmax(s.edge(e).u, s.edge(e).v)].push_back(e);
  }
  for (auto& [pair, list] : classes) {
    while (list.size() > 2) {
      cycles.push_back({list[0], list[1]});
      alive[list[0]] = alive[list[1]] = 0;
      list.erase(list.begin(), list.begin() + 2);
    }
  }

  // Bipartition of s - v.
  std::vector<int> side(static_cast<std::size_t>(s.num_vertices()), -1);
  for (VertexId root = 0; root < s.num_vertices(); ++root) {
    if (root == v || side[root] != -1 || s.degree(root) == 0) continue;
    side[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId a = queue.front();
      queue.pop_front();
      for (EdgeId e : s.incident(a)) {
        if (!alive[e]) continue;
        VertexId b = s.edge(e).other(a);
        if (b == v) continue;
        if (side[b] == -1) {
          side[b] = side[a] ^ 1;
          queue.push_back(b);
        } else if (side[b] == side[a]) {
          throw InternalError("almost bipartite: apex deletion left an odd cycle");
        }
      }
    }
  }
  std::map<VertexId, std::vector<EdgeId>> to_apex;
  for (EdgeId e : s.incident(v)) {
    if (!alive[e]) continue;
    const VertexId x = s.edge(e).other(v);
    if (side[x] == 0) to_apex[x].push_back(e);
  }
  std::vector<VertexId> x1;
  for (const auto& [x, list] : to_apex) {
    if (list.size() == 1) {
      x1.push_back(x);
    } else {
      cycles.push_back(list);
      for (EdgeId e : list) alive[e] = 0;
    }
  }
  std::vector<EdgeId> rest_of_g;
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    if (alive[e] && s.edge(e).u != v && s.edge(e).v != v) rest_of_g.push_back(e);
  }
  const EdgeSubgraph minus_apex = edge_subgraph(s, rest_of_g);
  const PathSystem ps = pair_paths(minus_apex.graph, x1);
  for (const Path& p : ps.paths) {
    std::vector<EdgeId> cycle;
    for (EdgeId e : p.edges) cycle.push_back(minus_apex.parent[e]);
    cycle.push_back(to_apex.at(p.from).front());
    cycle.push_back(to_apex.at(p.to).front());
    for (EdgeId e : cycle) alive[e] = 0;
    cycles.push_back(std::move(cycle));
  }
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    if (alive[e]) rest.push_back(e);
  }
  for (auto& c : peel_cycles(s, rest)) cycles.push_back(std::move(c));

  std::vector<std::vector<EdgeId>> lifted;
  for (const auto& c : cycles) lifted.push_back(sub.map.lift(c));
  return normalize_decomposition(g, std::move(lifted));
}

CycleDecomposition decompose_planar_two_odd(const SignedGraph& g, const Embedding& emb) {
  if (!validate_instance(g).admissible) {
    throw PreconditionError("decompose_planar_two_odd: instance is not admissible");
  }
  const auto faces = faces_and_parities(g, emb);
  if (!is_planar_embedding(g, emb)) throw PreconditionError("decompose_planar_two_odd: embedding is not planar");
  if (count_odd_faces(faces) != 2) {
    throw PreconditionError("decompose_planar_two_odd: embedding must have exactly two odd faces");
  }
  std::vector<int> face_of(static_cast<std::size_t>(2 * g.num_edges()), -1);
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    for (int d : faces[f].darts) face_of[d] = f;
  }
  std::vector<int> colour(faces.size(), -1);
  std::vector<std::vector<int>> dual(faces.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int a = face_of[dart_of(e, 0)], b = face_of[dart_of(e, 1)];
    if (a == b) throw InternalError("decompose_planar_two_odd: an edge borders a single face");
    dual[a].push_back(b);
    dual[b].push_back(a);
  }
  for (int root = 0; root < static_cast<int>(faces.size()); ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b : dual[a]) {
        if (colour[b] == -1) {
          colour[b] = colour[a] ^ 1;
          queue.push_back(b);
        } else if (colour[b] == colour[a]) {
          throw InternalError("decompose_planar_two_odd: dual graph is not bipartite");
        }
      }
    }
  }
  int odd_class = -1;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    if (!faces[f].odd) continue;
    if (odd_class != -1 && odd_class != colour[f]) {
      throw InternalError("decompose_planar_two_odd: odd faces in different colour classes");
    }
    odd_class = colour[f];
  }
  std::vector<std::vector<EdgeId>> cycles;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    if (colour[f] == odd_class) continue;
    if (!is_cycle(g, faces[f].edges)) throw InternalError("decompose_planar_two_odd: face is not a cycle");
    cycles.push_back(faces[f].edges);
  }
  return normalize_decomposition(g, std::move(cycles));
}

}  // namespace ecd
