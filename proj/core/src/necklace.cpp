#include "ecd/necklace.hpp"

#include <algorithm>
#include <deque>

#include "ecd/errors.hpp"

namespace ecd {
namespace {

std::vector<VertexId> shared_vertices(const SignedGraph& g, std::span<const EdgeId> a,
                                      std::span<const EdgeId> b) {
  auto va = vertices_of(g, a);
  auto vb = vertices_of(g, b);
  std::vector<VertexId> out;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out));
  return out;
}

bool eulerian_within(const SignedGraph& g, std::span<const EdgeId> edges) {
  for (VertexId v : vertices_of(g, edges)) {
    if (degree_within(g, edges, v) % 2 != 0) return false;
  }
  return true;
}

bool two_connected_within(const SignedGraph& g, std::span<const EdgeId> edges) {
  return is_two_connected(edge_subgraph(g, edges).graph);
}

// Splits bead edges at cut vertex v: the edges reachable from `a` without
// passing through v, and the rest.
std::pair<std::vector<EdgeId>, std::vector<EdgeId>> split_at(const SignedGraph& g,
                                                             std::span<const EdgeId> bead,
                                                             VertexId v, VertexId a) {
  std::vector<std::vector<EdgeId>> adj(static_cast<std::size_t>(g.num_vertices()));
  for (EdgeId e : bead) {
    adj[g.edge(e).u].push_back(e);
    adj[g.edge(e).v].push_back(e);
  }
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<char> taken(static_cast<std::size_t>(g.num_edges()), 0);
  std::deque<VertexId> queue{a};
  seen[a] = 1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : adj[x]) {
      taken[e] = 1;
      VertexId y = g.edge(e).other(x);
      if (y == v || seen[y]) continue;
      seen[y] = 1;
      queue.push_back(y);
    }
  }
  std::pair<std::vector<EdgeId>, std::vector<EdgeId>> out;
  for (EdgeId e : bead) (taken[e] ? out.first : out.second).push_back(e);
  return out;
}

}  // namespace

bool is_odd_digon(const SignedGraph& g, std::span<const EdgeId> edges) {
  if (edges.size() != 2) return false;
  const Edge& a = g.edge(edges[0]);
  const Edge& b = g.edge(edges[1]);
  if (a.is_loop()) return false;
  const bool same_pair = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
  return same_pair && a.odd != b.odd;
}

bool is_signed_subgraph_of_odd_digon(const SignedGraph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) return true;
  if (edges.size() == 1) return !g.edge(edges[0]).is_loop();
  return is_odd_digon(g, edges);
}

Necklace necklace(const SignedGraph& g, const Separation& sep) {
  const auto report = validate_instance(g);
  if (!report.loopless || !report.two_connected || !report.eulerian) {
    throw PreconditionError("necklace requires a 2-connected loopless Eulerian graph");
  }
  if (sep.order != 2 || sep.parity != SeparationParity::Even) {
    throw PreconditionError("necklace requires an even 2-separation");
  }
  if (!edges_connected(g, sep.left) || !edges_connected(g, sep.right)) {
    throw PreconditionError("necklace requires connected sides");
  }
  Necklace n{{sep.left, sep.right}, 1};
  bool changed = true;
  while (changed) {
    changed = false;
    const int count = static_cast<int>(n.beads.size());
    for (int i = 0; i < count; ++i) {
      const auto& bead = n.beads[i];
      if (vertices_of(g, bead).size() < 3) continue;
      EdgeSubgraph sub = edge_subgraph(g, bead);
      auto cuts = cut_vertices(sub.graph);
      if (cuts.empty()) continue;
      const VertexId v = cuts.front();
      VertexId a, b;
      if (count == 2) {
        auto shared = shared_vertices(g, n.beads[0], n.beads[1]);
        a = shared[0];
        b = shared[1];
      } else {
        a = shared_vertices(g, n.beads[(i + count - 1) % count], bead).front();
        b = shared_vertices(g, bead, n.beads[(i + 1) % count]).front();
      }
      if (a == v || b == v) throw InternalError("necklace attachment at a bead cut vertex");
      auto [f1, f2] = split_at(g, bead, v, a);
      auto vf1 = vertices_of(g, f1);
      if (std::binary_search(vf1.begin(), vf1.end(), b)) {
        throw InternalError("necklace bead split leaves both attachments on one side");
      }
      n.beads[i] = std::move(f1);
      n.beads.insert(n.beads.begin() + i + 1, std::move(f2));
      if (i < n.split_index) ++n.split_index;
      changed = true;
      break;
    }
  }
  return n;
}

std::string check_necklace(const SignedGraph& g, const Separation& sep, const Necklace& n) {
  const int count = static_cast<int>(n.beads.size());
  if (count < 2) return "fewer than two beads";
  std::vector<int> owner(static_cast<std::size_t>(g.num_edges()), -1);
  for (int i = 0; i < count; ++i) {
    for (EdgeId e : n.beads[i]) {
      if (e < 0 || e >= g.num_edges()) return "(i) bead edge out of range";
      if (owner[e] != -1) return "(i) beads overlap";
      owner[e] = i;
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) return "(i) beads miss an edge";
  for (int i = 0; i < count; ++i) {
    const auto& bead = n.beads[i];
    if (bead.empty() || !edges_connected(g, bead)) return "bead is not connected";
    if (!eulerian_within(g, bead)) return "bead is not Eulerian";
    if (vertices_of(g, bead).size() != 2 && !two_connected_within(g, bead)) {
      return "(ii) bead is neither 2-connected nor two-vertex";
    }
  }
  if (count == 2) {
    if (shared_vertices(g, n.beads[0], n.beads[1]).size() != 2) return "(iii) not a 2-separation";
  } else {
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) {
        const bool adjacent = j - i == 1 || (i == 0 && j == count - 1);
        const std::size_t want = adjacent ? 1 : 0;
        if (shared_vertices(g, n.beads[i], n.beads[j]).size() != want) {
          return "(iv) beads " + std::to_string(i) + " and " + std::to_string(j) +
                 " meet wrongly";
        }
      }
    }
  }
  if (n.split_index < 1 || n.split_index >= count) return "(v) split index out of range";
  std::vector<EdgeId> prefix;
  for (int i = 0; i < n.split_index; ++i) prefix.insert(prefix.end(), n.beads[i].begin(), n.beads[i].end());
  std::sort(prefix.begin(), prefix.end());
  std::vector<EdgeId> left = sep.left;
  std::sort(left.begin(), left.end());
  if (prefix != left) return "(v) prefix of beads differs from the separation side";
  return {};
}

}  // namespace ecd
