#include "ecd/paths.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ecd/connectivity.hpp"
#include "ecd/errors.hpp"

namespace ecd {
namespace {

// Unit-capacity flow network over split vertices: v_in = 2v, v_out = 2v + 1.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  int add_arc(int from, int to, int cap, EdgeId edge = -1) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, cap, 0, edge});
    arcs_.push_back({from, 0, 0, -1});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  int max_flow(int s, int t) {
    int total = 0;
    while (true) {
      std::vector<int> via(adj_.size(), -1);
      std::deque<int> queue{s};
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        int a = queue.front();
        queue.pop_front();
        for (int id : adj_[a]) {
          const Arc& arc = arcs_[id];
          if (arc.cap - arc.flow <= 0 || via[arc.to] != -1) continue;
          via[arc.to] = id;
          queue.push_back(arc.to);
        }
      }
      if (via[t] == -1) return total;
      for (int x = t; x != s;) {
        const int id = via[x];
        arcs_[id].flow += 1;
        arcs_[id ^ 1].flow -= 1;
        x = arcs_[id ^ 1].to;
      }
      ++total;
    }
  }

  struct Arc {
    int to;
    int cap;
    int flow;
    EdgeId edge;
  };

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
};

struct FlowSpec {
  std::vector<std::pair<VertexId, int>> supply;  // source vertex, units
  std::vector<VertexId> sinks;
  std::vector<int> vertex_cap;
};

std::optional<std::vector<Path>> route(const SignedGraph& g, std::span<const EdgeId> allowed,
                                       const FlowSpec& spec, int wanted) {
  const int n = g.num_vertices();
  const int s = 2 * n, t = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (VertexId v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, spec.vertex_cap[v]);
  std::vector<std::pair<int, int>> edge_arcs;
  for (EdgeId e : allowed) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    const int a = net.add_arc(2 * ed.u + 1, 2 * ed.v, 1, e);
    const int b = net.add_arc(2 * ed.v + 1, 2 * ed.u, 1, e);
    edge_arcs.emplace_back(a, b);
  }
  for (auto [v, units] : spec.supply) net.add_arc(s, 2 * v, units);
  std::vector<char> is_sink(static_cast<std::size_t>(n), 0);
  for (VertexId v : spec.sinks) {
    is_sink[v] = 1;
    net.add_arc(2 * v + 1, t, 1);
  }
  if (net.max_flow(s, t) < wanted) return std::nullopt;
  for (auto [a, b] : edge_arcs) {
    if (net.arcs_[a].flow > 0 && net.arcs_[b].flow > 0) {
      net.arcs_[a].flow = net.arcs_[b].flow = 0;
      net.arcs_[a ^ 1].flow = net.arcs_[b ^ 1].flow = 0;
    }
  }
  std::vector<Path> out;
  for (auto [src, units] : spec.supply) {
    for (int u = 0; u < units; ++u) {
      Path p{src, -1, {}};
      VertexId cur = src;
      while (true) {
        if (is_sink[cur]) {
          // Prefer ending here when this vertex drains to the sink.
          bool drains = false;
          for (int id : net.adj_[2 * cur + 1]) {
            auto& arc = net.arcs_[id];
            if (arc.to == t && arc.flow > 0) {
              arc.flow -= 1;
              drains = true;
              break;
            }
          }
          if (drains) break;
        }
        bool moved = false;
        for (int id : net.adj_[2 * cur + 1]) {
          auto& arc = net.arcs_[id];
          if (arc.edge == -1 || arc.flow <= 0 || arc.to % 2 != 0) continue;
          arc.flow -= 1;
          p.edges.push_back(arc.edge);
          cur = arc.to / 2;
          moved = true;
          break;
        }
        if (!moved) throw InternalError("flow decomposition got stuck");
      }
      p.to = cur;
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

bool is_path(const SignedGraph& g, VertexId from, VertexId to, std::span<const EdgeId> edges) {
  std::set<VertexId> seen{from};
  std::set<EdgeId> used;
  VertexId cur = from;
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    const Edge& ed = g.edge(e);
    if (ed.is_loop() || (ed.u != cur && ed.v != cur)) return false;
    if (!used.insert(e).second) return false;
    cur = ed.other(cur);
    if (!seen.insert(cur).second) return false;
  }
  return cur == to;
}

PathSystem pair_paths(const SignedGraph& g, std::span<const VertexId> terminals) {
  if (terminals.size() % 2 != 0) throw PreconditionError("pair_paths needs an even number of terminals");
  if (!is_connected(g)) throw PreconditionError("pair_paths needs a connected graph");
  std::vector<char> is_terminal(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : terminals) {
    if (v < 0 || v >= g.num_vertices()) throw PreconditionError("terminal out of range");
    if (is_terminal[v]) throw PreconditionError("terminal listed twice");
    if (g.degree(v) == 0) throw PreconditionError("terminal has no incident edge");
    is_terminal[v] = 1;
  }
  PathSystem out;
  if (terminals.empty()) return out;

  // BFS spanning tree.
  const VertexId root = g.support().front();
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> tree(static_cast<std::size_t>(g.num_vertices()));
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::deque<VertexId> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    VertexId a = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(a)) {
      VertexId b = g.edge(e).other(a);
      if (seen[b]) continue;
      seen[b] = 1;
      tree[a].push_back({b, e});
      tree[b].push_back({a, e});
      queue.push_back(b);
    }
  }
  // partial[v]: a path from a still-unmatched terminal to v, as edges from
  // the terminal end.
  std::vector<std::optional<Path>> partial(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId v : terminals) partial[v] = Path{v, v, {}};
  std::vector<int> degree(tree.size());
  std::set<VertexId> leaves;
  std::vector<char> gone(tree.size(), 0);
  for (VertexId v = 0; v < static_cast<VertexId>(tree.size()); ++v) {
    degree[v] = static_cast<int>(tree[v].size());
    if (degree[v] == 1) leaves.insert(v);
  }
  while (!leaves.empty()) {
    const VertexId l = *leaves.begin();
    leaves.erase(leaves.begin());
    if (degree[l] != 1) continue;
    VertexId w = -1;
    EdgeId e = -1;
    for (auto [x, id] : tree[l]) {
      if (!gone[x]) {
        w = x;
        e = id;
      }
    }
    gone[l] = 1;
    if (partial[l]) {
      Path p = std::move(*partial[l]);
      partial[l].reset();
      p.edges.push_back(e);
      p.to = w;
      if (partial[w]) {
        const Path& q = *partial[w];
        p.edges.insert(p.edges.end(), q.edges.rbegin(), q.edges.rend());
        p.to = q.from;
        partial[w].reset();
        out.paths.push_back(std::move(p));
      } else {
        partial[w] = std::move(p);
      }
    }
    if (--degree[w] == 1) leaves.insert(w);
  }
  for (const auto& p : partial) {
    if (p) throw InternalError("pair_paths left a terminal unmatched");
  }
  return out;
}

std::string check_path_system(const SignedGraph& g, std::span<const VertexId> terminals,
                              const PathSystem& ps) {
  std::multiset<VertexId> want(terminals.begin(), terminals.end());
  std::multiset<VertexId> ends;
  std::set<EdgeId> used;
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    const Path& p = ps.paths[i];
    if (p.edges.empty()) return "path " + std::to_string(i) + " is empty";
    if (!is_path(g, p.from, p.to, p.edges)) return "path " + std::to_string(i) + " is not a path";
    for (EdgeId e : p.edges) {
      if (!used.insert(e).second) return "paths share edge " + std::to_string(e);
    }
    ends.insert(p.from);
    ends.insert(p.to);
  }
  if (ends != want) return "path ends differ from the terminals";
  return {};
}

std::optional<std::vector<Path>> fan_paths(const SignedGraph& g, std::span<const EdgeId> allowed,
                                           VertexId center, std::span<const VertexId> targets) {
  FlowSpec spec;
  spec.vertex_cap.assign(static_cast<std::size_t>(g.num_vertices()), 1);
  const int k = static_cast<int>(targets.size());
  spec.vertex_cap[center] = k;
  spec.supply.push_back({center, k});
  spec.sinks.assign(targets.begin(), targets.end());
  auto paths = route(g, allowed, spec, k);
  if (!paths) return std::nullopt;
  // Order to match `targets`.
  std::vector<Path> ordered;
  for (VertexId t : targets) {
    auto it = std::find_if(paths->begin(), paths->end(), [&](const Path& p) { return p.to == t; });
    if (it == paths->end()) return std::nullopt;
    ordered.push_back(*it);
  }
  return ordered;
}

std::optional<std::vector<Path>> disjoint_paths(const SignedGraph& g,
                                                std::span<const EdgeId> allowed,
                                                std::span<const VertexId> sources,
                                                std::span<const VertexId> sinks) {
  FlowSpec spec;
  spec.vertex_cap.assign(static_cast<std::size_t>(g.num_vertices()), 1);
  for (VertexId v : sources) spec.supply.push_back({v, 1});
  spec.sinks.assign(sinks.begin(), sinks.end());
  return route(g, allowed, spec, static_cast<int>(sources.size()));
}

std::optional<Path> shortest_path(const SignedGraph& g, std::span<const EdgeId> allowed,
                                  VertexId from, VertexId to, std::span<const VertexId> blocked) {
  std::vector<char> ok(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId e : allowed) ok[e] = 1;
  std::vector<char> block(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : blocked) block[v] = 1;
  block[from] = block[to] = 0;
  std::vector<EdgeId> via(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::deque<VertexId> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    VertexId a = queue.front();
    queue.pop_front();
    if (a == to) break;
    for (EdgeId e : g.incident(a)) {
      if (!ok[e]) continue;
      VertexId b = g.edge(e).other(a);
      if (seen[b] || block[b]) continue;
      seen[b] = 1;
      via[b] = e;
      queue.push_back(b);
    }
  }
  if (!seen[to]) return std::nullopt;
  Path p{from, to, {}};
  for (VertexId v = to; v != from; v = g.edge(via[v]).other(v)) p.edges.push_back(via[v]);
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

}  // namespace ecd
