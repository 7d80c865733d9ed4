#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "decompose_internal.hpp"
#include "ecd/decompose.hpp"
#include "ecd/errors.hpp"
#include "ecd/paths.hpp"
#include "ecd/signing.hpp"

namespace ecd {
namespace {

SplicePart make_part(const SignedGraph& h, std::span<const EdgeId> edges) {
  SplicePart p{edge_subgraph(h, edges), {}};
  p.token.assign(p.sub.parent.size(), -1);
  return p;
}

void add_token_edge(SplicePart& p, VertexId u, VertexId v, bool odd, int token) {
  p.sub.add_virtual(u, v, odd);
  p.token.push_back(token);
}

std::vector<EdgeId> minus(std::span<const EdgeId> a, std::span<const EdgeId> b) {
  std::set<EdgeId> drop(b.begin(), b.end());
  std::vector<EdgeId> out;
  for (EdgeId e : a) {
    if (!drop.count(e)) out.push_back(e);
  }
  return out;
}

void require_even_cycle(const SignedGraph& g, std::span<const EdgeId> cycle, const char* where) {
  if (!is_cycle(g, cycle)) throw InternalError(std::string(where) + ": recombined edges are not a cycle");
  if (parity_of(g, cycle)) throw InternalError(std::string(where) + ": recombined cycle is odd");
}

bool sides_connected(const SignedGraph& g, const Separation& sep) {
  return edges_connected(g, sep.left) && edges_connected(g, sep.right);
}

}  // namespace

Splice splice_odd_2sep(const SignedGraph& g, const Separation& sep) {
  if (sep.order != 2 || sep.parity != SeparationParity::Odd) {
    throw PreconditionError("splice_odd_2sep: not an odd 2-separation");
  }
  if (!sides_connected(g, sep) || is_signed_subgraph_of_odd_digon(g, sep.left) ||
      is_signed_subgraph_of_odd_digon(g, sep.right)) {
    throw PreconditionError("splice_odd_2sep: sides must be connected and not inside an odd digon");
  }
  const VertexId u = sep.boundary[0], v = sep.boundary[1];
  Separation s = sep;
  auto bip = is_bipartite_signed(edge_subgraph(g, s.right).graph);
  if (!bip.bipartite) {
    s = s.swapped();
    bip = is_bipartite_signed(edge_subgraph(g, s.right).graph);
  }
  Splice out;
  if (bip.bipartite) {
    out.variant = "bipartite-side";
    out.graph = switch_signs(g, bip.switching);
    SplicePart part = make_part(out.graph, s.left);
    add_token_edge(part, u, v, false, 0);
    out.parts.push_back(std::move(part));
    auto path = shortest_path(out.graph, s.right, u, v);
    if (!path) throw InternalError("splice_odd_2sep: bipartite side has no boundary path");
    out.direct_paths.emplace_back(0, path->edges);
    auto rest = minus(s.right, path->edges);
    out.direct_cycles = peel_cycles(out.graph, rest);
    return out;
  }
  out.variant = "both-nonbipartite";
  out.graph = g;
  for (const auto* side : {&sep.left, &sep.right}) {
    SplicePart part = make_part(g, *side);
    add_token_edge(part, u, v, parity_of(g, *side), 0);
    out.parts.push_back(std::move(part));
  }
  return out;
}

std::vector<std::vector<EdgeId>> recombine(const Splice& s,
                                           const std::vector<std::vector<std::vector<EdgeId>>>& part_cycles) {
  if (part_cycles.size() != s.parts.size()) throw PreconditionError("recombine: one cycle list per part");
  std::vector<std::vector<EdgeId>> out = s.direct_cycles;
  std::map<int, std::vector<std::vector<EdgeId>>> fragments;
  for (const auto& [token, edges] : s.direct_paths) fragments[token].push_back(edges);
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    const SplicePart& part = s.parts[i];
    for (const auto& cycle : part_cycles[i]) {
      std::vector<EdgeId> real;
      std::vector<int> tokens;
      for (EdgeId e : cycle) {
        if (part.token[e] >= 0) {
          tokens.push_back(part.token[e]);
        } else {
          real.push_back(part.sub.parent[e]);
        }
      }
      if (tokens.empty()) {
        out.push_back(std::move(real));
      } else if (tokens.size() == 1) {
        fragments[tokens[0]].push_back(std::move(real));
      } else {
        throw InternalError("recombine: a part cycle uses two virtual edges");
      }
    }
  }
  for (auto& [token, list] : fragments) {
    if (list.size() != 2) throw InternalError("recombine: virtual edge " + std::to_string(token) +
                                              " is not matched by exactly two fragments");
    std::vector<EdgeId> joined = list[0];
    joined.insert(joined.end(), list[1].begin(), list[1].end());
    out.push_back(std::move(joined));
  }
  for (const auto& c : out) require_even_cycle(s.graph, c, "recombine");
  return out;
}

EvenSplice splice_even_2sep(const SignedGraph& g, const Separation& sep) {
  if (sep.order != 2 || sep.parity != SeparationParity::Even) {
    throw PreconditionError("splice_even_2sep: not an even 2-separation");
  }
  if (!sides_connected(g, sep) || is_odd_digon(g, sep.left) || is_odd_digon(g, sep.right)) {
    throw PreconditionError("splice_even_2sep: sides must be connected and not odd digons");
  }
  std::vector<Separation> candidates{sep};
  for (auto& other : enumerate_separations(g, 2, false)) {
    if (other.order != 2 || other.parity != SeparationParity::Even) continue;
    if (other.left == sep.left || !sides_connected(g, other)) continue;
    candidates.push_back(std::move(other));
  }
  std::optional<EvenSplice> bermuda;
  bool bermuda_found = false;
  for (const Separation& cand : candidates) {
    Necklace n = necklace(g, cand);
    const int k = static_cast<int>(n.beads.size());
    std::vector<char> odd(static_cast<std::size_t>(k));
    bool any_odd = false;
    for (int i = 0; i < k; ++i) {
      odd[i] = parity_of(g, n.beads[i]);
      any_odd = any_odd || odd[i];
    }
    if (!any_odd) {
      EvenSplice es;
      es.kind = EvenSpliceKind::AllBeadsEven;
      es.necklace = std::move(n);
      es.used = cand;
      return es;
    }
    for (int len = 1; len < k; ++len) {
      for (int start = 0; start < k; ++start) {
        std::vector<EdgeId> h1, h2;
        bool odd1 = false, odd2 = false;
        for (int j = 0; j < k; ++j) {
          const int idx = (start + j) % k;
          auto& side = j < len ? h1 : h2;
          side.insert(side.end(), n.beads[idx].begin(), n.beads[idx].end());
          (j < len ? odd1 : odd2) |= static_cast<bool>(odd[idx]);
        }
        if (!odd1 || !odd2 || is_odd_digon(g, h1) || is_odd_digon(g, h2)) continue;
        std::sort(h1.begin(), h1.end());
        std::sort(h2.begin(), h2.end());
        const Separation split = make_separation(g, h1);
        if (split.order != 2) throw InternalError("splice_even_2sep: bead run does not meet in two vertices");
        const VertexId x = split.boundary[0], y = split.boundary[1];
        const bool odd_sides = parity_of(g, h1);
        EvenSplice es;
        es.kind = EvenSpliceKind::Splice;
        es.necklace = std::move(n);
        es.used = cand;
        Splice& s = es.splice;
        s.variant = odd_sides ? "odd-sides" : "even-sides";
        s.graph = g;
        for (const auto* side : {&h1, &h2}) {
          SplicePart part = make_part(g, *side);
          add_token_edge(part, x, y, false, 0);
          add_token_edge(part, x, y, odd_sides, 1);
          s.parts.push_back(std::move(part));
        }
        return es;
      }
    }
    const bool bermuda_shape =
        k == 3 && std::count_if(n.beads.begin(), n.beads.end(),
                                [&](const auto& b) { return is_odd_digon(g, b); }) >= 2;
    if (!bermuda || (bermuda_shape && !bermuda_found)) {
      EvenSplice es;
      es.kind = EvenSpliceKind::Bermuda;
      es.necklace = std::move(n);
      es.used = cand;
      bermuda = std::move(es);
      bermuda_found = bermuda_shape;
    }
  }
  return std::move(*bermuda);
}

Splice reduce_3sep(const SignedGraph& g, const Separation& sep) {
  if (sep.order != 3) throw PreconditionError("reduce_3sep: not a 3-separation");
  if (sep.right.size() < 4 || !edges_connected(g, sep.right)) {
    throw PreconditionError("reduce_3sep: the bipartite side must be connected with at least four edges");
  }
  const auto bip = is_bipartite_signed(edge_subgraph(g, sep.right).graph);
  if (!bip.bipartite) throw PreconditionError("reduce_3sep: right side has an odd cycle");
  Splice out;
  out.graph = switch_signs(g, bip.switching);
  std::vector<VertexId> odd_ends, even_ends;
  for (VertexId b : sep.boundary) {
    (degree_within(g, sep.left, b) % 2 ? odd_ends : even_ends).push_back(b);
  }
  if (odd_ends.size() == 2) {
    out.variant = "two-odd";
    const VertexId z = even_ends[0];
    auto fan = fan_paths(out.graph, sep.right, z, odd_ends);
    if (!fan) throw InternalError("reduce_3sep: no fan from the even boundary vertex");
    std::vector<EdgeId> used;
    for (const Path& p : *fan) used.insert(used.end(), p.edges.begin(), p.edges.end());
    std::vector<EdgeId> h = sep.left;
    h.insert(h.end(), used.begin(), used.end());
    std::sort(h.begin(), h.end());
    out.parts.push_back(make_part(out.graph, h));
    out.direct_cycles = peel_cycles(out.graph, minus(sep.right, used));
    if (out.direct_cycles.empty()) throw InternalError("reduce_3sep: fan covers the whole bipartite side");
    return out;
  }
  if (!odd_ends.empty()) throw InternalError("reduce_3sep: boundary degree parities are inconsistent");
  out.variant = "triangle";
  SplicePart part = make_part(out.graph, sep.left);
  const auto& b = sep.boundary;
  add_token_edge(part, b[0], b[1], false, 0);
  add_token_edge(part, b[1], b[2], false, 1);
  add_token_edge(part, b[0], b[2], false, 2);
  out.parts.push_back(std::move(part));
  return out;
}

namespace {

struct PathRequest {
  VertexId a = -1;
  VertexId b = -1;
  VertexId avoid = -1;
};

// Pairwise edge-disjoint paths inside `region`, one per request, by
// backtracking over simple paths.
std::optional<std::vector<std::vector<EdgeId>>> route_paths(const SignedGraph& h,
                                                            std::span<const EdgeId> region,
                                                            const std::vector<PathRequest>& reqs) {
  std::vector<char> allowed(static_cast<std::size_t>(h.num_edges()), 0);
  for (EdgeId e : region) allowed[e] = 1;
  std::vector<char> on_path(static_cast<std::size_t>(h.num_vertices()), 0);
  std::vector<std::vector<EdgeId>> chosen(reqs.size());
  std::vector<EdgeId> walk;
  long budget = 500'000;

  std::function<bool(std::size_t)> route;
  std::function<bool(std::size_t, VertexId)> extend = [&](std::size_t i, VertexId at) {
    if (--budget < 0) return false;
    if (at == reqs[i].b) {
      chosen[i] = walk;
      if (route(i + 1)) return true;
      return false;
    }
    for (EdgeId e : h.incident(at)) {
      if (!allowed[e]) continue;
      const VertexId to = h.edge(e).other(at);
      if (on_path[to] || to == reqs[i].avoid) continue;
      allowed[e] = 0;
      on_path[to] = 1;
      walk.push_back(e);
      const bool ok = extend(i, to);
      walk.pop_back();
      on_path[to] = 0;
      allowed[e] = 1;
      if (ok) return true;
    }
    return false;
  };
  route = [&](std::size_t i) {
    if (i == reqs.size()) return true;
    // Committed edges of earlier paths stay disallowed while deeper requests run.
    std::vector<EdgeId> saved_walk;
    saved_walk.swap(walk);
    std::vector<char> saved_on(on_path.size(), 0);
    saved_on.swap(on_path);
    on_path[reqs[i].a] = 1;
    const bool ok = extend(i, reqs[i].a);
    on_path.swap(saved_on);
    walk.swap(saved_walk);
    return ok;
  };
  if (!route(0)) return std::nullopt;
  return chosen;
}

bool visits(const SignedGraph& g, std::span<const EdgeId> edges, VertexId v) {
  return std::any_of(edges.begin(), edges.end(),
                     [&](EdgeId e) { return g.edge(e).u == v || g.edge(e).v == v; });
}

}  // namespace

std::vector<std::vector<EdgeId>> recombine_3sep(const Splice& s, const Separation& sep,
                                                const std::vector<std::vector<EdgeId>>& part_cycles) {
  if (s.variant != "triangle") return recombine(s, {part_cycles});
  const SplicePart& part = s.parts.at(0);
  const SignedGraph& h = s.graph;
  std::vector<std::vector<EdgeId>> out;
  struct Open {
    std::vector<EdgeId> real;  // parent ids
    std::vector<EdgeId> virt;  // local ids
  };
  std::vector<Open> open;
  for (const auto& cycle : part_cycles) {
    Open o;
    for (EdgeId e : cycle) {
      if (part.token[e] >= 0) {
        o.virt.push_back(e);
      } else {
        o.real.push_back(part.sub.parent[e]);
      }
    }
    if (o.virt.empty()) {
      out.push_back(std::move(o.real));
    } else {
      open.push_back(std::move(o));
    }
  }
  const auto& bd = sep.boundary;
  auto third = [&](VertexId a, VertexId b) {
    for (VertexId c : bd) {
      if (c != a && c != b) return c;
    }
    return VertexId{-1};
  };
  std::vector<EdgeId> used;
  if (open.size() == 1) {
    if (open[0].virt.size() != 3 || !open[0].real.empty()) {
      throw InternalError("recombine_3sep: unexpected use of the virtual triangle");
    }
  } else {
    std::vector<PathRequest> reqs;
    for (const Open& o : open) {
      if (o.virt.size() == 1) {
        const Edge& ve = part.sub.graph.edge(o.virt[0]);
        const VertexId c = third(ve.u, ve.v);
        reqs.push_back({ve.u, ve.v, visits(h, o.real, c) ? c : -1});
      } else if (o.virt.size() == 2) {
        const Edge& e1 = part.sub.graph.edge(o.virt[0]);
        const Edge& e2 = part.sub.graph.edge(o.virt[1]);
        const VertexId r = (e1.u == e2.u || e1.u == e2.v) ? e1.u : e1.v;
        reqs.push_back({e1.other(r), e2.other(r), -1});
      } else {
        throw InternalError("recombine_3sep: a cycle uses the whole virtual triangle plus real edges");
      }
    }
    std::optional<std::vector<std::vector<EdgeId>>> paths;
    if (reqs.size() == 3) {
      // Fan from one boundary vertex to the other two, closed by a path
      // between those two that avoids the apex.
      for (VertexId apex : bd) {
        std::vector<VertexId> targets;
        for (VertexId b : bd) {
          if (b != apex) targets.push_back(b);
        }
        auto fan = fan_paths(h, sep.right, apex, targets);
        if (!fan) continue;
        std::vector<EdgeId> fan_edges;
        for (const Path& p : *fan) fan_edges.insert(fan_edges.end(), p.edges.begin(), p.edges.end());
        const VertexId blocked[] = {apex};
        auto closing = shortest_path(h, minus(sep.right, fan_edges), targets[0], targets[1], blocked);
        if (!closing) continue;
        std::vector<std::vector<EdgeId>> by_req(3);
        for (std::size_t i = 0; i < 3; ++i) {
          const auto& r = reqs[i];
          if (r.a != apex && r.b != apex) {
            by_req[i] = closing->edges;
          } else {
            const VertexId far = r.a == apex ? r.b : r.a;
            by_req[i] = (*fan)[far == targets[0] ? 0 : 1].edges;
          }
        }
        paths = std::move(by_req);
        break;
      }
    }
    if (!paths) paths = route_paths(h, sep.right, reqs);
    if (!paths) throw InternalError("recombine_3sep: could not route the virtual edges through the bipartite side");
    for (std::size_t i = 0; i < open.size(); ++i) {
      std::vector<EdgeId> c = open[i].real;
      c.insert(c.end(), (*paths)[i].begin(), (*paths)[i].end());
      used.insert(used.end(), (*paths)[i].begin(), (*paths)[i].end());
      out.push_back(std::move(c));
    }
  }
  for (auto& c : peel_cycles(h, minus(sep.right, used))) out.push_back(std::move(c));
  for (const auto& c : out) require_even_cycle(h, c, "recombine_3sep");
  return out;
}

}  // namespace ecd
