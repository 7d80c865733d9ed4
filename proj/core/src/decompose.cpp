#include "ecd/decompose.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "decompose_internal.hpp"
#include "ecd/errors.hpp"
#include "ecd/graph_io.hpp"
#include "ecd/recognition.hpp"
#include "ecd/signing.hpp"
#include "ecd/surgery.hpp"

namespace ecd {
namespace {

using Cycles = std::vector<std::vector<EdgeId>>;

std::string boundary_text(const std::vector<VertexId>& b) {
  std::ostringstream os;
  os << "boundary";
  for (VertexId v : b) os << ' ' << v;
  return os.str();
}

Cycles to_parent(const EdgeSubgraph& sub, const Cycles& local) {
  Cycles out;
  for (const auto& c : local) {
    std::vector<EdgeId> mapped;
    for (EdgeId e : c) {
      if (sub.parent[e] < 0) throw InternalError("virtual edge leaked out of a subinstance");
      mapped.push_back(sub.parent[e]);
    }
    out.push_back(std::move(mapped));
  }
  return out;
}

bool connected_sides(const SignedGraph& g, const Separation& s) {
  return edges_connected(g, s.left) && edges_connected(g, s.right);
}

class Driver {
 public:
  explicit Driver(const DecomposeOptions& opts) : opts_(opts) {}

  Cycles solve(const SignedGraph& g, int depth) {
    const int m = g.num_edges();
    if (m == 0) {
      record("empty", g, "", depth);
      return {};
    }

    const auto bl = blocks(g);
    if (bl.size() > 1) {
      record("blocks", g, std::to_string(bl.size()) + " blocks", depth);
      Cycles out;
      for (const auto& b : bl) {
        if (parity_of(g, b)) throw InternalError("block with an odd number of odd edges");
        append(out, to_parent_solved(edge_subgraph(g, b), m, depth));
      }
      return out;
    }

    if (is_bipartite_signed(g).bipartite) {
      record("base:bipartite", g, "", depth);
      return decompose_eulerian_bipartite(g).cycles;
    }

    if (auto pair = strippable_pair(g)) {
      const auto [e, f] = *pair;
      record("strip-parallel-pair", g, "edges " + std::to_string(e) + " " + std::to_string(f), depth);
      std::vector<EdgeId> rest;
      for (EdgeId x = 0; x < m; ++x) {
        if (x != e && x != f) rest.push_back(x);
      }
      Cycles out{{e, f}};
      if (!rest.empty()) append(out, to_parent_solved(edge_subgraph(g, rest), m, depth));
      return out;
    }

    if (suppressible(g)) {
      const Surgery s = suppress_degree2(g);
      record("suppress-degree2", g, std::to_string(m - s.graph.num_edges()) + " vertices", depth);
      Cycles out;
      for (const auto& c : recurse(s.graph, m, depth)) out.push_back(s.map.lift(c));
      return out;
    }

    try {
      return structural(g, depth);
    } catch (const InternalError& err) {
      if (opts_.faithful) throw;
      return fallback(g, depth, std::string("after internal error: ") + err.what());
    }
  }

  std::vector<TraceEntry> trace;

 private:
  const DecomposeOptions& opts_;

  void record(const std::string& rule, const SignedGraph& g, std::string detail, int depth) {
    trace.push_back({rule, g.num_edges(), std::move(detail), depth});
  }

  static void append(Cycles& out, Cycles more) {
    for (auto& c : more) out.push_back(std::move(c));
  }

  Cycles recurse(const SignedGraph& sub, int parent_edges, int depth) {
    if (sub.num_edges() >= parent_edges) {
      throw InternalError("reduction did not shrink the instance");
    }
    return solve(sub, depth + 1);
  }

  Cycles to_parent_solved(const EdgeSubgraph& sub, int parent_edges, int depth) {
    return to_parent(sub, recurse(sub.graph, parent_edges, depth));
  }

  // First same-sign parallel pair whose removal leaves only even blocks.
  static std::optional<std::pair<EdgeId, EdgeId>> strippable_pair(const SignedGraph& g) {
    const int m = g.num_edges();
    for (EdgeId e = 0; e < m; ++e) {
      for (EdgeId f = e + 1; f < m; ++f) {
        const Edge& a = g.edge(e);
        const Edge& b = g.edge(f);
        if (a.odd != b.odd || std::minmax(a.u, a.v) != std::minmax(b.u, b.v)) continue;
        std::vector<EdgeId> rest;
        for (EdgeId x = 0; x < m; ++x) {
          if (x != e && x != f) rest.push_back(x);
        }
        const EdgeSubgraph sub = edge_subgraph(g, rest);
        bool even = true;
        for (const auto& blk : blocks(sub.graph)) even = even && !parity_of(sub.graph, blk);
        if (even) return std::pair{e, f};
      }
    }
    return std::nullopt;
  }

  static bool suppressible(const SignedGraph& g) {
    if (g.num_support_vertices() < 3) return false;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) != 2) continue;
      const auto& inc = g.incident(v);
      if (g.edge(inc[0]).other(v) != g.edge(inc[1]).other(v)) return true;
    }
    return false;
  }

  static bool admissible_part(const SplicePart& p, int parent_edges) {
    return p.sub.graph.num_edges() < parent_edges && validate_instance(p.sub.graph).admissible;
  }

  Cycles solve_part(const SplicePart& p, int parent_edges, int depth) {
    return recurse(p.sub.graph, parent_edges, depth);
  }

  Cycles structural(const SignedGraph& g, int depth) {
    const int m = g.num_edges();
    std::vector<std::string> tried;

    if (auto apex = almost_bipartite_witness(g)) {
      record("base:almost-bipartite", g, "apex " + std::to_string(*apex), depth);
      return decompose_almost_bipartite(g).cycles;
    }

    try {
      if (auto emb = find_two_odd_face_embedding(g)) {
        record("base:planar-two-odd", g, "", depth);
        return decompose_planar_two_odd(g, *emb).cycles;
      }
    } catch (const BudgetExceeded&) {
      tried.push_back("embedding search over budget");
    }

    const auto seps2 = enumerate_separations(g, 2, false);
    for (const Separation& sep : seps2) {
      if (sep.order != 2 || sep.parity != SeparationParity::Odd || !connected_sides(g, sep)) continue;
      if (is_signed_subgraph_of_odd_digon(g, sep.left) || is_signed_subgraph_of_odd_digon(g, sep.right)) continue;
      Splice s = splice_odd_2sep(g, sep);
      if (!std::all_of(s.parts.begin(), s.parts.end(), [&](const SplicePart& p) { return admissible_part(p, m); })) {
        tried.push_back("odd 2-separation with inadmissible parts");
        continue;
      }
      record("odd-2sep", g, boundary_text(sep.boundary) + " " + s.variant, depth);
      std::vector<Cycles> parts;
      for (const SplicePart& p : s.parts) parts.push_back(solve_part(p, m, depth));
      return recombine(s, parts);
    }

    bool bermuda_planar = false;
    bool contracted_planar = false;
    for (const Separation& sep : seps2) {
      if (sep.order != 2 || sep.parity != SeparationParity::Even || !connected_sides(g, sep)) continue;
      if (is_odd_digon(g, sep.left) || is_odd_digon(g, sep.right)) continue;
      EvenSplice es = splice_even_2sep(g, sep);
      if (es.kind == EvenSpliceKind::AllBeadsEven) {
        record("even-2sep:beads", g, std::to_string(es.necklace.beads.size()) + " even beads", depth);
        Cycles out;
        for (const auto& bead : es.necklace.beads) append(out, to_parent_solved(edge_subgraph(g, bead), m, depth));
        return out;
      }
      if (es.kind == EvenSpliceKind::Splice) {
        const Splice& s = es.splice;
        if (std::all_of(s.parts.begin(), s.parts.end(), [&](const SplicePart& p) { return admissible_part(p, m); })) {
          record("even-2sep", g, boundary_text(es.used.boundary) + " " + s.variant, depth);
          std::vector<Cycles> parts;
          for (const SplicePart& p : s.parts) parts.push_back(solve_part(p, m, depth));
          return recombine(s, parts);
        }
        tried.push_back("even 2-separation with inadmissible parts");
        break;
      }
      if (auto done = bermuda(g, es.necklace, depth, &bermuda_planar, &contracted_planar)) return *done;
      tried.push_back(bermuda_planar ? "Bermuda triangle with a multi-cycle chain"
                                     : "Bermuda-like necklace of unexpected shape");
      break;
    }

    if (auto done = three_separation(g, depth, &tried)) return *done;

    if (bermuda_planar) {
      if (auto done = peel_even_cycle(g, depth)) return *done;
      tried.push_back("no even cycle leaves a 2-connected remainder");
      if (!contracted_planar) {
        bermuda_planar = false;
        tried.push_back("contracted Bermuda graph is not planar with two odd faces");
      }
    }

    if (opts_.faithful && !bermuda_planar) {
      std::string state;
      for (const auto& t : tried) state += (state.empty() ? "" : "; ") + t;
      if (state.empty()) state = "no rule applies";
      throw RuleExhausted("no reduction rule applies to a subinstance with " + std::to_string(m) + " edges",
                          format_graph_text(g), state);
    }
    if (bermuda_planar) {
      record("fallback:bermuda-planar", g, "", depth);
      return exhaustive(g);
    }
    return fallback(g, depth, "no rule applies");
  }

  Cycles fallback(const SignedGraph& g, int depth, std::string detail) {
    record("fallback:exhaustive", g, std::move(detail), depth);
    return exhaustive(g);
  }

  Cycles exhaustive(const SignedGraph& g) {
    auto d = exhaustive_decompose(g, opts_.exhaustive);
    if (!d) {
      throw RuleExhausted("subinstance with " + std::to_string(g.num_edges()) +
                              " edges has no even cycle decomposition",
                          format_graph_text(g), "exhaustive search failed");
    }
    return d->cycles;
  }

  std::optional<Cycles> bermuda(const SignedGraph& g, const Necklace& n, int depth, bool* planar_case,
                                bool* contracted_planar) {
    const int m = g.num_edges();
    if (n.beads.size() != 3) return std::nullopt;
    int b1 = -1;
    int digons = 0;
    for (int i = 0; i < 3; ++i) {
      if (is_odd_digon(g, n.beads[i])) {
        ++digons;
      } else {
        b1 = i;
      }
    }
    if (digons != 2 || b1 < 0) return std::nullopt;
    const auto& bead1 = n.beads[b1];
    const auto& bead2 = n.beads[(b1 + 1) % 3];
    const auto& bead3 = n.beads[(b1 + 2) % 3];
    auto meet = [&](const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
      auto va = vertices_of(g, a);
      auto vb = vertices_of(g, b);
      std::vector<VertexId> both;
      std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(both));
      return both;
    };
    const auto m12 = meet(bead1, bead2);
    const auto m13 = meet(bead1, bead3);
    if (m12.size() != 1 || m13.size() != 1) return std::nullopt;
    const VertexId v = m12[0], u = m13[0];
    auto split = [&](const std::vector<EdgeId>& d) {
      return g.is_odd(d[0]) ? std::pair{d[1], d[0]} : std::pair{d[0], d[1]};
    };
    const auto [p2, q2] = split(bead2);  // even, odd edge of the digon at v
    const auto [p3, q3] = split(bead3);  // even, odd edge of the digon at u

    if (bead1.size() == 2 && vertices_of(g, bead1).size() == 2) {
      const EdgeId a = bead1[0], b = bead1[1];
      if (g.is_odd(a) != g.is_odd(b)) return std::nullopt;
      record("bermuda:direct-triangles", g, "", depth);
      if (!g.is_odd(a)) return Cycles{{a, p2, p3}, {b, q2, q3}};
      return Cycles{{a, p2, q3}, {b, q2, p3}};
    }

    const Cycles inner = to_parent_solved(edge_subgraph(g, bead1), m, depth);
    // Shortest chain of cycles from u to v, consecutive cycles sharing a vertex.
    const int k = static_cast<int>(inner.size());
    std::vector<std::vector<VertexId>> verts;
    for (const auto& c : inner) verts.push_back(vertices_of(g, c));
    auto has = [&](int i, VertexId x) { return std::binary_search(verts[i].begin(), verts[i].end(), x); };
    std::vector<int> prev(static_cast<std::size_t>(k), -2);
    std::deque<int> queue;
    for (int i = 0; i < k; ++i) {
      if (has(i, u)) {
        prev[i] = -1;
        queue.push_back(i);
      }
    }
    int end = -1;
    while (!queue.empty() && end < 0) {
      const int i = queue.front();
      queue.pop_front();
      if (has(i, v)) {
        end = i;
        break;
      }
      for (int j = 0; j < k; ++j) {
        if (prev[j] != -2) continue;
        std::vector<VertexId> both;
        std::set_intersection(verts[i].begin(), verts[i].end(), verts[j].begin(), verts[j].end(),
                              std::back_inserter(both));
        if (both.empty()) continue;
        prev[j] = i;
        queue.push_back(j);
      }
    }
    if (end < 0) throw InternalError("Bermuda: no chain of cycles joins the attachment vertices");
    std::vector<char> in_chain(static_cast<std::size_t>(k), 0);
    int chain_len = 0;
    for (int i = end; i >= 0; i = prev[i]) {
      in_chain[i] = 1;
      ++chain_len;
    }
    std::vector<EdgeId> w;
    Cycles kept;
    for (int i = 0; i < k; ++i) {
      if (in_chain[i]) continue;
      w.insert(w.end(), inner[i].begin(), inner[i].end());
      kept.push_back(inner[i]);
    }
    if (!w.empty()) {
      const auto rest = complement_edges(g, w);
      const EdgeSubgraph g0 = edge_subgraph(g, rest);
      if (!validate_instance(g0.graph).admissible) throw InternalError("Bermuda: reduced graph is not admissible");
      record("bermuda:chain-peel", g, std::to_string(w.size()) + " edges outside the chain", depth);
      Cycles out = std::move(kept);
      append(out, to_parent_solved(g0, m, depth));
      return out;
    }
    if (chain_len == 1) {
      record("bermuda:single-cycle", g, "", depth);
      const auto ordered = order_cycle(g, inner[end]);
      // Rotate so the walk starts at u, then cut at v.
      std::vector<EdgeId> p, q;
      VertexId at = -1;
      const Edge& f0 = g.edge(ordered[0]);
      const Edge& f1 = g.edge(ordered[1 % ordered.size()]);
      at = (f0.u == f1.u || f0.u == f1.v) ? f0.v : f0.u;
      std::vector<VertexId> seq{at};
      for (EdgeId e : ordered) seq.push_back(at = g.edge(e).other(at));
      const auto pos_u = std::find(seq.begin(), seq.end() - 1, u) - seq.begin();
      const std::size_t len = ordered.size();
      bool past_v = false;
      for (std::size_t i = 0; i < len; ++i) {
        const std::size_t idx = (static_cast<std::size_t>(pos_u) + i) % len;
        (past_v ? q : p).push_back(ordered[idx]);
        if (seq[idx + 1] == v) past_v = true;
      }
      if (!parity_of(g, p)) return Cycles{concat(p, {p2, p3}), concat(q, {q2, q3})};
      return Cycles{concat(p, {p2, q3}), concat(q, {q2, p3})};
    }
    *planar_case = true;
    // Replace the albatross by a single odd digon u-v.
    EdgeSubgraph contracted = edge_subgraph(g, bead1);
    contracted.add_virtual(u, v, false);
    contracted.add_virtual(u, v, true);
    try {
      *contracted_planar = find_two_odd_face_embedding(contracted.graph).has_value();
    } catch (const BudgetExceeded&) {
      *contracted_planar = false;
    }
    return std::nullopt;
  }

  // An even cycle whose removal leaves an admissible graph; shortest first.
  std::optional<Cycles> peel_even_cycle(const SignedGraph& g, int depth) {
    const int m = g.num_edges();
    std::vector<std::vector<EdgeId>> found;
    std::vector<char> on(static_cast<std::size_t>(g.num_vertices()), 0);
    std::vector<EdgeId> path;
    long budget = 200'000;
    for (EdgeId first = 0; first < m && budget > 0; ++first) {
      const Edge& fe = g.edge(first);
      auto dfs = [&](auto&& self, VertexId at) -> void {
        if (--budget < 0) return;
        for (EdgeId e : g.incident(at)) {
          if (e <= first) continue;
          const VertexId to = g.edge(e).other(at);
          if (to == fe.u) {
            path.push_back(e);
            std::vector<EdgeId> c = path;
            c.push_back(first);
            if (!parity_of(g, c)) found.push_back(std::move(c));
            path.pop_back();
            continue;
          }
          if (on[to]) continue;
          on[to] = 1;
          path.push_back(e);
          self(self, to);
          path.pop_back();
          on[to] = 0;
        }
      };
      on[fe.u] = on[fe.v] = 1;
      dfs(dfs, fe.v);
      on[fe.u] = on[fe.v] = 0;
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (auto& c : found) {
      std::sort(c.begin(), c.end());
      const EdgeSubgraph rest = edge_subgraph(g, complement_edges(g, c));
      if (!validate_instance(rest.graph).admissible) continue;
      record("bermuda:planar-peel", g, std::to_string(c.size()) + "-cycle", depth);
      Cycles out{c};
      append(out, to_parent_solved(rest, m, depth));
      return out;
    }
    return std::nullopt;
  }

  static std::vector<EdgeId> concat(std::vector<EdgeId> a, std::initializer_list<EdgeId> b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  std::optional<Cycles> three_separation(const SignedGraph& g, int depth, std::vector<std::string>* tried) {
    const int m = g.num_edges();
    std::vector<Separation> candidates;
    for (const Separation& sep : enumerate_separations(g, 3, false)) {
      if (sep.order != 3) continue;
      for (const Separation& s : {sep, sep.swapped()}) {
        if (s.right.size() < 4 || !edges_connected(g, s.right)) continue;
        if (!is_bipartite_signed(edge_subgraph(g, s.right).graph).bipartite) continue;
        candidates.push_back(s);
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Separation& a, const Separation& b) { return a.right.size() < b.right.size(); });
    for (const Separation& sep : candidates) {
      Splice s;
      try {
        s = reduce_3sep(g, sep);
      } catch (const InternalError& err) {
        tried->push_back(err.what());
        continue;
      }
      if (!admissible_part(s.parts[0], m)) {
        tried->push_back("3-separation with an inadmissible part");
        continue;
      }
      const std::string rule = s.variant == "two-odd" ? "3sep:a" : "3sep:b";
      record(rule, g, boundary_text(sep.boundary), depth);
      return recombine_3sep(s, sep, solve_part(s.parts[0], m, depth));
    }
    if (candidates.empty()) tried->push_back("no 3-separation with a bipartite side");
    return std::nullopt;
  }
};

}  // namespace

DecomposeResult decompose(const SignedGraph& g, DecomposeOptions opts) {
  const ValidityReport report = validate_instance(g);
  if (!report.admissible) {
    std::string why = !report.loopless          ? "graph has a loop"
                      : !report.two_connected   ? "graph is not 2-connected"
                      : !report.eulerian        ? "graph has a vertex of odd degree"
                                                : "graph has an odd number of odd edges";
    throw InadmissibleInput("inadmissible input: " + why, report);
  }
  DecomposeResult result;
  const MinorResult minor = odd_minor(g, MinorTarget::K4, opts.minor);
  result.minor_check = minor.outcome;
  if (minor.outcome == MinorOutcome::Found) throw OddMinorFound(*minor.model);
  Driver driver(opts);
  auto cycles = driver.solve(g, 0);
  result.decomposition = normalize_decomposition(g, std::move(cycles));
  result.trace = std::move(driver.trace);
  const VerificationReport check = verify_decomposition(g, result.decomposition);
  if (!check.ok) throw InternalError("decomposition failed verification: " + check.message);
  return result;
}

}  // namespace ecd
