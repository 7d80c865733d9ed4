#include "ecd/recognition.hpp"

#include <algorithm>
#include <map>

#include "ecd/errors.hpp"
#include "ecd/minor.hpp"
#include "ecd/signing.hpp"

namespace ecd {
namespace {

SignedGraph without_vertex(const SignedGraph& g, VertexId v) {
  SignedGraph out(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) out.add_edge(e.u, e.v, e.odd);
  }
  return out;
}

bool is_odd_digon_pair(const SignedGraph& g, EdgeId a, EdgeId b) {
  const EdgeId pair[2] = {a, b};
  return is_odd_digon(g, pair);
}

bool side_ok_for_two_separation(const SignedGraph& g, std::span<const EdgeId> side) {
  return edges_connected(g, side) && !is_signed_subgraph_of_odd_digon(g, side);
}

}  // namespace

std::optional<VertexId> almost_bipartite_witness(const SignedGraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (is_bipartite_signed(without_vertex(g, v)).bipartite) return v;
  }
  return std::nullopt;
}

bool is_k32_tilde(const SignedGraph& g) {
  if (g.num_edges() != 6 || g.num_support_vertices() != 3) return false;
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> pairs;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) return false;
    pairs[std::minmax(ed.u, ed.v)].push_back(e);
  }
  if (pairs.size() != 3) return false;
  return std::all_of(pairs.begin(), pairs.end(), [&](const auto& kv) {
    return kv.second.size() == 2 && is_odd_digon_pair(g, kv.second[0], kv.second[1]);
  });
}

std::vector<Albatross> find_albatrosses(const SignedGraph& g) {
  std::vector<Albatross> out;
  for (VertexId c = 0; c < g.num_vertices(); ++c) {
    if (g.degree(c) != 4) continue;
    std::map<VertexId, std::vector<EdgeId>> by_nbr;
    bool loop = false;
    for (EdgeId e : g.incident(c)) {
      if (g.edge(e).is_loop()) loop = true;
      by_nbr[g.edge(e).other(c)].push_back(e);
    }
    if (loop || by_nbr.size() != 2) continue;
    bool ok = true;
    std::vector<EdgeId> edges;
    for (const auto& [w, list] : by_nbr) {
      if (list.size() != 2 || !is_odd_digon_pair(g, list[0], list[1])) ok = false;
      edges.insert(edges.end(), list.begin(), list.end());
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    out.push_back({edges, c});
  }
  return out;
}

bool is_albatross_shape(const SignedGraph& g, std::span<const EdgeId> edges) {
  if (edges.size() != 4) return false;
  auto verts = vertices_of(g, edges);
  if (verts.size() != 3) return false;
  for (VertexId c : verts) {
    if (degree_within(g, edges, c) != 4) continue;
    std::map<VertexId, std::vector<EdgeId>> by_nbr;
    for (EdgeId e : edges) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop() || (ed.u != c && ed.v != c)) return false;
      by_nbr[ed.other(c)].push_back(e);
    }
    if (by_nbr.size() != 2) return false;
    for (const auto& [w, list] : by_nbr) {
      if (list.size() != 2 || !is_odd_digon_pair(g, list[0], list[1])) return false;
    }
    return true;
  }
  return false;
}

AlmostThreeConnected is_almost_3_connected(const SignedGraph& g) {
  if (!is_two_connected(g)) throw PreconditionError("is_almost_3_connected requires a 2-connected graph");
  for (const Separation& s : enumerate_separations(g, 2, true)) {
    if (s.order != 2) continue;
    if (is_albatross_shape(g, s.left) || is_albatross_shape(g, s.right)) continue;
    return {false, s};
  }
  return {};
}

std::string to_string(CaseKind k) {
  switch (k) {
    case CaseKind::NotTwoConnected: return "NotTwoConnected";
    case CaseKind::AlmostBipartite: return "AlmostBipartite";
    case CaseKind::PlanarTwoOdd: return "PlanarTwoOdd";
    case CaseKind::IsK32: return "IsK32";
    case CaseKind::TwoSeparation: return "TwoSeparation";
    case CaseKind::ThreeSeparationBipartiteSide: return "ThreeSeparationBipartiteSide";
    case CaseKind::NoCaseFound: return "NoCaseFound";
  }
  return "NoCaseFound";
}

StructureCase structure_classify(const SignedGraph& g) {
  StructureCase out;
  if (!is_two_connected(g)) {
    out.kind = CaseKind::NotTwoConnected;
    return out;
  }
  if (auto v = almost_bipartite_witness(g)) {
    out.kind = CaseKind::AlmostBipartite;
    out.apex = v;
    return out;
  }
  const bool loopless = std::none_of(g.edges().begin(), g.edges().end(),
                                     [](const Edge& e) { return e.is_loop(); });
  if (loopless) {
    if (auto emb = find_two_odd_face_embedding(g)) {
      out.kind = CaseKind::PlanarTwoOdd;
      out.embedding = std::move(emb);
      return out;
    }
  }
  if (is_k32_tilde(g)) {
    out.kind = CaseKind::IsK32;
    return out;
  }
  auto two_seps = enumerate_separations(g, 2, false);
  for (bool want_proper : {true, false}) {
    for (const Separation& s : two_seps) {
      if (s.order != 2 || s.proper != want_proper) continue;
      if (side_ok_for_two_separation(g, s.left) && side_ok_for_two_separation(g, s.right)) {
        out.kind = CaseKind::TwoSeparation;
        out.separation = s;
        return out;
      }
    }
  }
  std::optional<Separation> best;
  for (const Separation& s : enumerate_separations(g, 3, false)) {
    if (s.order != 3) continue;
    for (const Separation& cand : {s, s.swapped()}) {
      const auto& side = cand.right;
      if (side.size() < 4 || !edges_connected(g, side)) continue;
      if (!is_bipartite_signed(edge_subgraph(g, side).graph).bipartite) continue;
      if (!best || side.size() < best->right.size()) best = cand;
    }
  }
  if (best) {
    out.kind = CaseKind::ThreeSeparationBipartiteSide;
    out.separation = std::move(best);
    return out;
  }
  out.kind = CaseKind::NoCaseFound;
  out.coverage_violation = odd_minor(g, MinorTarget::K4).outcome == MinorOutcome::Absent;
  return out;
}

std::optional<Necklace> is_bermuda(const SignedGraph& g) {
  if (!is_two_connected(g) || !is_eulerian(g)) {
    throw PreconditionError("is_bermuda requires a 2-connected Eulerian graph");
  }
  std::vector<Separation> even;
  bool has_proper = false;
  for (const Separation& s : enumerate_separations(g, 2, false)) {
    if (s.order != 2 || s.parity != SeparationParity::Even) continue;
    if (!edges_connected(g, s.left) || !edges_connected(g, s.right)) continue;
    has_proper = has_proper || s.proper;
    even.push_back(s);
  }
  if (!has_proper) throw PreconditionError("is_bermuda requires an even proper 2-separation");
  std::optional<Necklace> witness;
  for (const Separation& s : even) {
    Necklace n = necklace(g, s);
    if (n.beads.size() != 3) return std::nullopt;
    int digons = 0;
    for (const auto& b : n.beads) digons += is_odd_digon(g, b) ? 1 : 0;
    if (digons < 2) return std::nullopt;
    if (!witness) witness = std::move(n);
  }
  return witness;
}

}  // namespace ecd
