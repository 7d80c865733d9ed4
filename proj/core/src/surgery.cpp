#include "ecd/surgery.hpp"

#include <algorithm>

#include "ecd/errors.hpp"

namespace ecd {

std::vector<EdgeId> SurgeryMap::lift(std::span<const EdgeId> edges) const {
  std::vector<EdgeId> out;
  for (EdgeId e : edges) {
    const auto& src = forward[static_cast<std::size_t>(e)];
    out.insert(out.end(), src.begin(), src.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SurgeryMap compose(const SurgeryMap& first, const SurgeryMap& second) {
  SurgeryMap out;
  for (std::size_t e = 0; e < second.forward.size(); ++e) {
    out.forward.push_back(first.lift(second.forward[e]));
    out.kind.push_back(second.kind[e] == SurgeryKind::Original && second.forward[e].size() == 1
                           ? first.kind[static_cast<std::size_t>(second.forward[e][0])]
                           : second.kind[e]);
  }
  return out;
}

Surgery subdivide_even(const SignedGraph& g) {
  Surgery s{SignedGraph(g.num_vertices()), {}};
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.odd) {
      s.graph.add_edge(ed.u, ed.v, true);
      s.map.forward.push_back({e});
      s.map.kind.push_back(SurgeryKind::Original);
      continue;
    }
    VertexId w = s.graph.add_vertex();
    s.graph.add_edge(ed.u, w, true);
    s.graph.add_edge(w, ed.v, true);
    for (int i = 0; i < 2; ++i) {
      s.map.forward.push_back({e});
      s.map.kind.push_back(SurgeryKind::Subdivision);
    }
  }
  return s;
}

Surgery suppress_degree2(const SignedGraph& g) {
  struct Work {
    VertexId u, v;
    bool odd;
    std::vector<EdgeId> src;
    bool merged;
    bool alive;
  };
  std::vector<Work> work;
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.num_vertices()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) throw PreconditionError("suppress_degree2 requires a loopless graph");
    work.push_back({ed.u, ed.v, ed.odd, {e}, false, true});
    inc[ed.u].push_back(e);
    inc[ed.v].push_back(e);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId w = 0; w < g.num_vertices(); ++w) {
      auto& list = inc[w];
      if (list.size() != 2) continue;
      Work& a = work[list[0]];
      Work& b = work[list[1]];
      VertexId x = a.u == w ? a.v : a.u;
      VertexId y = b.u == w ? b.v : b.u;
      if (x == y) continue;
      Work merged{x, y, a.odd != b.odd, a.src, true, true};
      merged.src.insert(merged.src.end(), b.src.begin(), b.src.end());
      std::sort(merged.src.begin(), merged.src.end());
      const int ia = list[0], ib = list[1];
      a.alive = b.alive = false;
      const int id = static_cast<int>(work.size());
      work.push_back(std::move(merged));
      for (VertexId end : {x, y}) {
        auto& l = inc[end];
        for (int& slot : l) {
          if (slot == ia || slot == ib) {
            slot = id;
            break;
          }
        }
      }
      list.clear();
      changed = true;
    }
  }
  Surgery s{SignedGraph(g.num_vertices()), {}};
  for (const Work& w : work) {
    if (!w.alive) continue;
    s.graph.add_edge(w.u, w.v, w.odd);
    s.map.forward.push_back(w.src);
    s.map.kind.push_back(w.merged ? SurgeryKind::Suppression : SurgeryKind::Original);
  }
  return s;
}

}  // namespace ecd
