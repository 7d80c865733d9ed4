#include "ecd/embedding.hpp"

#include <algorithm>

#include "ecd/connectivity.hpp"
#include "ecd/errors.hpp"

namespace ecd {
namespace {

int tail_of(const SignedGraph& g, int d) {
  const Edge& ed = g.edge(dart_edge(d));
  return d % 2 == 0 ? ed.u : ed.v;
}

// Position of every dart inside its vertex's rotation; -1 when absent.
struct RotationIndex {
  std::vector<int> vertex;
  std::vector<int> slot;
};

RotationIndex index_rotation(const SignedGraph& g, const Embedding& emb) {
  RotationIndex idx;
  idx.vertex.assign(static_cast<std::size_t>(2 * g.num_edges()), -1);
  idx.slot.assign(idx.vertex.size(), -1);
  for (VertexId v = 0; v < static_cast<VertexId>(emb.rotation.size()); ++v) {
    const auto& rot = emb.rotation[v];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      int d = rot[i];
      if (d < 0 || d >= 2 * g.num_edges()) throw PreconditionError("rotation lists an unknown dart");
      if (idx.vertex[d] != -1) throw PreconditionError("rotation lists a dart twice");
      if (tail_of(g, d) != v) throw PreconditionError("dart listed at the wrong vertex");
      idx.vertex[d] = v;
      idx.slot[d] = i;
    }
  }
  return idx;
}

int successor(const Embedding& emb, const RotationIndex& idx, int d) {
  const auto& rot = emb.rotation[idx.vertex[d]];
  return rot[(idx.slot[d] + 1) % rot.size()];
}

// Traces the faces formed by the darts present in the rotation.
std::vector<Face> trace(const SignedGraph& g, const Embedding& emb, const RotationIndex& idx,
                        std::vector<int>* face_of) {
  std::vector<Face> faces;
  face_of->assign(idx.vertex.size(), -1);
  for (int start = 0; start < static_cast<int>(idx.vertex.size()); ++start) {
    if (idx.vertex[start] == -1 || (*face_of)[start] != -1) continue;
    Face f;
    int d = start;
    int parity = 0;
    do {
      (*face_of)[d] = static_cast<int>(faces.size());
      f.darts.push_back(d);
      f.edges.push_back(dart_edge(d));
      parity ^= g.is_odd(dart_edge(d)) ? 1 : 0;
      d = successor(emb, idx, reverse_dart(d));
    } while (d != start);
    f.odd = parity == 1;
    faces.push_back(std::move(f));
  }
  return faces;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const SignedGraph& g, EmbeddingSearchOptions opts) : g_(g), opts_(opts) {
    emb_.rotation.assign(static_cast<std::size_t>(g.num_vertices()), {});
    plan_order();
  }

  std::optional<Embedding> run() {
    if (order_.empty()) return emb_;
    if (place(0)) return emb_;
    return std::nullopt;
  }

 private:
  struct Step {
    EdgeId edge;
    bool chord;
    VertexId anchor;  // the already placed end of a pendant edge
  };

  void plan_order() {
    auto support = g_.support();
    if (support.empty()) return;
    std::vector<char> placed(static_cast<std::size_t>(g_.num_vertices()), 0);
    std::vector<int> links(static_cast<std::size_t>(g_.num_vertices()), 0);
    auto place_vertex = [&](VertexId w) {
      placed[w] = 1;
      std::vector<EdgeId> back;
      for (EdgeId e : g_.incident(w)) {
        VertexId o = g_.edge(e).other(w);
        if (o != w && placed[o] && (back.empty() || back.back() != e)) back.push_back(e);
        if (!placed[o]) ++links[o];
      }
      for (std::size_t i = 0; i < back.size(); ++i) {
        const Edge& ed = g_.edge(back[i]);
        order_.push_back({back[i], i > 0, ed.other(w)});
      }
    };
    place_vertex(support.front());
    for (std::size_t count = 1; count < support.size(); ++count) {
      VertexId best = -1;
      for (VertexId v : support) {
        if (placed[v] || links[v] == 0) continue;
        if (best == -1 || links[v] > links[best]) best = v;
      }
      if (best == -1) throw PreconditionError("embedding search requires a connected graph");
      place_vertex(best);
    }
  }

  void insert_after(VertexId v, int after, int dart) {
    auto& rot = emb_.rotation[v];
    if (after == -1) {
      rot.push_back(dart);
      return;
    }
    auto it = std::find(rot.begin(), rot.end(), after);
    rot.insert(it + 1, dart);
  }

  void erase_dart(VertexId v, int dart) {
    auto& rot = emb_.rotation[v];
    rot.erase(std::find(rot.begin(), rot.end(), dart));
  }

  bool place(std::size_t k) {
    if (++nodes_ > opts_.node_budget) throw BudgetExceeded("embedding search node budget exhausted");
    if (k == order_.size()) return true;
    const Step& step = order_[k];
    const Edge& ed = g_.edge(step.edge);
    const int du = dart_of(step.edge, 0);
    const int dv = dart_of(step.edge, 1);
    if (!step.chord) {
      const VertexId fresh = ed.other(step.anchor);
      const int d_anchor = step.anchor == ed.u ? du : dv;
      const int d_fresh = step.anchor == ed.u ? dv : du;
      emb_.rotation[fresh].push_back(d_fresh);
      std::vector<int> corners = emb_.rotation[step.anchor];
      if (corners.empty()) corners.push_back(-1);
      for (int c : corners) {
        insert_after(step.anchor, c, d_anchor);
        if (place(k + 1)) return true;
        erase_dart(step.anchor, d_anchor);
      }
      emb_.rotation[fresh].clear();
      return false;
    }
    RotationIndex idx = index_rotation(g_, emb_);
    std::vector<int> face_of;
    trace(g_, emb_, idx, &face_of);
    const std::vector<int> at_u = emb_.rotation[ed.u];
    const std::vector<int> at_v = emb_.rotation[ed.v];
    for (int cu : at_u) {
      for (int cv : at_v) {
        if (face_of[reverse_dart(cu)] != face_of[reverse_dart(cv)]) continue;
        insert_after(ed.u, cu, du);
        insert_after(ed.v, cv, dv);
        RotationIndex next = index_rotation(g_, emb_);
        std::vector<int> scratch;
        if (count_odd_faces(trace(g_, emb_, next, &scratch)) <= 2 && place(k + 1)) return true;
        erase_dart(ed.u, du);
        erase_dart(ed.v, dv);
      }
    }
    return false;
  }

  const SignedGraph& g_;
  EmbeddingSearchOptions opts_;
  Embedding emb_;
  std::vector<Step> order_;
  std::int64_t nodes_ = 0;
};

}  // namespace

std::vector<Face> faces_and_parities(const SignedGraph& g, const Embedding& emb) {
  if (static_cast<int>(emb.rotation.size()) != g.num_vertices()) {
    throw PreconditionError("rotation size differs from vertex count");
  }
  RotationIndex idx = index_rotation(g, emb);
  for (int d = 0; d < 2 * g.num_edges(); ++d) {
    if (idx.vertex[d] == -1) throw PreconditionError("rotation misses a dart");
  }
  std::vector<int> face_of;
  return trace(g, emb, idx, &face_of);
}

bool is_planar_embedding(const SignedGraph& g, const Embedding& emb) {
  auto faces = faces_and_parities(g, emb);
  if (g.num_edges() == 0) return true;
  return g.num_support_vertices() - g.num_edges() + static_cast<int>(faces.size()) == 2;
}

int count_odd_faces(const std::vector<Face>& faces) {
  return static_cast<int>(std::count_if(faces.begin(), faces.end(), [](const Face& f) { return f.odd; }));
}

std::optional<Embedding> find_two_odd_face_embedding(const SignedGraph& g,
                                                     EmbeddingSearchOptions opts) {
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) throw PreconditionError("embedding search requires a loopless graph");
  }
  if (!is_connected(g)) throw PreconditionError("embedding search requires a connected graph");
  return EmbeddingSearch(g, opts).run();
}

}  // namespace ecd
