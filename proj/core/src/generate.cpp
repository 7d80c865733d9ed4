#include "ecd/generate.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "ecd/connectivity.hpp"
#include "ecd/embedding.hpp"
#include "ecd/errors.hpp"
#include "ecd/recognition.hpp"
#include "ecd/signing.hpp"

namespace ecd {
namespace {

// Bounded draws done by hand so sequences do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int below(int n) {
    if (n <= 0) throw PreconditionError("empty range");
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<int>(x % bound);
  }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (engine_() >> 63) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void self_check(bool ok, const std::string& family, const std::string& what) {
  if (!ok) throw InternalError(family + " generator: " + what);
}

SignedGraph random_switch(const SignedGraph& g, Rng& rng) {
  std::vector<VertexId> x;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (rng.coin()) x.push_back(v);
  }
  return switch_signs(g, x);
}

// Hamiltonian cycle in random order plus random extra cycles (length >= 2)
// until about m edges. 2-connected and Eulerian; all edges even.
SignedGraph cycle_union(int n, int m, Rng& rng) {
  SignedGraph g(n);
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  if (n == 2) {
    g.add_edge(order[0], order[1], false);
    g.add_edge(order[0], order[1], false);
  } else {
    for (int i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n], false);
  }
  while (g.num_edges() + 2 <= m) {
    const int len = rng.between(2, std::min(n, std::max(2, m - g.num_edges())));
    std::vector<VertexId> pick(order);
    rng.shuffle(pick);
    pick.resize(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
      if (len == 2 && i == 1) {
        g.add_edge(pick[0], pick[1], false);
        break;
      }
      g.add_edge(pick[i], pick[(i + 1) % len], false);
    }
  }
  return g;
}

SignedGraph gen_bipartite(const FamilySpec& s, Rng& rng) {
  require(s.n >= 2, "eulerian-bipartite needs n >= 2");
  const int m = s.m > 0 ? s.m : 2 * s.n;
  SignedGraph g = random_switch(cycle_union(s.n, m, rng), rng);
  self_check(is_bipartite_signed(g).bipartite, s.family, "odd cycle");
  return g;
}

SignedGraph gen_almost_bipartite(const FamilySpec& s, Rng& rng) {
  require(s.n >= 3, "almost-bipartite needs n >= 3");
  const int m = s.m > 0 ? s.m : 2 * s.n;
  SignedGraph g = cycle_union(s.n, m, rng);
  const VertexId apex = rng.below(s.n);
  std::vector<EdgeId> at_apex;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == apex || ed.v == apex) {
      at_apex.push_back(e);
      g.set_sign(e, rng.coin());
    }
  }
  if (g.signature_size() % 2 != 0) g.set_sign(at_apex[0], !g.is_odd(at_apex[0]));
  g = random_switch(g, rng);
  self_check(almost_bipartite_witness(g).has_value(), s.family, "no apex");
  return g;
}

// Planar Eulerian 2-connected graph grown from a triangle by adding pairs of
// parallel ears inside a face, keeping the rotation system alongside.
SignedGraph gen_planar(const FamilySpec& s, Rng& rng) {
  const int m = s.m > 0 ? s.m : 12;
  require(m >= 3, "planar-two-odd needs m >= 3");
  SignedGraph g(3);
  Embedding emb;
  emb.rotation.assign(3, {});
  for (int i = 0; i < 3; ++i) g.add_edge(i, (i + 1) % 3, false);
  // Vertex i holds the u-end of edge i and the v-end of edge i-1.
  for (int i = 0; i < 3; ++i) emb.rotation[i] = {dart_of(i, 0), dart_of((i + 2) % 3, 1)};

  auto dart_at = [&](EdgeId e, VertexId v) { return g.edge(e).u == v ? dart_of(e, 0) : dart_of(e, 1); };
  auto insert_after = [&](VertexId v, int after, int dart) {
    auto& rot = emb.rotation[v];
    auto it = std::find(rot.begin(), rot.end(), after);
    rot.insert(it + 1, dart);
  };
  // Adds a path a..b of `inner` new vertices; its first dart at a goes right
  // after `after_a`, its last dart at b right after `after_b`. Returns the
  // (first dart at a, last dart at b).
  auto add_ear = [&](VertexId a, int after_a, VertexId b, int after_b, int inner) {
    VertexId prev = a;
    int prev_after = after_a;
    int first = -1, last = -1;
    for (int i = 0; i <= inner; ++i) {
      VertexId next;
      if (i == inner) {
        next = b;
      } else {
        next = g.add_vertex();
        emb.rotation.emplace_back();
      }
      const EdgeId e = g.add_edge(prev, next, false);
      insert_after(prev, prev_after, dart_at(e, prev));
      if (first == -1) first = dart_at(e, prev);
      if (next == b) {
        insert_after(b, after_b, dart_at(e, b));
        last = dart_at(e, b);
      } else {
        emb.rotation[next].push_back(dart_at(e, next));
        prev_after = dart_at(e, next);
      }
      prev = next;
    }
    return std::pair{first, last};
  };

  while (g.num_edges() < m) {
    const auto faces = faces_and_parities(g, emb);
    const Face& f = faces[rng.below(static_cast<int>(faces.size()))];
    const int k = static_cast<int>(f.darts.size());
    // Corner i: at the head of darts[i], after reverse(darts[i]).
    auto head = [&](int d) { return d % 2 == 0 ? g.edge(dart_edge(d)).v : g.edge(dart_edge(d)).u; };
    std::vector<std::pair<int, int>> choices;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i != j && head(f.darts[i]) != head(f.darts[j])) choices.emplace_back(i, j);
      }
    }
    if (choices.empty()) continue;
    const auto [i, j] = choices[rng.below(static_cast<int>(choices.size()))];
    const VertexId a = head(f.darts[i]), b = head(f.darts[j]);
    const int inner1 = rng.below(3) == 0 ? 1 : 0;
    const int inner2 = rng.below(3) == 0 ? 1 : 0;
    const auto [first, last] = add_ear(a, reverse_dart(f.darts[i]), b, reverse_dart(f.darts[j]), inner1);
    // The second ear hugs the first: after it at a, just before it at b.
    auto& rot_b = emb.rotation[b];
    const auto pos = std::find(rot_b.begin(), rot_b.end(), last) - rot_b.begin();
    const int before_last = rot_b[(pos + rot_b.size() - 1) % rot_b.size()];
    add_ear(a, first, b, before_last, inner2);
  }

  // Odd faces: two faces of the same dual colour joined by a dual path.
  const auto faces = faces_and_parities(g, emb);
  const int nf = static_cast<int>(faces.size());
  std::vector<int> face_of(static_cast<std::size_t>(2 * g.num_edges()));
  for (int i = 0; i < nf; ++i) {
    for (int d : faces[i].darts) face_of[d] = i;
  }
  const int f1 = rng.below(nf);
  std::vector<int> dist(static_cast<std::size_t>(nf), -1);
  std::vector<EdgeId> via(static_cast<std::size_t>(nf), -1);
  std::deque<int> queue{f1};
  dist[f1] = 0;
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int d : faces[a].darts) {
      const int b = face_of[reverse_dart(d)];
      if (dist[b] != -1) continue;
      dist[b] = dist[a] + 1;
      via[b] = dart_edge(d);
      queue.push_back(b);
    }
  }
  std::vector<int> same_class;
  for (int i = 0; i < nf; ++i) {
    if (i != f1 && dist[i] % 2 == 0) same_class.push_back(i);
  }
  self_check(!same_class.empty(), s.family, "single dual colour class");
  for (int f = same_class[rng.below(static_cast<int>(same_class.size()))]; f != f1;) {
    const EdgeId e = via[f];
    g.set_sign(e, !g.is_odd(e));
    const int a = face_of[dart_of(e, 0)], b = face_of[dart_of(e, 1)];
    f = a == f ? b : a;
  }
  g = random_switch(g, rng);
  self_check(is_planar_embedding(g, emb), s.family, "embedding not planar");
  self_check(count_odd_faces(faces_and_parities(g, emb)) == 2, s.family, "odd face count is not two");
  return g;
}

// Copies `bead` (attachment vertices a_local, b_local) into g with those
// mapped to a_global, b_global and fresh vertices elsewhere.
void place_bead(SignedGraph& g, const SignedGraph& bead, VertexId a_local, VertexId b_local,
                VertexId a_global, VertexId b_global) {
  std::vector<VertexId> map(static_cast<std::size_t>(bead.num_vertices()), -1);
  map[a_local] = a_global;
  map[b_local] = b_global;
  for (VertexId v = 0; v < bead.num_vertices(); ++v) {
    if (map[v] == -1) map[v] = g.add_vertex();
  }
  for (const Edge& e : bead.edges()) g.add_edge(map[e.u], map[e.v], e.odd);
}

SignedGraph gen_necklace(const FamilySpec& s, Rng& rng) {
  require(s.n >= 2 && s.n <= 12, "necklace-composite needs 2 <= n <= 12 beads");
  const int beads = s.n;
  // 0 = odd digon, 1 = even bead, 2 = odd almost-bipartite bead.
  std::vector<int> kind(static_cast<std::size_t>(beads));
  int odd = 0;
  for (int& k : kind) {
    k = rng.below(3);
    odd += k != 1;
  }
  if (odd % 2 != 0) kind.back() = kind.back() == 1 ? 0 : 1;
  SignedGraph g(beads);  // attachment vertices 0..beads-1
  for (int i = 0; i < beads; ++i) {
    const VertexId a = i, b = (i + 1) % beads;
    if (kind[i] == 0) {
      SignedGraph d(2);
      d.add_edge(0, 1, false);
      d.add_edge(0, 1, true);
      place_bead(g, d, 0, 1, a, b);
      continue;
    }
    const int n = rng.between(2, 4);
    SignedGraph bead = cycle_union(n, n + 2 * rng.below(3), rng);
    const VertexId la = rng.below(n);
    VertexId lb = rng.below(n - 1);
    if (lb >= la) ++lb;
    if (kind[i] == 2) {
      // Odd edges only at the attachment shared with the previous bead.
      std::vector<EdgeId> at;
      for (EdgeId e = 0; e < bead.num_edges(); ++e) {
        if (bead.edge(e).u == la || bead.edge(e).v == la) at.push_back(e);
      }
      for (EdgeId e : at) bead.set_sign(e, rng.coin());
      if (bead.signature_size() % 2 == 0) bead.set_sign(at[0], !bead.is_odd(at[0]));
    }
    place_bead(g, bead, la, lb, a, b);
  }
  g = random_switch(g, rng);
  self_check(validate_instance(g).admissible, s.family, "not admissible");
  return g;
}

SignedGraph gen_bermuda(const FamilySpec& s, Rng& rng) {
  const int size = s.m > 0 ? s.m : 4;
  require(size >= 2, "bermuda needs a bead of at least 2 edges");
  SignedGraph g;
  if (size == 4) {
    // u=0, v=2 opposite on the 4-cycle 0-1-2-3; c=4 joins the two digons.
    g = SignedGraph(5);
    g.add_edge(0, 1, false);
    g.add_edge(1, 2, false);
    g.add_edge(2, 3, false);
    g.add_edge(3, 0, false);
  } else {
    const int n = std::max(2, std::min(size / 2, 6));
    g = cycle_union(n, size, rng);
    g.add_vertex();
  }
  const VertexId u = 0, v = size == 4 ? 2 : 1;
  const VertexId c = g.num_vertices() - 1;
  g.add_edge(v, c, false);
  g.add_edge(v, c, true);
  g.add_edge(c, u, false);
  g.add_edge(c, u, true);
  if (size != 4) g = random_switch(g, rng);
  self_check(validate_instance(g).admissible, s.family, "not admissible");
  return g;
}

SignedGraph gen_random(const FamilySpec& s, Rng& rng) {
  require(s.n >= 2, "random-eulerian-signed needs n >= 2");
  const int m = s.m > 0 ? s.m : 2 * s.n;
  SignedGraph g(s.n);
  for (int i = 0; i < m; ++i) {
    const VertexId a = rng.below(s.n);
    VertexId b = rng.below(s.n - 1);
    if (b >= a) ++b;
    g.add_edge(a, b, rng.coin());
  }
  // Pair up odd-degree vertices in random order.
  std::vector<VertexId> odd;
  for (VertexId v = 0; v < s.n; ++v) {
    if (g.degree(v) % 2 != 0) odd.push_back(v);
  }
  rng.shuffle(odd);
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) g.add_edge(odd[i], odd[i + 1], rng.coin());
  self_check(is_eulerian(g), s.family, "parity repair failed");
  return g;
}

SignedGraph gen_doubled(const FamilySpec& s, Rng& rng) {
  require(s.n >= 2, "doubled-graph needs n >= 2");
  std::vector<VertexId> order(static_cast<std::size_t>(s.n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::pair<VertexId, VertexId>> simple;
  if (s.n == 2) {
    simple.emplace_back(order[0], order[1]);
  } else {
    for (int i = 0; i < s.n; ++i) simple.emplace_back(order[i], order[(i + 1) % s.n]);
  }
  const int chords = s.m > 0 ? s.m : rng.below(std::max(1, s.n - 2));
  for (int i = 0; i < chords && s.n > 3; ++i) {
    const int a = rng.below(s.n);
    const int b = (a + 2 + rng.below(s.n - 3)) % s.n;
    auto p = std::minmax(order[a], order[b]);
    bool dup = false;
    for (auto q : simple) dup = dup || std::minmax(q.first, q.second) == p;
    if (!dup) simple.emplace_back(p);
  }
  SignedGraph g(s.n);
  std::vector<EdgeId> mixed;
  for (auto [a, b] : simple) {
    const int kind = rng.below(3);  // even pair, odd pair, odd digon
    g.add_edge(a, b, kind != 0);
    const EdgeId e = g.add_edge(a, b, kind == 1);
    if (kind == 2) mixed.push_back(e);
  }
  if (mixed.size() % 2 != 0) g.set_sign(mixed[0], true);
  g = random_switch(g, rng);
  self_check(validate_instance(g).admissible, s.family, "not admissible");
  return g;
}

using Generator = SignedGraph (*)(const FamilySpec&, Rng&);

const std::map<std::string, Generator>& generators() {
  static const std::map<std::string, Generator> table{
      {"eulerian-bipartite", gen_bipartite},   {"almost-bipartite", gen_almost_bipartite},
      {"planar-two-odd", gen_planar},          {"necklace-composite", gen_necklace},
      {"bermuda", gen_bermuda},                {"random-eulerian-signed", gen_random},
      {"doubled-graph", gen_doubled},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "eulerian-bipartite", "almost-bipartite", "planar-two-odd",       "necklace-composite",
      "bermuda",            "random-eulerian-signed", "doubled-graph",
  };
  return names;
}

SignedGraph generate(const FamilySpec& spec) {
  const auto it = generators().find(spec.family);
  if (it == generators().end()) throw PreconditionError("unknown family: " + spec.family);
  require(spec.n <= 64 && spec.m <= 512, "size parameters out of range");
  Rng rng(spec.seed);
  SignedGraph g = it->second(spec, rng);
  if (spec.family != "random-eulerian-signed") {
    self_check(validate_instance(g).admissible, spec.family, "not admissible");
  }
  return g;
}

}  // namespace ecd
