#include "ecd/minor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "ecd/errors.hpp"

namespace ecd {
namespace {

using Mask = std::uint64_t;

// An edge of the reduced graph: a path u -> v of original edges.
struct Chain {
  VertexId u, v;
  bool odd;
  std::vector<EdgeId> edges;    // in order from u to v
  std::vector<VertexId> inner;  // internal vertices in order
  bool alive = true;

  Chain reversed() const {
    Chain c = *this;
    std::swap(c.u, c.v);
    std::reverse(c.edges.begin(), c.edges.end());
    std::reverse(c.inner.begin(), c.inner.end());
    return c;
  }
};

std::vector<Chain> reduce(const SignedGraph& g, bool suppress) {
  std::vector<Chain> chains;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (!ed.is_loop()) chains.push_back({ed.u, ed.v, ed.odd, {e}, {}});
  }
  const int n = g.num_vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    // Collapse parallel chains of equal sign.
    for (std::size_t i = 0; i < chains.size(); ++i) {
      if (!chains[i].alive) continue;
      for (std::size_t j = i + 1; j < chains.size(); ++j) {
        if (!chains[j].alive || chains[j].odd != chains[i].odd) continue;
        auto [a, b] = std::minmax(chains[i].u, chains[i].v);
        auto [c, d] = std::minmax(chains[j].u, chains[j].v);
        if (a == c && b == d) {
          chains[j].alive = false;
          changed = true;
        }
      }
    }
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(n));
    for (int i = 0; i < static_cast<int>(chains.size()); ++i) {
      if (!chains[i].alive) continue;
      inc[chains[i].u].push_back(i);
      inc[chains[i].v].push_back(i);
    }
    for (VertexId w = 0; w < n && !changed; ++w) {
      const auto& list = inc[w];
      if (list.empty()) continue;
      std::vector<VertexId> nbrs;
      for (int i : list) nbrs.push_back(chains[i].u == w ? chains[i].v : chains[i].u);
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      if (nbrs.size() <= 1) {
        for (int i : list) chains[i].alive = false;
        changed = true;
      } else if (suppress && list.size() == 2) {
        Chain a = chains[list[0]].v == w ? chains[list[0]] : chains[list[0]].reversed();
        Chain b = chains[list[1]].u == w ? chains[list[1]] : chains[list[1]].reversed();
        Chain joined{a.u, b.v, a.odd != b.odd, a.edges, a.inner};
        joined.inner.push_back(w);
        joined.inner.insert(joined.inner.end(), b.inner.begin(), b.inner.end());
        joined.edges.insert(joined.edges.end(), b.edges.begin(), b.edges.end());
        chains[list[0]].alive = chains[list[1]].alive = false;
        chains.push_back(std::move(joined));
        changed = true;
      }
    }
  }
  std::vector<Chain> out;
  for (auto& c : chains) {
    if (c.alive) out.push_back(std::move(c));
  }
  return out;
}

struct LocalEdge {
  int a, b;
  bool odd;
  int chain;
};

class ModelSearch {
 public:
  ModelSearch(int nv, std::vector<LocalEdge> edges, int k)
      : n_(nv), k_(k), edges_(std::move(edges)), adj_(static_cast<std::size_t>(nv), 0) {
    for (const auto& e : edges_) {
      adj_[e.a] |= Mask{1} << e.b;
      adj_[e.b] |= Mask{1} << e.a;
    }
    sets_.resize(static_cast<std::size_t>(k));
    labels_.resize(static_cast<std::size_t>(k));
  }

  bool run() { return level(0, (n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1), 0, all_assignments()); }

  const std::vector<Mask>& sets() const { return sets_; }
  const std::vector<Mask>& labels() const { return labels_; }

 private:
  std::uint32_t all_assignments() const {
    return k_ == 5 ? 0xFFFFFFFFu : (std::uint32_t{1} << (1 << k_)) - 1;
  }

  bool level(int i, Mask avail, int min_root, std::uint32_t feasible) {
    if (i == k_) return true;
    for (int r = min_root; r < n_; ++r) {
      const Mask bit = Mask{1} << r;
      if (!(avail & bit)) continue;
      Mask upper = avail & ~((bit << 1) - 1);  // available vertices above r
      if (std::popcount(upper) < k_ - i - 1) break;
      Mask forbidden = ~(avail & ~(bit - 1));
      if (grow(i, bit, adj_[r] & ~forbidden & ~bit, forbidden | bit, avail, r, feasible)) return true;
    }
    return false;
  }

  // Enumerates connected sets S containing `set` (each exactly once) by
  // branching on extension vertices.
  bool grow(int i, Mask set, Mask ext, Mask forbidden, Mask avail, int root,
            std::uint32_t feasible) {
    if (try_set(i, set, avail, root, feasible)) return true;
    while (ext) {
      const int v = std::countr_zero(ext);
      const Mask bit = Mask{1} << v;
      ext &= ~bit;
      const Mask grown = set | bit;
      if (grow(i, grown, (ext | adj_[v]) & ~grown & ~forbidden, forbidden, avail, root, feasible)) {
        return true;
      }
      forbidden |= bit;
    }
    return false;
  }

  bool try_set(int i, Mask set, Mask avail, int root, std::uint32_t feasible) {
    for (int j = 0; j < i; ++j) {
      if (!(neighbourhood(set) & sets_[j])) return false;
    }
    // Later branch sets need vertices above this root that remain free.
    const Mask rest = avail & ~set & ~((Mask{2} << root) - 1);
    if (std::popcount(rest) < k_ - i - 1) return false;
    sets_[i] = set;
    for (Mask pi : labelings(set)) {
      labels_[i] = pi;
      std::uint32_t f = feasible;
      for (int j = 0; j < i && f; ++j) f &= pair_filter(j, i);
      if (f && level(i + 1, avail & ~set, root + 1, f)) return true;
    }
    return false;
  }

  Mask neighbourhood(Mask set) const {
    Mask out = 0;
    for (Mask s = set; s; s &= s - 1) out |= adj_[std::countr_zero(s)];
    return out;
  }

  // Assignments b (bit i of the index = b_i) compatible with some connector
  // between branch sets j and i.
  std::uint32_t pair_filter(int j, int i) const {
    bool allow[2] = {false, false};
    for (const auto& e : edges_) {
      int a = e.a, b = e.b;
      bool ai = (sets_[i] >> a) & 1, bj = (sets_[j] >> b) & 1;
      if (!(ai && bj)) {
        std::swap(a, b);
        ai = (sets_[i] >> a) & 1;
        bj = (sets_[j] >> b) & 1;
        if (!(ai && bj)) continue;
      }
      const int t = 1 ^ e.odd ^ static_cast<int>((labels_[i] >> a) & 1) ^
                    static_cast<int>((labels_[j] >> b) & 1);
      allow[t] = true;
    }
    std::uint32_t out = 0;
    for (int x = 0; x < (1 << k_); ++x) {
      const int t = ((x >> i) & 1) ^ ((x >> j) & 1);
      if (allow[t]) out |= std::uint32_t{1} << x;
    }
    return out;
  }

  // Vertex 2-colourings of `set` (lowest vertex coloured 0) whose consistent
  // internal edges connect the set.
  const std::vector<Mask>& labelings(Mask set) {
    auto it = cache_.find(set);
    if (it != cache_.end()) return it->second;
    std::vector<int> verts;
    for (Mask s = set; s; s &= s - 1) verts.push_back(std::countr_zero(s));
    std::vector<const LocalEdge*> inside;
    for (const auto& e : edges_) {
      if (((set >> e.a) & 1) && ((set >> e.b) & 1)) inside.push_back(&e);
    }
    std::vector<Mask> out;
    const int free_bits = static_cast<int>(verts.size()) - 1;
    for (std::uint32_t code = 0; code < (1u << free_bits); ++code) {
      Mask pi = 0;
      for (int t = 0; t < free_bits; ++t) {
        if ((code >> t) & 1) pi |= Mask{1} << verts[t + 1];
      }
      Mask reached = Mask{1} << verts[0];
      bool grew = true;
      while (grew) {
        grew = false;
        for (const LocalEdge* e : inside) {
          const bool ra = (reached >> e->a) & 1, rb = (reached >> e->b) & 1;
          if (ra == rb) continue;
          if ((((pi >> e->a) ^ (pi >> e->b)) & 1) != static_cast<Mask>(e->odd)) continue;
          reached |= (Mask{1} << e->a) | (Mask{1} << e->b);
          grew = true;
        }
      }
      if (reached == set) out.push_back(pi);
    }
    return cache_.emplace(set, std::move(out)).first->second;
  }

  int n_;
  int k_;
  std::vector<LocalEdge> edges_;
  std::vector<Mask> adj_;
  std::vector<Mask> sets_;
  std::vector<Mask> labels_;
  std::unordered_map<Mask, std::vector<Mask>> cache_;
};

// Fills in `switching`: potentials along the branch trees, then a per-set
// flip chosen by brute force so every connector is odd.
bool complete_switching(const SignedGraph& g, MinorModel& m) {
  const int k = static_cast<int>(m.branch_sets.size());
  std::vector<int> pot(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<int> owner(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int i = 0; i < k; ++i) {
    for (VertexId v : m.branch_sets[i]) owner[v] = i;
    pot[m.branch_sets[i].front()] = 0;
    bool grew = true;
    while (grew) {
      grew = false;
      for (EdgeId e : m.branch_trees[i]) {
        const Edge& ed = g.edge(e);
        if ((pot[ed.u] == -1) == (pot[ed.v] == -1)) continue;
        if (pot[ed.u] == -1) {
          pot[ed.u] = pot[ed.v] ^ ed.odd;
        } else {
          pot[ed.v] = pot[ed.u] ^ ed.odd;
        }
        grew = true;
      }
    }
  }
  for (int flips = 0; flips < (1 << k); ++flips) {
    bool ok = true;
    for (EdgeId e : m.connectors) {
      const Edge& ed = g.edge(e);
      const int su = pot[ed.u] ^ ((flips >> owner[ed.u]) & 1);
      const int sv = pot[ed.v] ^ ((flips >> owner[ed.v]) & 1);
      if ((ed.odd ^ su ^ sv) != 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    m.switching.clear();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (owner[v] != -1 && (pot[v] ^ ((flips >> owner[v]) & 1)) == 1) m.switching.push_back(v);
    }
    return true;
  }
  return false;
}

}  // namespace

MinorResult odd_minor(const SignedGraph& g, MinorTarget target, MinorSearchOptions opts) {
  const int k = static_cast<int>(target);
  const std::vector<Chain> chains = reduce(g, k >= 4);
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<VertexId> global;
  for (const Chain& c : chains) {
    for (VertexId v : {c.u, c.v}) {
      if (local[v] == -1) {
        local[v] = 0;
        global.push_back(v);
      }
    }
  }
  std::sort(global.begin(), global.end());
  for (int i = 0; i < static_cast<int>(global.size()); ++i) local[global[i]] = i;
  const int n = static_cast<int>(global.size());
  if (n < k) return {MinorOutcome::Absent, std::nullopt};
  if (n > opts.max_vertices || n > 64) return {MinorOutcome::Unknown, std::nullopt};

  std::vector<LocalEdge> edges;
  for (int i = 0; i < static_cast<int>(chains.size()); ++i) {
    edges.push_back({local[chains[i].u], local[chains[i].v], chains[i].odd, i});
  }
  ModelSearch search(n, edges, k);
  if (!search.run()) return {MinorOutcome::Absent, std::nullopt};

  // Lift the local model to g.
  MinorModel m;
  m.branch_sets.resize(static_cast<std::size_t>(k));
  m.branch_trees.resize(static_cast<std::size_t>(k));
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < k; ++i) {
    for (Mask s = search.sets()[i]; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      owner[v] = i;
      m.branch_sets[i].push_back(global[v]);
    }
  }
  // Spanning trees over consistent edges, BFS from the lowest vertex.
  for (int i = 0; i < k; ++i) {
    const Mask set = search.sets()[i], pi = search.labels()[i];
    Mask reached = set & (~set + 1);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& e : edges) {
        if (!((set >> e.a) & 1) || !((set >> e.b) & 1)) continue;
        const bool ra = (reached >> e.a) & 1, rb = (reached >> e.b) & 1;
        if (ra == rb) continue;
        if ((((pi >> e.a) ^ (pi >> e.b)) & 1) != static_cast<Mask>(e.odd)) continue;
        reached |= (Mask{1} << e.a) | (Mask{1} << e.b);
        const Chain& c = chains[e.chain];
        m.branch_trees[i].insert(m.branch_trees[i].end(), c.edges.begin(), c.edges.end());
        m.branch_sets[i].insert(m.branch_sets[i].end(), c.inner.begin(), c.inner.end());
        grew = true;
      }
    }
  }
  // Connectors: for the first per-set flip vector that works, the first chain
  // per pair with odd switched parity.
  const int pairs = k * (k - 1) / 2;
  m.connectors.assign(static_cast<std::size_t>(pairs), -1);
  bool done = false;
  MinorModel best;
  for (int flips = 0; flips < (1 << k) && !done; ++flips) {
    MinorModel trial = m;
    bool ok = true;
    int p = 0;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = i + 1; j < k && ok; ++j, ++p) {
        ok = false;
        for (const auto& e : edges) {
          int a = e.a, b = e.b;
          if (owner[a] == j && owner[b] == i) std::swap(a, b);
          if (owner[a] != i || owner[b] != j) continue;
          const int sa = static_cast<int>((search.labels()[i] >> a) & 1) ^ ((flips >> i) & 1);
          const int sb = static_cast<int>((search.labels()[j] >> b) & 1) ^ ((flips >> j) & 1);
          if ((e.odd ^ sa ^ sb) != 1) continue;
          Chain c = chains[e.chain];
          if (local[c.u] != a) c = c.reversed();
          trial.branch_sets[i].insert(trial.branch_sets[i].end(), c.inner.begin(), c.inner.end());
          trial.branch_trees[i].insert(trial.branch_trees[i].end(), c.edges.begin(),
                                       c.edges.end() - 1);
          trial.connectors[p] = c.edges.back();
          ok = true;
          break;
        }
      }
    }
    if (ok && p == pairs) {
      best = std::move(trial);
      done = true;
    }
  }
  if (!done) throw InternalError("odd minor search produced an unliftable model");
  for (auto& s : best.branch_sets) std::sort(s.begin(), s.end());
  for (auto& t : best.branch_trees) std::sort(t.begin(), t.end());
  if (!complete_switching(g, best)) throw InternalError("odd minor model has no valid switching");
  if (auto err = check_minor_model(g, best, target); !err.empty()) {
    throw InternalError("odd minor model failed its certificate check: " + err);
  }
  return {MinorOutcome::Found, std::move(best)};
}

std::string check_minor_model(const SignedGraph& g, const MinorModel& m, MinorTarget target) {
  const int k = static_cast<int>(target);
  if (static_cast<int>(m.branch_sets.size()) != k) return "wrong number of branch sets";
  if (static_cast<int>(m.branch_trees.size()) != k) return "wrong number of branch trees";
  if (static_cast<int>(m.connectors.size()) != k * (k - 1) / 2) return "wrong number of connectors";
  std::vector<int> owner(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int i = 0; i < k; ++i) {
    if (m.branch_sets[i].empty()) return "empty branch set";
    for (VertexId v : m.branch_sets[i]) {
      if (v < 0 || v >= g.num_vertices()) return "branch vertex out of range";
      if (owner[v] != -1) return "branch sets overlap";
      owner[v] = i;
    }
  }
  std::vector<char> in_switch(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : m.switching) {
    if (v < 0 || v >= g.num_vertices()) return "switching vertex out of range";
    in_switch[v] = 1;
  }
  auto switched_odd = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    return ed.odd != (in_switch[ed.u] != in_switch[ed.v]);
  };
  for (int i = 0; i < k; ++i) {
    const auto& tree = m.branch_trees[i];
    if (tree.size() + 1 != m.branch_sets[i].size()) return "branch tree has the wrong size";
    std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (EdgeId e : tree) {
      if (e < 0 || e >= g.num_edges()) return "tree edge out of range";
      const Edge& ed = g.edge(e);
      if (owner[ed.u] != i || owner[ed.v] != i) return "tree edge leaves its branch set";
      if (switched_odd(e)) return "tree edge is odd after switching";
      const int a = find(ed.u), b = find(ed.v);
      if (a == b) return "branch tree contains a cycle";
      parent[a] = b;
    }
  }
  int p = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j, ++p) {
      const EdgeId e = m.connectors[p];
      if (e < 0 || e >= g.num_edges()) return "connector out of range";
      const Edge& ed = g.edge(e);
      const bool joins = (owner[ed.u] == i && owner[ed.v] == j) || (owner[ed.u] == j && owner[ed.v] == i);
      if (!joins) return "connector joins the wrong branch sets";
      if (!switched_odd(e)) return "connector is even after switching";
    }
  }
  return {};
}

}  // namespace ecd
