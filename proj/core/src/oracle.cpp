#include "ecd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <unordered_set>

#include "ecd/errors.hpp"
#include "ecd/signing.hpp"

namespace ecd {
namespace {

// Independent cycle test: distinct non-loop edges, every touched vertex of
// degree two, one connected piece.
bool forms_cycle(const SignedGraph& g, const std::vector<EdgeId>& cycle) {
  if (cycle.size() < 2) return false;
  std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId e : cycle) {
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) return false;
    ++deg[ed.u];
    ++deg[ed.v];
  }
  std::size_t touched = 0;
  for (int d : deg) {
    if (d != 0 && d != 2) return false;
    if (d == 2) ++touched;
  }
  if (touched != cycle.size()) return false;
  // Flood along the cycle's edges from one end of the first edge.
  std::vector<char> reached(static_cast<std::size_t>(g.num_vertices()), 0);
  reached[g.edge(cycle[0]).u] = 1;
  std::size_t count = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (EdgeId e : cycle) {
      const Edge& ed = g.edge(e);
      if (reached[ed.u] != reached[ed.v]) {
        reached[ed.u] = reached[ed.v] = 1;
        ++count;
        grew = true;
      }
    }
  }
  return count == touched;
}

using Mask = std::uint64_t;

class Exhaustive {
 public:
  explicit Exhaustive(const SignedGraph& g) : g_(g), m_(g.num_edges()) {}

  std::optional<std::vector<Mask>> run() {
    const Mask all = m_ == 64 ? ~Mask{0} : (Mask{1} << m_) - 1;
    std::vector<Mask> chosen;
    if (search(all, chosen)) return chosen;
    return std::nullopt;
  }

 private:
  bool search(Mask residual, std::vector<Mask>& chosen) {
    if (residual == 0) return true;
    if (failed_.count(residual)) return false;
    const EdgeId e0 = std::countr_zero(residual);
    for (Mask cycle : even_cycles_through(e0, residual)) {
      const Mask rest = residual & ~cycle;
      if (!components_even(rest)) continue;
      chosen.push_back(cycle);
      if (search(rest, chosen)) return true;
      chosen.pop_back();
    }
    failed_.insert(residual);
    return false;
  }

  std::vector<Mask> even_cycles_through(EdgeId e0, Mask residual) const {
    const Edge& start = g_.edge(e0);
    std::vector<std::pair<int, Mask>> found;
    if (start.is_loop()) return {};
    std::vector<char> on_path(static_cast<std::size_t>(g_.num_vertices()), 0);
    on_path[start.v] = 1;
    std::function<void(VertexId, Mask, bool)> walk = [&](VertexId at, Mask used, bool parity) {
      for (EdgeId e : g_.incident(at)) {
        const Mask bit = Mask{1} << e;
        if (!(residual & bit) || (used & bit)) continue;
        const Edge& ed = g_.edge(e);
        if (ed.is_loop()) continue;
        const VertexId next = ed.other(at);
        const bool p = parity != ed.odd;
        if (next == start.u) {
          if (!p) found.emplace_back(std::popcount(used | bit), used | bit);
          continue;
        }
        if (on_path[next]) continue;
        on_path[next] = 1;
        walk(next, used | bit, p);
        on_path[next] = 0;
      }
    };
    walk(start.v, Mask{1} << e0, start.odd);
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      // Lexicographic on the sorted edge lists: lower set bit first wins.
      const Mask diff = a.second ^ b.second;
      return (a.second & diff & (~diff + 1)) != 0;
    });
    std::vector<Mask> out;
    for (const auto& f : found) out.push_back(f.second);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Every connected component of the residual edge set must carry an even
  // number of odd edges.
  bool components_even(Mask residual) const {
    Mask left = residual;
    while (left) {
      Mask comp = left & (~left + 1);
      Mask frontier = comp;
      while (frontier) {
        const EdgeId e = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const Edge& ed = g_.edge(e);
        for (VertexId end : {ed.u, ed.v}) {
          for (EdgeId f : g_.incident(end)) {
            const Mask bit = Mask{1} << f;
            if ((left & bit) && !(comp & bit)) {
              comp |= bit;
              frontier |= bit;
            }
          }
        }
      }
      int odd = 0;
      for (Mask c = comp; c; c &= c - 1) odd += g_.is_odd(std::countr_zero(c)) ? 1 : 0;
      if (odd % 2 != 0) return false;
      left &= ~comp;
    }
    return true;
  }

  const SignedGraph& g_;
  int m_;
  std::unordered_set<Mask> failed_;
};

}  // namespace

std::string to_string(Violation v) {
  switch (v) {
    case Violation::None: return "none";
    case Violation::NotAPartition: return "not-a-partition";
    case Violation::NotACycle: return "not-a-cycle";
    case Violation::OddCycle: return "odd-cycle";
  }
  return "none";
}

VerificationReport verify_decomposition(const SignedGraph& g, const CycleDecomposition& d) {
  VerificationReport r;
  auto fail = [&](Violation v, int index, std::vector<EdgeId> ids, std::string msg) {
    r.ok = false;
    r.violation = v;
    r.cycle_index = index;
    r.offending = std::move(ids);
    r.message = std::move(msg);
    return r;
  };
  std::vector<int> count(static_cast<std::size_t>(g.num_edges()), 0);
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    for (EdgeId e : d.cycles[i]) {
      if (e < 0 || e >= g.num_edges()) {
        return fail(Violation::NotAPartition, static_cast<int>(i), {e}, "edge id out of range");
      }
      ++count[e];
    }
  }
  std::vector<EdgeId> repeated, missing;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (count[e] > 1) repeated.push_back(e);
    if (count[e] == 0) missing.push_back(e);
  }
  if (!repeated.empty()) return fail(Violation::NotAPartition, -1, repeated, "edges used more than once");
  if (!missing.empty()) return fail(Violation::NotAPartition, -1, missing, "edges not covered");
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    if (!forms_cycle(g, d.cycles[i])) {
      return fail(Violation::NotACycle, static_cast<int>(i), d.cycles[i], "entry is not a cycle");
    }
  }
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    int odd = 0;
    for (EdgeId e : d.cycles[i]) odd += g.is_odd(e) ? 1 : 0;
    if (odd % 2 != 0) return fail(Violation::OddCycle, static_cast<int>(i), d.cycles[i], "cycle is odd");
  }
  return r;
}

ExhaustiveOptions default_exhaustive_options() {
  ExhaustiveOptions opts;
  if (const char* env = std::getenv("ECD_BUDGET_EDGES")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 64) opts.max_edges = static_cast<int>(v);
  }
  return opts;
}

std::optional<CycleDecomposition> exhaustive_decompose(const SignedGraph& g, ExhaustiveOptions opts) {
  if (g.num_edges() > opts.max_edges || g.num_edges() > 64) {
    throw BudgetExceeded("exhaustive_decompose: " + std::to_string(g.num_edges()) +
                         " edges exceeds the budget of " + std::to_string(opts.max_edges));
  }
  auto masks = Exhaustive(g).run();
  if (!masks) return std::nullopt;
  std::vector<std::vector<EdgeId>> cycles;
  for (Mask m : *masks) {
    std::vector<EdgeId> c;
    for (; m; m &= m - 1) c.push_back(std::countr_zero(m));
    cycles.push_back(std::move(c));
  }
  return normalize_decomposition(g, std::move(cycles));
}

CycleDecomposition normalize_decomposition(const SignedGraph& g, std::vector<std::vector<EdgeId>> cycles) {
  CycleDecomposition d;
  for (auto& c : cycles) d.cycles.push_back(order_cycle(g, c));
  std::sort(d.cycles.begin(), d.cycles.end(), [](const auto& a, const auto& b) {
    return a.front() < b.front();
  });
  return d;
}

}  // namespace ecd
