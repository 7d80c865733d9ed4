#include "ecd/probe.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

#include "ecd/connectivity.hpp"
#include "ecd/errors.hpp"
#include "ecd/minor.hpp"

namespace ecd {
namespace {

struct Pairs {
  int n = 0;
  std::vector<std::pair<int, int>> list;
  std::vector<std::vector<int>> index;  // index[a][b], a != b

  explicit Pairs(int n_) : n(n_), index(static_cast<std::size_t>(n_), std::vector<int>(n_, -1)) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        index[a][b] = index[b][a] = static_cast<int>(list.size());
        list.emplace_back(a, b);
      }
    }
  }
};

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> relabel(const Pairs& pr, const std::vector<int>& mult, const std::vector<int>& perm) {
  std::vector<int> out(mult.size());
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const auto [a, b] = pr.list[i];
    out[pr.index[perm[a]][perm[b]]] = mult[i];
  }
  return out;
}

// Multiplicity vector -> graph with edges listed pair by pair.
SignedGraph unsigned_graph(const Pairs& pr, const std::vector<int>& mult) {
  SignedGraph g(pr.n);
  for (std::size_t i = 0; i < mult.size(); ++i) {
    for (int k = 0; k < mult[i]; ++k) g.add_edge(pr.list[i].first, pr.list[i].second, false);
  }
  return g;
}

// Signed class key per pair: 32 * odd + even. Canonical key of the class
// under relabelling and switching is the lexicographic minimum.
std::vector<int> signed_key(const Pairs& pr, const std::vector<int>& even, const std::vector<int>& odd,
                            const std::vector<std::vector<int>>& autos) {
  std::vector<int> best;
  const int switches = 1 << (pr.n - 1);
  for (const auto& perm : autos) {
    for (int x = 0; x < switches; ++x) {
      std::vector<int> key(even.size());
      for (std::size_t i = 0; i < even.size(); ++i) {
        const auto [a, b] = pr.list[i];
        const bool cross = ((x >> a) & 1) != ((x >> b) & 1);
        const int e = cross ? odd[i] : even[i];
        const int o = cross ? even[i] : odd[i];
        key[pr.index[perm[a]][perm[b]]] = 32 * o + e;
      }
      if (best.empty() || key < best) best = std::move(key);
    }
  }
  return best;
}

ProbeRow probe_cell(int n, int m, const ExhaustiveOptions& ex, std::vector<SignedGraph>* counterexamples) {
  ProbeRow row;
  row.n = n;
  row.m = m;
  const Pairs pr(n);
  const auto perms = all_permutations(n);
  const int np = static_cast<int>(pr.list.size());
  std::vector<int> mult(static_cast<std::size_t>(np), 0);

  auto handle_unsigned = [&]() {
    // Orderly: keep only the lexicographically largest relabelling.
    for (const auto& p : perms) {
      if (relabel(pr, mult, p) > mult) return;
    }
    const SignedGraph base = unsigned_graph(pr, mult);
    if (base.num_support_vertices() != n) return;
    const auto report = validate_instance(base);
    if (!report.admissible) return;
    std::vector<std::vector<int>> autos;
    for (const auto& p : perms) {
      if (relabel(pr, mult, p) == mult) autos.push_back(p);
    }
    // Odd counts per pair range over 0..mult[i]; every class appears.
    std::set<std::vector<int>> seen;
    std::vector<int> odd(static_cast<std::size_t>(np), 0);
    while (true) {
      int total = std::accumulate(odd.begin(), odd.end(), 0);
      if (total % 2 == 0) {
        std::vector<int> even(static_cast<std::size_t>(np));
        for (int i = 0; i < np; ++i) even[i] = mult[i] - odd[i];
        auto key = signed_key(pr, even, odd, autos);
        if (seen.insert(key).second) {
          SignedGraph g(n);
          for (int i = 0; i < np; ++i) {
            for (int k = 0; k < even[i]; ++k) g.add_edge(pr.list[i].first, pr.list[i].second, false);
            for (int k = 0; k < odd[i]; ++k) g.add_edge(pr.list[i].first, pr.list[i].second, true);
          }
          ++row.count_admissible;
          const auto minor = odd_minor(g, MinorTarget::K5);
          if (minor.outcome == MinorOutcome::Unknown) throw BudgetExceeded("probe: odd-K5 search over budget");
          const bool decomposable = exhaustive_decompose(g, ex).has_value();
          if (minor.outcome == MinorOutcome::Absent) {
            ++row.count_odd_k5_free;
            if (decomposable) {
              ++row.count_decomposable;
            } else {
              ++row.counterexamples;
              counterexamples->push_back(g);
            }
          } else if (!decomposable) {
            ++row.odd_k5_nondecomposable;
          }
        }
      }
      int i = 0;
      while (i < np && odd[i] == mult[i]) odd[i++] = 0;
      if (i == np) break;
      ++odd[i];
    }
  };

  // Compositions of m into np parts.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == np - 1) {
      mult[i] = left;
      handle_unsigned();
      return;
    }
    for (int k = left; k >= 0; --k) {
      mult[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (np > 0) rec(rec, 0, m);
  return row;
}

}  // namespace

ProbeReport probe_conjecture(int max_n, int max_m, ProbeOptions opts) {
  if (max_n > 7) throw PreconditionError("probe_conjecture supports max_n <= 7");
  if (max_m > opts.exhaustive.max_edges) throw PreconditionError("max_m exceeds the exhaustive budget");
  ProbeReport report;
  report.max_n = max_n;
  report.max_m = max_m;
  struct Cell {
    int n, m;
    ProbeRow row;
    std::vector<SignedGraph> bad;
  };
  std::vector<Cell> cells;
  for (int n = 2; n <= max_n; ++n) {
    for (int m = 2; m <= max_m; ++m) cells.push_back({n, m, {}, {}});
  }
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (Cell& c : cells) c.row = probe_cell(c.n, c.m, opts.exhaustive, &c.bad);
  } else {
    std::size_t next = 0;
    while (next < cells.size()) {
      std::vector<std::future<void>> running;
      for (int j = 0; j < jobs && next < cells.size(); ++j, ++next) {
        Cell* c = &cells[next];
        running.push_back(std::async(std::launch::async, [c, &opts] {
          c->row = probe_cell(c->n, c->m, opts.exhaustive, &c->bad);
        }));
      }
      for (auto& f : running) f.get();
    }
  }
  for (Cell& c : cells) {
    if (c.row.count_admissible == 0) continue;
    report.rows.push_back(c.row);
    for (auto& g : c.bad) report.counterexample_graphs.push_back(std::move(g));
  }
  return report;
}

std::string format_probe_csv(const ProbeReport& r) {
  std::ostringstream os;
  os << "n,m,count_admissible,count_oddK5free,count_decomposable,counterexamples\n";
  for (const ProbeRow& row : r.rows) {
    os << row.n << ',' << row.m << ',' << row.count_admissible << ',' << row.count_odd_k5_free << ','
       << row.count_decomposable << ',' << row.counterexamples << '\n';
  }
  return os.str();
}

}  // namespace ecd
