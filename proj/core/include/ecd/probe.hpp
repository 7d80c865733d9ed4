#pragma once

#include <string>
#include <vector>

#include "ecd/oracle.hpp"
#include "ecd/signed_graph.hpp"

namespace ecd {

struct ProbeRow {
  int n = 0;
  int m = 0;
  long count_admissible = 0;
  long count_odd_k5_free = 0;
  long count_decomposable = 0;
  long counterexamples = 0;
  // Admissible classes with an odd-K5 minor and no even cycle decomposition.
  long odd_k5_nondecomposable = 0;
};

struct ProbeReport {
  int max_n = 0;
  int max_m = 0;
  std::vector<ProbeRow> rows;  // (n, m) with at least one admissible class
  std::vector<SignedGraph> counterexample_graphs;
};

struct ProbeOptions {
  int jobs = 1;
  ExhaustiveOptions exhaustive = default_exhaustive_options();
};

// Enumerates loopless 2-connected Eulerian signed multigraphs with exactly n
// vertices (2 <= n <= max_n) and m edges (m <= max_m) whose odd-edge count is
// even, one per class under vertex relabelling and switching. Each class is
// tested for an odd-K5 minor and, when free of one, for an even cycle
// decomposition. Rows are ordered by (n, m); output does not depend on `jobs`.
// Throws PreconditionError for max_n > 7.
ProbeReport probe_conjecture(int max_n, int max_m, ProbeOptions opts = {});

// CSV with header n,m,count_admissible,count_oddK5free,count_decomposable,counterexamples.
std::string format_probe_csv(const ProbeReport& r);

}  // namespace ecd
