#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecd/signed_graph.hpp"

namespace ecd {

// A partition of the edge ids into even cycles; each cycle is listed in walk
// order.
struct CycleDecomposition {
  std::vector<std::vector<EdgeId>> cycles;
};

enum class Violation { None, NotAPartition, NotACycle, OddCycle };

std::string to_string(Violation v);

struct VerificationReport {
  bool ok = true;
  Violation violation = Violation::None;
  int cycle_index = -1;            // offending cycle, when applicable
  std::vector<EdgeId> offending;   // offending edge ids
  std::string message;
};

// Checks the partition property, cycle-hood (length >= 2, closed, no repeated
// vertex or edge) and even parity of each cycle, in that order. Shares no
// code with the decomposition routines.
VerificationReport verify_decomposition(const SignedGraph& g, const CycleDecomposition& d);

struct ExhaustiveOptions {
  int max_edges = 20;
};

// Default edge budget: 20, or the value of ECD_BUDGET_EDGES when set.
ExhaustiveOptions default_exhaustive_options();

// Backtracking search: cover the smallest unused edge with an even cycle of
// the residual graph, shortest cycles first; residual edge sets that failed
// are memoised, and a residual component with an odd number of odd edges
// prunes the branch. Throws BudgetExceeded above max_edges. Cycles come back
// in walk order, sorted by their smallest edge.
std::optional<CycleDecomposition> exhaustive_decompose(const SignedGraph& g,
                                                       ExhaustiveOptions opts = default_exhaustive_options());

// Sorts cycles into walk order (smallest edge first) and orders the list by
// smallest edge. Throws PreconditionError if an entry is not a cycle.
CycleDecomposition normalize_decomposition(const SignedGraph& g, std::vector<std::vector<EdgeId>> cycles);

}  // namespace ecd
