#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecd/connectivity.hpp"
#include "ecd/embedding.hpp"
#include "ecd/minor.hpp"
#include "ecd/necklace.hpp"
#include "ecd/oracle.hpp"
#include "ecd/signed_graph.hpp"

namespace ecd {

class InadmissibleInput : public std::invalid_argument {
 public:
  InadmissibleInput(const std::string& what, ValidityReport report)
      : std::invalid_argument(what), report_(report) {}
  const ValidityReport& report() const { return report_; }

 private:
  ValidityReport report_;
};

class OddMinorFound : public std::runtime_error {
 public:
  explicit OddMinorFound(MinorModel model)
      : std::runtime_error("input contains an odd-K4 minor"), model_(std::move(model)) {}
  const MinorModel& model() const { return model_; }

 private:
  MinorModel model_;
};

// Faithful mode reached an instance that no reduction rule handles. `instance`
// is the stuck subinstance in text form; `state` describes what was tried.
class RuleExhausted : public std::runtime_error {
 public:
  RuleExhausted(const std::string& what, std::string instance, std::string state)
      : std::runtime_error(what), instance_(std::move(instance)), state_(std::move(state)) {}
  const std::string& instance() const { return instance_; }
  const std::string& state() const { return state_; }

 private:
  std::string instance_;
  std::string state_;
};

struct TraceEntry {
  std::string rule;
  int instance_edges = 0;
  std::string detail;
  int depth = 0;
};

struct DecomposeResult {
  CycleDecomposition decomposition;
  std::vector<TraceEntry> trace;
  // Outcome of the odd-K4 pre-check; Unknown means the search was skipped
  // for size and the driver ran anyway.
  MinorOutcome minor_check = MinorOutcome::Absent;
};

// Greedy peeling on an Eulerian loopless graph without odd cycles: walk until
// a vertex repeats and cut off the closed part. Throws PreconditionError when
// the graph is not Eulerian, has a loop, or has an odd cycle.
CycleDecomposition decompose_eulerian_bipartite(const SignedGraph& g);

// Works on the even-subdivided graph: strips repeated parallel pairs, splits
// the apex's neighbours on one side by edge multiplicity, closes paired paths
// through the apex, emits the apex digons, and peels the bipartite rest.
// Throws PreconditionError if g is not admissible or not almost bipartite.
CycleDecomposition decompose_almost_bipartite(const SignedGraph& g);

// Returns the faces of the dual colour class that holds no odd face. Throws
// PreconditionError when g is not admissible or the embedding is not planar
// or does not have exactly two odd faces.
CycleDecomposition decompose_planar_two_odd(const SignedGraph& g, const Embedding& emb);

// Subinstances produced by a separation splice. Virtual edges carry a token:
// cycles through a token in different parts are cut open and glued.
struct SplicePart {
  EdgeSubgraph sub;
  std::vector<int> token;  // per local edge, -1 for real edges
};

struct Splice {
  std::string variant;
  SignedGraph graph;  // g, re-signed when the construction calls for it
  std::vector<SplicePart> parts;
  // Cycles and token paths settled without recursion, in g's edge ids.
  std::vector<std::vector<EdgeId>> direct_cycles;
  std::vector<std::pair<int, std::vector<EdgeId>>> direct_paths;
};

// Odd 2-separation whose sides are connected and not inside an odd digon.
// Bipartite side: re-signed to all even, the other side gets an even virtual
// edge and the bipartite side contributes a path plus peeled cycles. Else
// each side gets one virtual edge signed like the side's odd-edge count.
Splice splice_odd_2sep(const SignedGraph& g, const Separation& sep);

// Joins part decompositions (local ids) back into cycles of g.
std::vector<std::vector<EdgeId>> recombine(const Splice& s,
                                           const std::vector<std::vector<std::vector<EdgeId>>>& part_cycles);

enum class EvenSpliceKind { Splice, AllBeadsEven, Bermuda };

struct EvenSplice {
  EvenSpliceKind kind = EvenSpliceKind::Splice;
  Splice splice;     // kind == Splice
  Necklace necklace; // the necklace used (every kind)
  Separation used;   // the separation the necklace was built from
};

// Even 2-separation with connected sides, neither an odd digon. Searches the
// necklaces of g's even 2-separations (the given one first) for a cyclic run
// of beads whose two sides both hold an odd bead and neither is an odd digon.
// Odd-sized sides each get an even and an odd virtual edge; even-sized sides
// get two even ones. A necklace of even beads is reported as AllBeadsEven;
// when no necklace has such a run, g is a Bermuda triangle.
EvenSplice splice_even_2sep(const SignedGraph& g, const Separation& sep);

// 3-separation with `sep.right` bipartite, connected and at least 4 edges.
// Two boundary vertices of odd degree on the left: the part is the left side
// plus a fan of two paths inside the right side; the rest of the right side is
// peeled. Otherwise the part is the left side plus an even virtual triangle,
// translated back in `recombine_3sep`.
Splice reduce_3sep(const SignedGraph& g, const Separation& sep);

// Recombination for reduce_3sep (handles both variants).
std::vector<std::vector<EdgeId>> recombine_3sep(const Splice& s, const Separation& sep,
                                                const std::vector<std::vector<EdgeId>>& part_cycles);

struct DecomposeOptions {
  bool faithful = false;
  MinorSearchOptions minor;
  ExhaustiveOptions exhaustive = default_exhaustive_options();
};

// Main driver. Rules, in order: empty graph; split into blocks; strip an even
// parallel pair; suppress degree-2 vertices; base cases (bipartite, almost
// bipartite, planar with two odd faces); odd 2-separation; even
// 2-separation; Bermuda triangle; 3-separation with a bipartite side;
// exhaustive fallback. In faithful mode the fallback only runs for the
// Bermuda configuration whose handling the construction leaves to a planar
// argument; elsewhere RuleExhausted is thrown.
// Throws InadmissibleInput, OddMinorFound.
DecomposeResult decompose(const SignedGraph& g, DecomposeOptions opts = {});

}  // namespace ecd
