#include "ecd/serialize.hpp"

#include "ecd/errors.hpp"
#include "ecd/graph_io.hpp"

namespace ecd {
namespace {

Json parse_doc(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw ParseError(0, std::string("invalid JSON: ") + err.what());
  }
}

}  // namespace

Json to_json(const CycleDecomposition& d) { return Json{{"cycles", d.cycles}}; }

CycleDecomposition parse_decomposition_json(std::string_view text) {
  const Json doc = parse_doc(text);
  if (!doc.is_object() || !doc.contains("cycles") || !doc["cycles"].is_array()) {
    throw ParseError(0, "expected an object with a \"cycles\" array");
  }
  CycleDecomposition d;
  int index = 0;
  for (const Json& c : doc["cycles"]) {
    if (!c.is_array()) throw ParseError(0, "cycles[" + std::to_string(index) + "] is not an array");
    std::vector<EdgeId> cycle;
    for (const Json& e : c) {
      if (!e.is_number_integer()) {
        throw ParseError(0, "cycles[" + std::to_string(index) + "] holds a non-integer edge id");
      }
      cycle.push_back(e.get<EdgeId>());
    }
    d.cycles.push_back(std::move(cycle));
    ++index;
  }
  return d;
}

Json to_json(const std::vector<TraceEntry>& trace) {
  Json out = Json::array();
  for (const TraceEntry& t : trace) {
    out.push_back({{"rule", t.rule}, {"instanceEdges", t.instance_edges}, {"detail", t.detail}, {"depth", t.depth}});
  }
  return out;
}

Json to_json(const MinorModel& m) {
  return Json{{"branchSets", m.branch_sets},
              {"branchTrees", m.branch_trees},
              {"connectors", m.connectors},
              {"switching", m.switching}};
}

Json to_json(const Embedding& emb) { return Json{{"rotation", emb.rotation}}; }

Embedding parse_embedding_json(std::string_view text) {
  const Json doc = parse_doc(text);
  if (!doc.is_object() || !doc.contains("rotation")) throw ParseError(0, "expected {\"rotation\": [...]}");
  try {
    return Embedding{doc["rotation"].get<std::vector<std::vector<int>>>()};
  } catch (const Json::exception& err) {
    throw ParseError(0, std::string("bad rotation: ") + err.what());
  }
}

Json to_json(const VerificationReport& r) {
  return Json{{"ok", r.ok},
              {"violation", to_string(r.violation)},
              {"cycleIndex", r.cycle_index},
              {"offending", r.offending},
              {"message", r.message}};
}

Json to_json(const Separation& s) {
  Json out{{"left", s.left}, {"right", s.right}, {"boundary", s.boundary}, {"order", s.order}, {"proper", s.proper}};
  if (s.parity) out["parity"] = *s.parity == SeparationParity::Odd ? "odd" : "even";
  return out;
}

Json to_json(const Necklace& n) { return Json{{"beads", n.beads}, {"splitIndex", n.split_index}}; }

Json to_json(const StructureCase& c) {
  Json out{{"case", to_string(c.kind)}, {"coverageViolation", c.coverage_violation}};
  if (c.apex) out["apex"] = *c.apex;
  if (c.embedding) out["embedding"] = to_json(*c.embedding);
  if (c.separation) out["separation"] = to_json(*c.separation);
  return out;
}

Json to_json(const PathSystem& ps) {
  Json paths = Json::array();
  for (const Path& p : ps.paths) paths.push_back({{"from", p.from}, {"to", p.to}, {"edges", p.edges}});
  return Json{{"paths", paths}};
}

Json to_json(const ValidityReport& r) {
  return Json{{"loopless", r.loopless},       {"connected", r.connected},
              {"twoConnected", r.two_connected}, {"eulerian", r.eulerian},
              {"signatureEven", r.signature_even}, {"admissible", r.admissible}};
}

Json to_json(const FamilySpec& s) {
  return Json{{"family", s.family}, {"n", s.n}, {"m", s.m}, {"seed", s.seed}};
}

FamilySpec parse_family_spec_json(std::string_view text) {
  const Json doc = parse_doc(text);
  if (!doc.is_object() || !doc.contains("family")) throw ParseError(0, "spec needs a \"family\" field");
  FamilySpec s;
  try {
    s.family = doc["family"].get<std::string>();
    s.n = doc.value("n", s.n);
    s.m = doc.value("m", s.m);
    s.seed = doc.value("seed", s.seed);
  } catch (const Json::exception& err) {
    throw ParseError(0, std::string("bad spec field: ") + err.what());
  }
  return s;
}

Json to_json(const ProbeReport& r) {
  Json rows = Json::array();
  for (const ProbeRow& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"m", row.m},
                    {"countAdmissible", row.count_admissible},
                    {"countOddK5Free", row.count_odd_k5_free},
                    {"countDecomposable", row.count_decomposable},
                    {"counterexamples", row.counterexamples},
                    {"oddK5NonDecomposable", row.odd_k5_nondecomposable}});
  }
  Json bad = Json::array();
  for (const SignedGraph& g : r.counterexample_graphs) bad.push_back(Json::parse(format_graph_json(g)));
  return Json{{"maxN", r.max_n}, {"maxM", r.max_m}, {"rows", rows}, {"counterexampleGraphs", bad}};
}

}  // namespace ecd
