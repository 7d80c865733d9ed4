#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ecd/decompose.hpp"
#include "ecd/errors.hpp"
#include "ecd/generate.hpp"
#include "ecd/graph_io.hpp"
#include "ecd/minor.hpp"
#include "ecd/oracle.hpp"
#include "ecd/paths.hpp"
#include "ecd/probe.hpp"
#include "ecd/recognition.hpp"
#include "ecd/serialize.hpp"

namespace {

constexpr int kUsage = 64;
constexpr int kDataError = 65;
constexpr int kNoInput = 66;
constexpr int kSoftware = 70;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ecd::FileError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw ecd::FileError("cannot read " + path);
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw ecd::FileError("cannot write " + path);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--terminals", "not an integer: '" + item + "'");
    }
  }
  return out;
}

int cmd_decompose(const std::string& graph_path, bool faithful, const std::string& trace_path) {
  const ecd::SignedGraph g = ecd::read_graph_file(graph_path);
  ecd::DecomposeOptions opts;
  opts.faithful = faithful;
  try {
    const auto result = ecd::decompose(g, opts);
    if (!trace_path.empty()) write_file(trace_path, ecd::to_json(result.trace).dump(2) + "\n");
    std::cout << ecd::to_json(result.decomposition).dump() << "\n";
    std::cerr << result.decomposition.cycles.size() << " cycles covering " << g.num_edges() << " edges\n";
    return 0;
  } catch (const ecd::InadmissibleInput& err) {
    std::cerr << err.what() << "\n" << ecd::to_json(err.report()).dump() << "\n";
    return 2;
  } catch (const ecd::OddMinorFound& err) {
    std::cout << ecd::to_json(err.model()).dump() << "\n";
    std::cerr << err.what() << "\n";
    return 3;
  } catch (const ecd::RuleExhausted& err) {
    std::cerr << err.what() << "\nstate: " << err.state() << "\ninstance:\n" << err.instance();
    return 4;
  }
}

int cmd_verify(const std::string& graph_path, const std::string& decomposition_path) {
  const ecd::SignedGraph g = ecd::read_graph_file(graph_path);
  const auto d = ecd::parse_decomposition_json(read_file(decomposition_path));
  const auto report = ecd::verify_decomposition(g, d);
  std::cout << ecd::to_json(report).dump() << "\n";
  return report.ok ? 0 : 1;
}

int cmd_classify(const std::string& graph_path) {
  const ecd::SignedGraph g = ecd::read_graph_file(graph_path);
  std::cout << ecd::to_json(ecd::structure_classify(g)).dump() << "\n";
  return 0;
}

int cmd_minor(const std::string& graph_path, const std::string& target) {
  const ecd::SignedGraph g = ecd::read_graph_file(graph_path);
  const ecd::MinorTarget t = target == "k3" ? ecd::MinorTarget::K3
                             : target == "k4" ? ecd::MinorTarget::K4
                                              : ecd::MinorTarget::K5;
  const auto r = ecd::odd_minor(g, t);
  switch (r.outcome) {
    case ecd::MinorOutcome::Found:
      std::cout << ecd::to_json(*r.model).dump() << "\n";
      break;
    case ecd::MinorOutcome::Absent:
      std::cout << "absent\n";
      break;
    case ecd::MinorOutcome::Unknown:
      std::cout << "unknown(budget)\n";
      break;
  }
  return 0;
}

int cmd_generate(ecd::FamilySpec spec, const std::string& spec_path, const std::string& format,
                 const std::string& out_path) {
  if (!spec_path.empty()) spec = ecd::parse_family_spec_json(read_file(spec_path));
  if (spec.family.empty()) throw CLI::ValidationError("--family", "required unless --spec is given");
  const ecd::SignedGraph g = ecd::generate(spec);
  const std::string text = format == "json" ? ecd::format_graph_json(g) + "\n" : ecd::format_graph_text(g);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  std::cerr << spec.family << ": " << g.num_vertices() << " vertices, " << g.num_edges() << " edges, admissible "
            << (ecd::validate_instance(g).admissible ? "yes" : "no") << "\n";
  return 0;
}

int cmd_probe(int max_n, int max_m, int jobs, const std::string& out_path, const std::string& json_path) {
  ecd::ProbeOptions opts;
  opts.jobs = jobs;
  const auto report = ecd::probe_conjecture(max_n, max_m, opts);
  const std::string csv = ecd::format_probe_csv(report);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_file(out_path, csv);
  }
  if (!json_path.empty()) write_file(json_path, ecd::to_json(report).dump(2) + "\n");
  long bad = 0;
  for (const auto& row : report.rows) bad += row.counterexamples;
  std::cerr << report.rows.size() << " rows, " << bad << " counterexamples\n";
  return 0;
}

int cmd_paths(const std::string& graph_path, const std::string& terminals) {
  const ecd::SignedGraph g = ecd::read_graph_file(graph_path);
  const auto t = parse_int_list(terminals);
  std::cout << ecd::to_json(ecd::pair_paths(g, t)).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Even cycle decompositions of signed Eulerian graphs"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok; decompose: 2 inadmissible input, 3 odd-K4 minor found, 4 no rule applies "
      "(--faithful); verify: 1 invalid decomposition; 64 usage error, 65 malformed input, "
      "66 unreadable file, 70 internal error or search budget exceeded.\n"
      "ECD_BUDGET_EDGES overrides the edge budget of the exhaustive search (default 20).");

  std::string graph, decomposition, trace, target = "k4", terminals, spec_path, format = "text", out, json_out;
  bool faithful = false;
  ecd::FamilySpec spec;
  spec.family.clear();
  int max_n = 5, max_m = 10, jobs = 1;

  auto* dec = app.add_subcommand("decompose", "Decompose a graph into even cycles (JSON on stdout)");
  dec->add_option("graph", graph, "Graph file (text or JSON)")->required();
  dec->add_flag("--faithful", faithful, "Fail instead of falling back to exhaustive search");
  dec->add_option("--trace", trace, "Write the rule trace as JSON to this file");

  auto* ver = app.add_subcommand("verify", "Check a decomposition against a graph");
  ver->add_option("graph", graph, "Graph file")->required();
  ver->add_option("decomposition", decomposition, "Decomposition JSON file")->required();

  auto* cls = app.add_subcommand("classify", "Report which structural case applies");
  cls->add_option("graph", graph, "Graph file")->required();

  auto* mnr = app.add_subcommand("minor", "Search for an odd K3, K4 or K5 minor");
  mnr->add_option("graph", graph, "Graph file")->required();
  mnr->add_option("--target", target, "k3, k4 or k5")->check(CLI::IsMember({"k3", "k4", "k5"}));

  auto* gen = app.add_subcommand("generate", "Generate an instance of a named family");
  gen->add_option("--family", spec.family, "Family name")->check(CLI::IsMember(ecd::family_names()));
  gen->add_option("--seed", spec.seed, "Random seed");
  gen->add_option("--n", spec.n, "Size parameter n (family dependent)");
  gen->add_option("--m", spec.m, "Size parameter m (family dependent, 0 = default)");
  gen->add_option("--spec", spec_path, "JSON spec {family, n, m, seed}; overrides the other flags");
  gen->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  gen->add_option("--out", out, "Output file (default stdout)");

  auto* prb = app.add_subcommand("probe", "Enumerate small instances and test decomposability");
  prb->add_option("--max-n", max_n, "Largest vertex count")->check(CLI::Range(2, 7));
  prb->add_option("--max-m", max_m, "Largest edge count")->check(CLI::Range(2, 20));
  prb->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 64));
  prb->add_option("--out", out, "CSV report file (default stdout)");
  prb->add_option("--json", json_out, "Also write a JSON report here");

  auto* pth = app.add_subcommand("paths", "Pair up terminals by edge-disjoint paths");
  pth->add_option("graph", graph, "Graph file")->required();
  pth->add_option("--terminals", terminals, "Comma-separated terminal vertices")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*dec) return cmd_decompose(graph, faithful, trace);
    if (*ver) return cmd_verify(graph, decomposition);
    if (*cls) return cmd_classify(graph);
    if (*mnr) return cmd_minor(graph, target);
    if (*gen) return cmd_generate(spec, spec_path, format, out);
    if (*prb) return cmd_probe(max_n, max_m, jobs, out, json_out);
    if (*pth) return cmd_paths(graph, terminals);
  } catch (const CLI::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const ecd::FileError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kNoInput;
  } catch (const ecd::ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kDataError;
  } catch (const ecd::PreconditionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kDataError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kSoftware;
  }
  return kUsage;
}
