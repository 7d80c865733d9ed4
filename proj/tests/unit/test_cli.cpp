#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ecd/graph_io.hpp"
#include "ecd/oracle.hpp"
#include "ecd/serialize.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ECD_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(ECD_FIXTURES) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "ecd_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("decompose then verify") {
  const auto r = run("decompose " + fixture("bermuda_square.sg") + " --faithful --trace " +
                     scratch("trace.json").string());
  REQUIRE(r.code == 0);
  const auto d = ecd::parse_decomposition_json(r.out);
  const auto g = ecd::read_graph_file(fixture("bermuda_square.sg"));
  CHECK(ecd::verify_decomposition(g, d).ok);
  const auto trace = ecd::Json::parse(slurp(scratch("trace.json")));
  CHECK(trace.is_array());
  CHECK_FALSE(trace.empty());

  std::ofstream(scratch("bermuda_decomp.json")) << r.out;
  CHECK(run("verify " + fixture("bermuda_square.sg") + " " + scratch("bermuda_decomp.json").string()).code == 0);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify " + fixture("c4.sg") + " " + fixture("c4_decomp.json")).code == 0);
  const auto bad = run("verify " + fixture("c4.sg") + " " + fixture("c4_bad_decomp.json"));
  CHECK(bad.code == 1);
  CHECK(ecd::Json::parse(bad.out)["ok"] == false);
}

TEST_CASE("decompose error exit codes") {
  CHECK(run("decompose " + fixture("k32.sg")).code == 2);
  const auto minor = run("decompose " + fixture("doubled_odd_k4.json"));
  CHECK(minor.code == 3);
  CHECK(ecd::Json::parse(minor.out).contains("branchSets"));
  CHECK(run("decompose " + fixture("malformed.sg")).code == 65);
  CHECK(run("decompose " + fixture("missing.sg")).code == 66);
  CHECK(run("decompose").code == 64);
  CHECK(run("no-such-command").code == 64);
  CHECK(run("--help").code == 0);
}

TEST_CASE("classify and minor") {
  const auto c = run("classify " + fixture("k32.sg"));
  REQUIRE(c.code == 0);
  CHECK(c.out.find("IsK32") != std::string::npos);
  const auto m = run("minor " + fixture("k32.sg") + " --target k4");
  CHECK(m.code == 0);
  CHECK(m.out == "absent\n");
  const auto k3 = run("minor " + fixture("k32.sg") + " --target k3");
  CHECK(ecd::Json::parse(k3.out).contains("connectors"));
  CHECK(run("minor " + fixture("k32.sg") + " --target k9").code == 64);
}

TEST_CASE("generate is reproducible") {
  const auto a = run("generate --family bermuda --m 4 --seed 3");
  const auto b = run("generate --family bermuda --m 4 --seed 3");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(ecd::parse_graph(a.out).num_edges() == 8);
  std::ofstream(scratch("spec.json")) << R"({"family": "doubled-graph", "n": 4, "m": 0, "seed": 2})";
  const auto j = run("generate --spec " + scratch("spec.json").string() + " --format json");
  REQUIRE(j.code == 0);
  CHECK(ecd::Json::parse(j.out).contains("edges"));
  CHECK(run("generate --family nope").code == 64);
}

TEST_CASE("probe and paths") {
  const auto p = run("probe --max-n 4 --max-m 6");
  REQUIRE(p.code == 0);
  CHECK(p.out.rfind("n,m,count_admissible", 0) == 0);
  CHECK(run("probe --max-n 9").code == 64);
  const auto t = run("paths " + fixture("c4.sg") + " --terminals 0,2");
  REQUIRE(t.code == 0);
  CHECK(ecd::Json::parse(t.out)["paths"].size() == 1);
  CHECK(run("paths " + fixture("c4.sg") + " --terminals 0,x").code == 64);
  CHECK(run("paths " + fixture("c4.sg") + " --terminals 0,1,2").code == 65);
}
