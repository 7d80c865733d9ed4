#include "ecd/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "ecd/errors.hpp"

namespace ecd {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, int line, const char* what) {
  long long value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) +
                               "'");
  }
  return value;
}

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

}  // namespace

SignedGraph parse_graph_text(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++lineno;
    std::string_view line = text.substr(pos, nl - pos);
    if (!split_ws(line).empty()) lines.emplace_back(lineno, line);
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError(1, "empty input, expected header 'n m'");

  auto header = split_ws(lines[0].second);
  if (header.size() != 2) throw ParseError(lines[0].first, "header must be 'n m'");
  const long long n = parse_int(header[0], lines[0].first, "vertex count");
  const long long m = parse_int(header[1], lines[0].first, "edge count");
  if (n < 0 || m < 0) throw ParseError(lines[0].first, "counts must be nonnegative");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const int at = lines.size() - 1 > static_cast<std::size_t>(m)
                       ? lines[static_cast<std::size_t>(m) + 1].first
                       : lineno;
    throw ParseError(at, "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));
  }

  SignedGraph g(static_cast<int>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int ln = lines[i].first;
    auto tok = split_ws(lines[i].second);
    if (tok.size() != 3) throw ParseError(ln, "edge line must be 'u v s'");
    const long long u = parse_int(tok[0], ln, "endpoint");
    const long long v = parse_int(tok[1], ln, "endpoint");
    const long long s = parse_int(tok[2], ln, "sign");
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(ln, "endpoint out of range");
    if (s != 0 && s != 1) throw ParseError(ln, "sign must be 0 or 1");
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), s == 1);
  }
  return g;
}

std::string format_graph_text(const SignedGraph& g) {
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << ' ' << (e.odd ? 1 : 0) << '\n';
  return os.str();
}

SignedGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(line_of_offset(text, err.byte > 0 ? err.byte - 1 : 0), err.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw ParseError(1, "expected object with keys 'n' and 'edges'");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0) {
    throw ParseError(1, "'n' must be a nonnegative integer");
  }
  if (!doc["edges"].is_array()) throw ParseError(1, "'edges' must be an array");
  const long long n = doc["n"].get<long long>();
  SignedGraph g(static_cast<int>(n));
  const auto& edges = doc["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const std::string where = "edges[" + std::to_string(i) + "]: ";
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer()) {
      throw ParseError(0, where + "expected [u, v, s]");
    }
    const long long u = e[0].get<long long>();
    const long long v = e[1].get<long long>();
    const long long s = e[2].get<long long>();
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(0, where + "endpoint out of range");
    if (s != 0 && s != 1) throw ParseError(0, where + "sign must be 0 or 1");
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), s == 1);
  }
  return g;
}

std::string format_graph_json(const SignedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.odd ? 1 : 0});
  nlohmann::json doc = {{"n", g.num_vertices()}, {"edges", edges}};
  return doc.dump() + "\n";
}

SignedGraph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

SignedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace ecd
