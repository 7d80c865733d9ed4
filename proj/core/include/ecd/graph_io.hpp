#pragma once

#include <string>
#include <string_view>

#include "ecd/signed_graph.hpp"

namespace ecd {

// Text form: first line "n m", then m lines "u v s" with s in {0,1}.
// Blank lines are ignored. Errors carry the 1-based line number.
SignedGraph parse_graph_text(std::string_view text);
std::string format_graph_text(const SignedGraph& g);

// JSON form: {"n": int, "edges": [[u, v, s], ...]}.
SignedGraph parse_graph_json(std::string_view text);
std::string format_graph_json(const SignedGraph& g);

// Dispatches on the first non-blank character ('{' selects JSON).
SignedGraph parse_graph(std::string_view text);

// Throws FileError if the file cannot be read, ParseError if it is malformed.
SignedGraph read_graph_file(const std::string& path);

}  // namespace ecd
