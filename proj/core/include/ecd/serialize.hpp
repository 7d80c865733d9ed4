#pragma once

#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ecd/connectivity.hpp"
#include "ecd/decompose.hpp"
#include "ecd/embedding.hpp"
#include "ecd/generate.hpp"
#include "ecd/minor.hpp"
#include "ecd/necklace.hpp"
#include "ecd/oracle.hpp"
#include "ecd/paths.hpp"
#include "ecd/probe.hpp"
#include "ecd/recognition.hpp"

namespace ecd {

using Json = nlohmann::json;

// {"cycles": [[edge id, ...], ...]}
Json to_json(const CycleDecomposition& d);
// Throws ParseError; semantic errors name the offending cycle entry.
CycleDecomposition parse_decomposition_json(std::string_view text);

// [{"rule": ..., "instanceEdges": m, "detail": ..., "depth": d}, ...]
Json to_json(const std::vector<TraceEntry>& trace);

Json to_json(const MinorModel& m);
// {"rotation": [[dart, ...] per vertex]}; dart 2e is the u-end of edge e.
Json to_json(const Embedding& emb);
Embedding parse_embedding_json(std::string_view text);
Json to_json(const VerificationReport& r);
Json to_json(const Separation& s);
Json to_json(const Necklace& n);
Json to_json(const StructureCase& c);
Json to_json(const PathSystem& ps);
Json to_json(const ValidityReport& r);

Json to_json(const FamilySpec& s);
FamilySpec parse_family_spec_json(std::string_view text);

Json to_json(const ProbeReport& r);

}  // namespace ecd
