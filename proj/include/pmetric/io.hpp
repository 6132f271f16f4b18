#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pmetric/distribution.hpp"
#include "pmetric/lipschitz.hpp"
#include "pmetric/pmspace.hpp"
#include "pmetric/triangle.hpp"

// JSON forms of the library types. Every reader throws Error(ParseError)
// naming the offending field; semantic errors in embedded values (a
// non-monotone jump list, say) are reported the same way.
//
//   Distribution  {"jumps": [[t, v], ...]}
//   TriangleFn    {"kind": "sum"|"max"|"conorm"|"pointwise", "tnorm": "min"|"prod"|"luk"}
//   PMSpace       {"points": [...], "triangle": TriangleFn,
//                  "distances": [{"x": label, "y": label, "dist": Distribution}, ...]}
//   ProbLipMap    {"values": {label: Distribution, ...}}
//   SelfMap       {"map": {label: label, ...}}
namespace pmetric::io {

using nlohmann::json;

json to_json(const Distribution& f);
json to_json(const TriangleFn& tf);
json to_json(const PMSpace& space);
json to_json(const ProbLipMap& f);
json to_json(const SelfMap& m);

Distribution distribution_from_json(const json& j, const std::string& where = "distribution");
TriangleFn triangle_from_json(const json& j, const std::string& where = "triangle");
PMSpace space_from_json(const json& j);
ProbLipMap map_from_json(const json& j);
SelfMap selfmap_from_json(const json& j);

TriangleKind parse_triangle_kind(const std::string& s);
TNormKind parse_tnorm_kind(const std::string& s);

/// Parses a whole file; syntax errors carry file, line and column.
json read_json_file(const std::filesystem::path& path);

}  // namespace pmetric::io
