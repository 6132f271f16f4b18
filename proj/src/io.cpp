#include "pmetric/io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "pmetric/error.hpp"

namespace pmetric::io {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

}  // namespace

json to_json(const Distribution& f) {
  json jumps = json::array();
  for (const auto& j : f.jumps()) jumps.push_back(json::array({j.location, j.level}));
  return json{{"jumps", std::move(jumps)}};
}

json to_json(const TriangleFn& tf) {
  return json{{"kind", std::string(to_string(tf.kind))},
              {"tnorm", std::string(to_string(tf.tnorm.kind))}};
}

json to_json(const PMSpace& space) {
  json distances = json::array();
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = x + 1; y < space.size(); ++y) {
      distances.push_back(
          json{{"x", space.label(x)}, {"y", space.label(y)}, {"dist", to_json(space(x, y))}});
    }
  }
  return json{{"points", space.points()},
              {"triangle", to_json(space.triangle())},
              {"distances", std::move(distances)}};
}

json to_json(const ProbLipMap& f) {
  json values = json::object();
  for (const auto& [label, d] : f.values) values[label] = to_json(d);
  return json{{"values", std::move(values)}};
}

json to_json(const SelfMap& m) {
  json mapping = json::object();
  for (const auto& [from, to] : m.mapping) mapping[from] = to;
  return json{{"map", std::move(mapping)}};
}

Distribution distribution_from_json(const json& j, const std::string& where) {
  const json& jumps = field(j, "jumps", where);
  if (!jumps.is_array()) fail(where + ".jumps", "expected an array");
  std::vector<Jump> out;
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    const json& p = jumps[i];
    const std::string at = where + ".jumps[" + std::to_string(i) + "]";
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      fail(at, "expected [location, level]");
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  try {
    return make_step(std::move(out));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

TriangleKind parse_triangle_kind(const std::string& s) {
  for (auto k : kAllTriangleKinds) {
    if (to_string(k) == s) return k;
  }
  fail("triangle.kind", "unknown construction \"" + s + "\"");
}

TNormKind parse_tnorm_kind(const std::string& s) {
  for (auto k : kAllTNorms) {
    if (to_string(k) == s) return k;
  }
  fail("triangle.tnorm", "unknown t-norm \"" + s + "\"");
}

TriangleFn triangle_from_json(const json& j, const std::string& where) {
  return TriangleFn{parse_triangle_kind(string_field(j, "kind", where)),
                    TNorm{parse_tnorm_kind(string_field(j, "tnorm", where))}};
}

PMSpace space_from_json(const json& j) {
  const json& pts = field(j, "points", "space");
  if (!pts.is_array()) fail("points", "expected an array of labels");
  std::vector<std::string> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].is_string()) fail("points[" + std::to_string(i) + "]", "expected a string");
    points.push_back(pts[i].get<std::string>());
  }
  const std::size_t n = points.size();
  if (n == 0) fail("points", "a space needs at least one point");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(points[i], i).second) fail("points", "duplicate label \"" + points[i] + "\"");
  }
  const TriangleFn tf = triangle_from_json(field(j, "triangle", "space"));

  const json& dists = field(j, "distances", "space");
  if (!dists.is_array()) fail("distances", "expected an array");
  std::vector<std::optional<Distribution>> dense(n * n);
  for (std::size_t e = 0; e < dists.size(); ++e) {
    const std::string at = "distances[" + std::to_string(e) + "]";
    const json& entry = dists[e];
    const std::string x = string_field(entry, "x", at);
    const std::string y = string_field(entry, "y", at);
    const auto ix = index.find(x);
    const auto iy = index.find(y);
    if (ix == index.end()) fail(at + ".x", "unknown point \"" + x + "\"");
    if (iy == index.end()) fail(at + ".y", "unknown point \"" + y + "\"");
    if (ix->second == iy->second) fail(at, "diagonal entry (" + x + ", " + x + ") must be omitted");
    const auto [a, b] = std::minmax(ix->second, iy->second);
    auto& slot = dense[a * n + b];
    if (slot) fail(at, "duplicate pair (" + x + ", " + y + ")");
    slot = distribution_from_json(field(entry, "dist", at), at + ".dist");
  }
  std::vector<Distribution> upper;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!dense[a * n + b]) fail("distances", "missing pair (" + points[a] + ", " + points[b] + ")");
      upper.push_back(*dense[a * n + b]);
    }
  }
  return PMSpace(std::move(points), tf, std::move(upper));
}

ProbLipMap map_from_json(const json& j) {
  const json& values = field(j, "values", "map");
  if (!values.is_object()) fail("values", "expected an object keyed by point label");
  ProbLipMap out;
  for (const auto& [label, d] : values.items()) {
    out.values.emplace(label, distribution_from_json(d, "values." + label));
  }
  return out;
}

SelfMap selfmap_from_json(const json& j) {
  const json& mapping = field(j, "map", "selfmap");
  if (!mapping.is_object()) fail("map", "expected an object keyed by point label");
  SelfMap out;
  for (const auto& [from, to] : mapping.items()) {
    if (!to.is_string()) fail("map." + from, "expected a point label");
    out.mapping.emplace(from, to.get<std::string>());
  }
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path.string(), "cannot open file");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col), "malformed JSON");
  }
}

}  // namespace pmetric::io
