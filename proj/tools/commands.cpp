#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "pmetric/io.hpp"
#include "pmetric/pmetric.hpp"

namespace pmetric::cli {
namespace {

namespace fs = std::filesystem;

PMSpace load_space(const std::string& path) { return io::space_from_json(io::read_json_file(path)); }

Distribution load_distribution(const std::string& path) {
  return io::distribution_from_json(io::read_json_file(path), fs::path(path).filename().string());
}

std::string base(const std::string& path) { return fs::path(path).filename().string(); }

void describe(Emitter& e, const PMSpace& s) {
  e.field("points", s.size());
  e.field("triangle", to_string(s.triangle()));
}

bool is_heaviside(const Distribution& f) { return f.size() == 1 && f.jumps()[0].level == 1.0; }

// Largest amount by which the grid oracle leaves the band
// [exact(m - w), exact(m + w)] at the cell midpoints m.
double oracle_excess(const Distribution& exact, const Distribution& oracle, double t_max, int grid,
                     double w) {
  const double step = t_max / grid;
  double excess = 0.0;
  for (int k = 1; k <= grid; ++k) {
    const double m = (k - 0.5) * step;
    const double o = eval(oracle, m);
    excess = std::max(excess, eval(exact, std::max(0.0, m - w)) - o);
    excess = std::max(excess, o - eval(exact, m + w));
  }
  return excess;
}

}  // namespace

void check_config(const RunConfig& cfg) {
  if (!(cfg.bisect_tol > 0.0 && cfg.bisect_tol < cfg.assert_tol && cfg.assert_tol < 1.0)) {
    throw Error(ErrorCode::OutOfRange, "tolerances must satisfy 0 < bisect-tol < assert-tol < 1");
  }
  if (cfg.oracle_grid < 2) throw Error(ErrorCode::OutOfRange, "grid must be >= 2");
}

int cmd_validate(const RunConfig&, Emitter& e, const std::string& path) {
  e.field("input", base(path));
  const PMSpace s = load_space(path);
  describe(e, s);
  const auto r = validate(s);
  e.heading("Violations");
  e.field("violations", r.violations.size());
  for (const auto& v : r.violations) {
    if (v.axiom == 1) {
      e.record("violation", {{"axiom", 1}, {"x", s.label(v.x)}, {"y", s.label(v.y)}});
    } else {
      e.record("violation",
               {{"axiom", 3}, {"x", s.label(v.x)}, {"y", s.label(v.y)}, {"z", s.label(v.z)}});
    }
  }
  e.field("valid", r.ok());
  return r.ok() ? kExitOk : kExitViolation;
}

int cmd_levy(const RunConfig& cfg, Emitter& e, const std::string& a, const std::string& b) {
  e.field("input_a", base(a));
  e.field("input_b", base(b));
  const Distribution f = load_distribution(a);
  const Distribution g = load_distribution(b);
  const LevyResult r = levy_distance(f, g, cfg.bisect_tol);
  e.field("value", r.value);
  e.field("lower", r.lower);
  e.field("upper", r.upper);
  e.field("iterations", r.iterations);
  if (is_heaviside(f) && is_heaviside(g)) {
    const double cf = heaviside_closed_form(f.jumps()[0].location, g.jumps()[0].location);
    const bool agrees = std::abs(cf - r.value) <= cfg.assert_tol;
    e.field("closed_form", cf);
    e.field("closed_form_agrees", agrees);
    if (!agrees) return kExitViolation;
  }
  return kExitOk;
}

int cmd_star(const RunConfig& cfg, Emitter& e, const StarArgs& args) {
  e.field("input_a", base(args.a));
  e.field("input_b", base(args.b));
  const TriangleFn tf{io::parse_triangle_kind(args.kind), TNorm{io::parse_tnorm_kind(args.tnorm)}};
  e.field("triangle", to_string(tf));
  const Distribution f = load_distribution(args.a);
  const Distribution g = load_distribution(args.b);
  const Distribution result = star(tf, f, g);
  e.field("result", io::to_json(result));

  const double t_max = default_oracle_t_max(f, g);
  const double window = t_max / cfg.oracle_grid;
  const Distribution oracle = star_oracle(tf, f, g, cfg.oracle_grid, t_max);
  const double excess = oracle_excess(result, oracle, t_max, cfg.oracle_grid, window);
  const bool agrees = excess <= cfg.assert_tol;
  e.heading("Grid oracle");
  e.field("oracle_t_max", t_max);
  e.field("oracle_window", window);
  e.field("oracle_excess", excess);
  e.field("oracle_agrees", agrees);
  return agrees ? kExitOk : kExitViolation;
}

int cmd_report(const RunConfig& cfg, Emitter& e, const std::string& path) {
  e.field("input", base(path));
  const PMSpace s = load_space(path);
  describe(e, s);
  const MetrizationReport r = metrization_report(s, cfg.bisect_tol);
  e.field("k", r.k);
  e.field("tolerance", r.tolerance);
  e.matrix("sigma", s.points(), r.sigma);
  e.matrix("lower", s.points(), r.lower);
  const double gap = s.size() > 0 ? (r.sigma - r.lower).cwiseAbs().maxCoeff() : 0.0;
  e.heading("Sandwich lower <= sigma <= k*lower");
  e.field("max_sigma_minus_lower", gap);
  e.field("sigma_equals_lower", gap <= cfg.assert_tol);
  e.field("violations", r.violations.size());
  for (const auto& v : r.violations) {
    e.record("violation", {{"x", s.label(v.x)},
                           {"y", s.label(v.y)},
                           {"side", v.upper_side ? "upper" : "lower"}});
  }
  e.field("sandwich_holds", r.ok());
  return r.ok() ? kExitOk : kExitViolation;
}

int cmd_fixpoint(const RunConfig& cfg, Emitter& e, const FixpointArgs& args) {
  e.field("input", base(args.space));
  e.field("map", base(args.map));
  const PMSpace s = load_space(args.space);
  const SelfMap m = io::selfmap_from_json(io::read_json_file(args.map));
  describe(e, s);
  e.field("q", args.q);
  e.field("x0", args.x0);
  e.field("max_iter", args.max_iter);
  const std::size_t x0 = s.index_of(args.x0);
  const FixpointCertificate c =
      fixpoint_iterate(s, m, args.q, x0, args.max_iter, cfg.assert_tol, cfg.bisect_tol);
  e.field("k", c.k);
  e.field("kq", c.k * c.q);
  e.field("fixed_point", s.label(c.fixed_point));
  e.field("steps", c.iterates.size() - 1);
  e.heading("Iterates: achieved d_L(D(x_n, x*), H_0) against the a priori bound");
  bool monotone = true;
  for (std::size_t n = 0; n < c.iterates.size(); ++n) {
    e.record("step", {{"n", n},
                      {"point", s.label(c.iterates[n])},
                      {"achieved", c.achieved[n]},
                      {"bound", c.bounds[n]},
                      {"ok", c.achieved[n] <= c.bounds[n] + c.tolerance}});
    if (n > 0 && c.bounds[n] > c.bounds[n - 1]) monotone = false;
  }
  e.field("bounds_monotone", monotone);
  e.field("unique_fixed_point", true);
  e.field("certificate_holds", c.holds());
  return c.holds() ? kExitOk : kExitViolation;
}

int cmd_envelope(const RunConfig&, Emitter& e, const EnvelopeArgs& args) {
  e.field("input", base(args.space));
  e.field("data", base(args.data));
  const PMSpace s = load_space(args.space);
  const ProbLipMap f = io::map_from_json(io::read_json_file(args.data));
  describe(e, s);
  std::vector<std::size_t> subset;
  if (args.subset.empty()) {
    subset.resize(s.size());
    std::iota(subset.begin(), subset.end(), 0);
  } else {
    for (const auto& label : args.subset) subset.push_back(s.index_of(label));
  }
  std::string joined;
  for (std::size_t i : subset) joined += (joined.empty() ? "" : ",") + s.label(i);
  e.field("subset", joined);

  const ProbLipMap env = envelope(s, f, subset);
  e.heading("Envelope");
  for (const auto& p : s.points()) e.record("value", {{"x", p}, {"dist", io::to_json(env.at(p))}});
  const auto lip = check_lip1(s, env);
  e.field("lip1_violations", lip.violations.size());
  e.field("lip1_holds", lip.ok());
  if (args.out) {
    std::ofstream out(*args.out, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, *args.out + ": cannot write file");
    out << io::to_json(env).dump(2) << '\n';
    e.field("written", base(*args.out));
  }
  return lip.ok() ? kExitOk : kExitViolation;
}

int cmd_neighborhood(const RunConfig& cfg, Emitter& e, const NeighborhoodArgs& args) {
  e.field("input", base(args.space));
  const PMSpace s = load_space(args.space);
  describe(e, s);
  e.field("x", args.x);
  e.field("t", args.t);
  const std::size_t x = s.index_of(args.x);
  const auto nbhd = strong_neighborhood(s, x, args.t);
  e.heading("Members: D(x,y)(t) > 1 - t against d_L(D(x,y), H_0) < t");
  for (std::size_t y = 0; y < s.size(); ++y) {
    const LevyResult r = distance_to_neutral(s, x, y, cfg.bisect_tol);
    e.record("point", {{"y", s.label(y)},
                       {"dist_at_t", eval(s(x, y), args.t)},
                       {"levy_to_neutral", r.value},
                       {"in_neighborhood", std::binary_search(nbhd.begin(), nbhd.end(), y)},
                       {"in_ball", r.value < args.t}});
  }
  const Verdict v = neighborhood_ball_equivalence(s, x, args.t, cfg.bisect_tol);
  e.field("neighborhood_size", nbhd.size());
  e.field("equivalence", v == Verdict::True ? "true" : v == Verdict::False ? "false" : "indeterminate");
  return v == Verdict::False ? kExitViolation : kExitOk;
}

}  // namespace pmetric::cli
