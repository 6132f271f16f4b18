// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Everything is seeded, so reruns print the same numbers.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "pmetric/pmetric.hpp"
#include "support/generators.hpp"

using namespace pmetric;
using namespace pmetric::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

std::vector<TriangleFn> all_triangle_fns() {
  std::vector<TriangleFn> out;
  for (auto kind : kAllTriangleKinds) {
    for (auto t : kAllTNorms) out.push_back({kind, TNorm{t}});
  }
  return out;
}

std::vector<std::size_t> all_points(const PMSpace& s) {
  std::vector<std::size_t> v(s.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

ProbLipMap random_map(Rng& rng, const PMSpace& s) {
  ProbLipMap f;
  for (const auto& p : s.points()) f.values.emplace(p, random_step(rng));
  return f;
}

// Written out from the formula, not taken from the library.
double heaviside_reference(double a, double b) {
  if (a == b) return 0.0;
  const double lo = std::min(a, b);
  const double inv = lo == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / lo;
  return std::min({1.0, std::abs(b - a), inv});
}

Outcome heaviside_closed_form_oracle() {
  Rng rng(1001);
  std::vector<std::pair<double, double>> cases;
  for (int i = 0; i < 1000; ++i) cases.emplace_back(rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0));
  for (double a : {0.0, 0.3, 1.0, 2.5, 7.0}) cases.emplace_back(a, a);
  for (double b : {0.1, 0.5, 1.0, 3.0, 10.0}) cases.emplace_back(0.0, b);
  // |b - a| = 1/min(a, b): the two branches of the min meet.
  for (double a : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    cases.emplace_back(a, a + 1.0 / a);
    cases.emplace_back(a + 1.0 / a, a);
  }
  double worst = 0.0;
  for (const auto& [a, b] : cases) {
    worst = std::max(worst, std::abs(levy_distance(heaviside(a), heaviside(b)).value -
                                     heaviside_reference(a, b)));
  }
  return {worst <= 1e-9, std::to_string(cases.size()) + " pairs, max error " + fmt(worst)};
}

Outcome levy_metric_axioms() {
  Rng rng(1002);
  int failures = 0;
  double worst_triangle = -1.0;
  for (int i = 0; i < 500; ++i) {
    const auto f = random_step(rng), g = random_step(rng), k = random_step(rng);
    const auto fg = levy_distance(f, g), gf = levy_distance(g, f);
    const auto fk = levy_distance(f, k), gk = levy_distance(g, k);
    if (fg.value != gf.value) ++failures;
    if (fg.value > 1.0 || fk.value > 1.0 || gk.value > 1.0) ++failures;
    if (!(fg.lower <= fg.value && fg.value <= fg.upper)) ++failures;
    if (levy_distance(f, f).value != 0.0) ++failures;
    if (f != g && !(fg.upper > 0.0)) ++failures;
    const double excess = fk.value - (fg.value + gk.value);
    worst_triangle = std::max(worst_triangle, excess);
    if (excess > 3e-9) ++failures;
  }
  return {failures == 0, "500 triples, " + std::to_string(failures) +
                             " failures, max triangle excess " + fmt(worst_triangle)};
}

Outcome triangle_axioms() {
  Rng rng(1003);
  std::size_t failed = 0;
  std::string first;
  for (const auto& tf : all_triangle_fns()) {
    std::vector<AxiomSample> samples;
    for (int i = 0; i < 100; ++i) samples.push_back({random_step(rng), random_step(rng), random_step(rng)});
    const auto r = check_triangle_axioms(tf, samples);
    if (!r.ok()) {
      ++failed;
      if (first.empty()) first = to_string(tf) + " " + std::string(to_string(r.first->axiom));
    }
  }
  int heaviside_failures = 0;
  for (auto t : kAllTNorms) {
    for (int i = 0; i < 100; ++i) {
      const double a = rng.uniform_int(0, 64) / 16.0, b = rng.uniform_int(0, 64) / 16.0;
      if (!(star({TriangleKind::Sum, TNorm{t}}, heaviside(a), heaviside(b)) == heaviside(a + b))) {
        ++heaviside_failures;
      }
    }
  }
  return {failed == 0 && heaviside_failures == 0,
          "12 constructions x 100 triples, " + std::to_string(failed) +
              " failing constructions" + (first.empty() ? "" : " (" + first + ")") +
              "; H_a*H_b = H_(a+b) failures " + std::to_string(heaviside_failures)};
}

Outcome lipschitz_bound() {
  Rng rng(1004);
  std::vector<LipschitzSample> samples;
  for (int i = 0; i < 500; ++i) {
    samples.push_back({random_step(rng), random_step(rng), random_step(rng), random_step(rng)});
  }
  std::size_t violations = 0;
  double ratio = 0.0;
  for (const auto& tf : all_triangle_fns()) {
    const auto r = check_lipschitz(tf, samples, 1e-9);
    violations += r.violations.size();
    ratio = std::max(ratio, r.max_ratio);
  }
  return {violations == 0, "500 quadruples x 12 constructions, " + std::to_string(violations) +
                               " violations, max ratio " + fmt(ratio)};
}

// Step functions cannot be compared value by value across a misplaced
// jump, so the deviation is measured along t: at every cell midpoint m,
// exact(m - h) <= oracle(m) <= exact(m + h) with h = t_max/grid.
Outcome star_vs_oracle() {
  Rng rng(1005);
  const int grid = 2048;
  double worst = 0.0;
  int pairs = 0;
  for (auto kind : kAllTriangleKinds) {
    for (int i = 0; i < 200; ++i) {
      const TriangleFn tf{kind, TNorm{kAllTNorms[static_cast<std::size_t>(i % 3)]}};
      const auto f = random_step(rng), g = random_step(rng);
      const double t_max = default_oracle_t_max(f, g);
      const double h = t_max / grid;
      const auto exact = star(tf, f, g);
      const auto oracle = star_oracle(tf, f, g, grid, t_max);
      for (int k = 1; k <= grid; ++k) {
        const double m = (k - 0.5) * h;
        const double o = eval(oracle, m);
        worst = std::max(worst, eval(exact, std::max(0.0, m - h)) - o);
        worst = std::max(worst, o - eval(exact, m + h));
      }
      ++pairs;
    }
  }
  return {worst <= 1e-12, std::to_string(pairs) + " pairs at grid 2048, max excess outside the band " +
                              fmt(worst)};
}

Outcome metrization_sandwich() {
  Rng rng(1006);
  int bad_spaces = 0;
  for (int i = 0; i < 100; ++i) {
    const auto s = random_valid_space(rng, 6, TriangleFn{});
    if (!metrization_report(s).ok()) ++bad_spaces;
  }
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, 6));
    const Eigen::MatrixXd d = random_l1_metric(rng, n);
    const auto s = induced_from_metric(labels(n), d, TriangleFn{});
    const auto r = metrization_report(s);
    worst = std::max(worst, (r.sigma - d.cwiseMin(1.0)).cwiseAbs().maxCoeff());
  }
  return {bad_spaces == 0 && worst <= 1e-9,
          "100 random spaces, " + std::to_string(bad_spaces) +
              " with sandwich violations; 50 induced spaces, max |sigma - min(1,d)| " + fmt(worst)};
}

Outcome neighborhood_equivalence() {
  Rng rng(1007);
  int checks = 0, bad = 0;
  const auto fns = all_triangle_fns();
  for (int i = 0; i < 36; ++i) {
    const auto s = random_valid_space(rng, 5, fns[static_cast<std::size_t>(i) % fns.size()]);
    for (std::size_t x = 0; x < s.size(); ++x) {
      std::vector<double> critical;
      for (std::size_t y = 0; y < s.size(); ++y) critical.push_back(distance_to_neutral(s, x, y).value);
      int taken = 0;
      while (taken < 20) {
        const double t = rng.uniform(1e-3, 1.25);
        const bool near = std::any_of(critical.begin(), critical.end(),
                                      [t](double c) { return std::abs(c - t) < 1e-6; });
        if (near) continue;
        ++taken;
        ++checks;
        if (neighborhood_ball_equivalence(s, x, t) != Verdict::True) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(checks) + " (x, t) checks on 36 spaces, " +
                        std::to_string(bad) + " not equivalent"};
}

Outcome equicontinuity() {
  Rng rng(1008);
  int bad = 0;
  double excess = -1.0;
  for (int i = 0; i < 100; ++i) {
    const TriangleFn tf{i % 2 ? TriangleKind::Max : TriangleKind::Sum,
                        TNorm{kAllTNorms[static_cast<std::size_t>(i % 3)]}};
    const auto s = random_valid_space(rng, 5, tf);
    std::vector<ProbLipMap> fs;
    for (std::size_t x = 0; x < s.size(); ++x) fs.push_back(delta(s, x));
    fs.push_back(envelope(s, random_map(rng, s), all_points(s)));
    const std::vector<std::size_t> some{0, 2};
    fs.push_back(envelope(s, random_map(rng, s), some));
    const auto r = equicontinuity_check(s, fs, 1e-9);
    if (!r.ok()) ++bad;
    excess = std::max(excess, r.max_excess);
  }
  return {bad == 0, "100 spaces, " + std::to_string(bad) + " failing, max excess " + fmt(excess)};
}

bool certify(const ContractionInstance& inst, std::string& why) {
  const auto cert = fixpoint_iterate(inst.space, inst.map, inst.q, inst.x0, 200, 1e-9);
  const auto image = inst.map.resolve(inst.space);
  std::size_t fixed_points = 0;
  for (std::size_t p = 0; p < image.size(); ++p) fixed_points += image[p] == p;
  if (cert.fixed_point != inst.fixed) why = "wrong fixed point";
  else if (!cert.holds()) why = "rate bound exceeded";
  else if (fixed_points != 1) why = "fixed point not unique";
  return why.empty();
}

Outcome fixed_point_certificate() {
  std::string why;
  bool ok = certify(halving_instance(), why);
  int planted_ok = 0;
  Rng rng(1009);
  for (int i = 0; i < 20; ++i) {
    const double q = i % 2 ? 0.5 : 0.75;
    std::string w;
    if (certify(planted_contraction(rng, static_cast<std::size_t>(rng.uniform_int(4, 9)), q), w)) {
      ++planted_ok;
    } else if (why.empty()) {
      why = w;
    }
  }
  ok = ok && planted_ok == 20;
  return {ok, "halving instance + " + std::to_string(planted_ok) + "/20 planted contractions certified" +
                  (why.empty() ? "" : " (" + why + ")")};
}

Outcome envelope_contract() {
  Rng rng(1010);
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    const TriangleFn tf{i < 100 ? TriangleKind::Sum : TriangleKind::Max,
                        TNorm{kAllTNorms[static_cast<std::size_t>(i % 3)]}};
    const auto s = random_valid_space(rng, 5, tf);
    const auto f = random_map(rng, s);
    std::vector<std::size_t> a;
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (rng.coin()) a.push_back(x);
    }
    if (a.empty()) a.push_back(static_cast<std::size_t>(rng.uniform_int(0, 4)));
    const auto env = envelope(s, f, a);
    bool ok = check_lip1(s, env).ok();
    for (std::size_t y : a) ok = ok && leq(f.at(s.label(y)), env.at(s.label(y)));
    ok = ok && envelope(s, env, all_points(s)) == env;
    if (!ok) ++bad;
  }
  return {bad == 0, "200 instances (sum and max), " + std::to_string(bad) + " failing"};
}

Outcome limit_closure() {
  Rng rng(1011);
  int bad = 0;
  for (int i = 0; i < 50; ++i) {
    const TriangleFn tf{TriangleKind::Sum, TNorm{kAllTNorms[static_cast<std::size_t>(i % 3)]}};
    const auto s = random_valid_space(rng, 5, tf);
    const auto limit = envelope(s, random_map(rng, s), all_points(s));
    // Translates of a 1-Lipschitz map are 1-Lipschitz and converge to it.
    std::vector<ProbLipMap> fs;
    for (int n = 1; n <= 16; ++n) {
      ProbLipMap fn;
      for (const auto& [label, d] : limit.values) fn.values.emplace(label, shift(d, std::ldexp(1.0, -n)));
      fs.push_back(std::move(fn));
    }
    if (!limit_closure_check(s, fs, limit, 1e-4)) ++bad;
  }
  return {bad == 0, "50 families, " + std::to_string(bad) + " failing"};
}

struct CliRun {
  int exit = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = "cd '" PMETRIC_GOLDEN_DIR "/inputs' && '" PMETRIC_CLI "' " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome cli_golden() {
  const std::string m = "--format machine ";
  const std::string out_path = "/tmp/pmetric_acceptance_envelope.json";
  struct Golden {
    std::string args, expected;
  };
  const std::vector<Golden> goldens{
      {m + "validate induced3.json", "validate_induced3.txt"},
      {m + "levy h02.json h05.json", "levy_h02_h05.txt"},
      {m + "report induced3.json", "report_induced3.txt"},
      {m + "fixpoint halving_space.json halving_map.json --q 0.5 --x0 1", "fixpoint_halving.txt"},
      {m + "star two_step.json h2.json", "star_two_step.txt"},
  };
  int identical = 0;
  for (const auto& g : goldens) {
    const auto r = run_cli(g.args);
    const auto again = run_cli(g.args);
    if (r.exit == 0 && r.out == again.out &&
        r.out == read_file(PMETRIC_GOLDEN_DIR "/expected/" + g.expected)) {
      ++identical;
    }
  }
  struct ExitCase {
    std::string args;
    int exit;
  };
  const std::vector<ExitCase> exits{
      {m + "validate duplicate_pair.json", 2},
      {m + "validate malformed.json", 2},
      {m + "fixpoint halving_space.json halving_map.json --q 0.5 --x0 nowhere", 2},
      {m + "validate triangle_violation.json", 1},
      {m + "report triangle_violation.json", 1},
      {m + "fixpoint halving_space.json halving_map.json --q 1 --x0 1", 1},
      {m + "fixpoint halving_space.json identity_map.json --q 0.5 --x0 1", 1},
      {m + "envelope conorm4.json datum_h0.json --subset p0", 1},
      {m + "envelope menger4.json datum_h0.json --subset p0 --out " + out_path, 0},
  };
  int exit_ok = 0;
  for (const auto& e : exits) exit_ok += run_cli(e.args).exit == e.exit;
  const bool file_ok = read_file(out_path) == read_file(PMETRIC_GOLDEN_DIR "/expected/delta_p0.json");
  std::remove(out_path.c_str());
  return {identical == 5 && exit_ok == static_cast<int>(exits.size()) && file_ok,
          std::to_string(identical) + "/5 golden reports byte-identical, " + std::to_string(exit_ok) +
              "/" + std::to_string(exits.size()) + " exit codes as specified, envelope file " +
              (file_ok ? "matches" : "differs")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"levy distance of heavisides matches min(1,|b-a|,1/min(a,b))", heaviside_closed_form_oracle},
      {"levy distance is a metric bounded by 1", levy_metric_axioms},
      {"triangle function axioms, all kinds and t-norms", triangle_axioms},
      {"star is 1-Lipschitz for d_L", lipschitz_bound},
      {"exact star agrees with the grid oracle", star_vs_oracle},
      {"metrization sandwich lower <= sigma <= k*lower", metrization_sandwich},
      {"strong neighborhoods are d_L balls", neighborhood_equivalence},
      {"1-Lipschitz maps are equicontinuous", equicontinuity},
      {"fixed-point rate certificate", fixed_point_certificate},
      {"envelope extends, is 1-Lipschitz and idempotent", envelope_contract},
      {"1-Lipschitz maps are closed under limits", limit_closure},
      {"CLI golden reports and exit codes", cli_golden},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": "
              << o.detail << " (" << fmt(secs) << " s)" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
