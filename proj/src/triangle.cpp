#include "pmetric/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "pmetric/error.hpp"

namespace pmetric {
namespace {

// The closed forms below are arranged so that commutativity is exact in
// floating point (operands are ordered first) and so that T(x, 1) = x and
// T*(x, 0) = x hold bit for bit.
double apply_t(TNormKind kind, double x, double y) noexcept {
  const auto [lo, hi] = std::minmax(x, y);
  switch (kind) {
    case TNormKind::Minimum: return lo;
    case TNormKind::Product: return lo * hi;
    case TNormKind::Lukasiewicz: return std::max(lo - (1.0 - hi), 0.0);
  }
  return lo;
}

double apply_tc(TNormKind kind, double x, double y) noexcept {
  const auto [lo, hi] = std::minmax(x, y);
  switch (kind) {
    case TNormKind::Minimum: return hi;
    case TNormKind::Product: return hi + lo * (1.0 - hi);
    case TNormKind::Lukasiewicz: return std::min(lo + hi, 1.0);
  }
  return hi;
}

void check_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::OutOfRange,
                std::string(name) + " = " + std::to_string(x) + " is outside [0, 1]");
  }
}

// Level of F just before its k-th jump.
double level_before(std::span<const Jump> js, std::size_t k) noexcept {
  return k == 0 ? 0.0 : js[k - 1].level;
}

// max{ level_j : base + js[j].location <= c }, using the same rounded sums
// that produced the candidate breakpoints.
double shifted_right(std::span<const Jump> js, double base, double c) noexcept {
  double v = 0.0;
  for (const auto& j : js) {
    if (base + j.location <= c) {
      v = j.level;
    } else {
      break;
    }
  }
  return v;
}

Distribution star_sum(TNormKind t, const Distribution& f, const Distribution& g) {
  std::vector<Jump> pairs;
  pairs.reserve(f.size() * g.size());
  for (const auto& a : f.jumps()) {
    for (const auto& b : g.jumps()) {
      pairs.push_back({a.location + b.location, apply_t(t, a.level, b.level)});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Jump& x, const Jump& y) { return x.location < y.location; });
  // The value just right of c is the best pair whose sum is <= c.
  double running = 0.0;
  for (auto& p : pairs) {
    running = std::max(running, p.level);
    p.level = running;
  }
  return Distribution::from_right_limits(std::move(pairs));
}

Distribution star_pointwise(TNormKind t, const Distribution& f, const Distribution& g) {
  std::vector<double> locs;
  for (const auto& a : f.jumps()) locs.push_back(a.location);
  for (const auto& b : g.jumps()) locs.push_back(b.location);
  std::sort(locs.begin(), locs.end());
  locs.erase(std::unique(locs.begin(), locs.end()), locs.end());
  std::vector<Jump> samples;
  samples.reserve(locs.size());
  for (double c : locs) samples.push_back({c, apply_t(t, eval_right(f, c), eval_right(g, c))});
  return Distribution::from_right_limits(std::move(samples));
}

// inf over u + v = s of T*(F(u), G(v)). For a fixed level of F the best u is
// the right end of that level's interval, i.e. just at a jump location a_k
// where F still equals the level before the jump; the remaining terms are
// F(s) (u = s) and G(s) (u = 0). Both roles are enumerated so that the rule
// is symmetric in (F, G).
Distribution star_conorm(TNormKind t, const Distribution& f, const Distribution& g) {
  const auto fj = f.jumps();
  const auto gj = g.jumps();
  std::vector<double> cand{0.0};
  for (const auto& a : fj) cand.push_back(a.location);
  for (const auto& b : gj) cand.push_back(b.location);
  for (const auto& a : fj) {
    for (const auto& b : gj) cand.push_back(a.location + b.location);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::vector<Jump> samples;
  samples.reserve(cand.size());
  for (double c : cand) {
    double v = std::min(eval_right(f, c), eval_right(g, c));
    for (std::size_t k = 0; k < fj.size() && fj[k].location <= c; ++k) {
      v = std::min(v, apply_tc(t, level_before(fj, k), shifted_right(gj, fj[k].location, c)));
    }
    for (std::size_t l = 0; l < gj.size() && gj[l].location <= c; ++l) {
      v = std::min(v, apply_tc(t, level_before(gj, l), shifted_right(fj, gj[l].location, c)));
    }
    samples.push_back({c, v});
  }
  return Distribution::from_right_limits(std::move(samples));
}

}  // namespace

std::string_view to_string(TNormKind kind) noexcept {
  switch (kind) {
    case TNormKind::Minimum: return "min";
    case TNormKind::Product: return "prod";
    case TNormKind::Lukasiewicz: return "luk";
  }
  return "?";
}

std::string_view to_string(TriangleKind kind) noexcept {
  switch (kind) {
    case TriangleKind::Sum: return "sum";
    case TriangleKind::Max: return "max";
    case TriangleKind::Conorm: return "conorm";
    case TriangleKind::Pointwise: return "pointwise";
  }
  return "?";
}

std::string to_string(const TriangleFn& tf) {
  return std::string(to_string(tf.kind)) + "/" + std::string(to_string(tf.tnorm.kind));
}

std::string_view to_string(TriangleAxiom axiom) noexcept {
  switch (axiom) {
    case TriangleAxiom::Closure: return "closure";
    case TriangleAxiom::Commutativity: return "commutativity";
    case TriangleAxiom::Associativity: return "associativity";
    case TriangleAxiom::Neutral: return "neutral";
    case TriangleAxiom::Monotonicity: return "monotonicity";
  }
  return "?";
}

double tnorm_eval(TNorm t, double x, double y) {
  check_unit(x, "x");
  check_unit(y, "y");
  return apply_t(t.kind, x, y);
}

double tconorm_eval(TNorm t, double x, double y) {
  check_unit(x, "x");
  check_unit(y, "y");
  return apply_tc(t.kind, x, y);
}

Distribution star(const TriangleFn& tf, const Distribution& f, const Distribution& g) {
  switch (tf.kind) {
    case TriangleKind::Sum:
      return star_sum(tf.tnorm.kind, f, g);
    case TriangleKind::Max:
      // sup over max(u, v) = t is reached at u = v = t since T is monotone
      // and F, G are nondecreasing, so this coincides with the pointwise form.
    case TriangleKind::Pointwise:
      return star_pointwise(tf.tnorm.kind, f, g);
    case TriangleKind::Conorm:
      return star_conorm(tf.tnorm.kind, f, g);
  }
  return {};
}

double default_oracle_t_max(const Distribution& f, const Distribution& g) noexcept {
  const double a = f.empty() ? 0.0 : f.jumps().back().location;
  const double b = g.empty() ? 0.0 : g.jumps().back().location;
  return a + b + 1.0;
}

Distribution star_oracle(const TriangleFn& tf, const Distribution& f, const Distribution& g,
                         int grid, std::optional<double> t_max) {
  if (grid < 2) throw Error(ErrorCode::OutOfRange, "oracle grid must be >= 2");
  const double span = t_max.value_or(default_oracle_t_max(f, g));
  if (!(span > 0.0)) throw Error(ErrorCode::OutOfRange, "oracle t_max must be > 0");
  const auto n = static_cast<std::size_t>(grid);
  const double step = span / static_cast<double>(grid);
  const TNormKind t = tf.tnorm.kind;

  std::vector<double> fv(n + 1), gv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    fv[i] = eval(f, static_cast<double>(i) * step);
    gv[i] = eval(g, static_cast<double>(i) * step);
  }

  auto value_at = [&](std::size_t k) {
    switch (tf.kind) {
      case TriangleKind::Sum: {
        double v = 0.0;
        for (std::size_t i = 0; i <= k; ++i) v = std::max(v, apply_t(t, fv[i], gv[k - i]));
        return v;
      }
      case TriangleKind::Max: {
        double v = 0.0;
        for (std::size_t i = 0; i <= k; ++i) {
          v = std::max({v, apply_t(t, fv[k], gv[i]), apply_t(t, fv[i], gv[k])});
        }
        return v;
      }
      case TriangleKind::Conorm: {
        double v = 1.0;
        for (std::size_t i = 0; i <= k; ++i) v = std::min(v, apply_tc(t, fv[i], gv[k - i]));
        return v;
      }
      case TriangleKind::Pointwise:
        return apply_t(t, fv[k], gv[k]);
    }
    return 0.0;
  };

  // A grid sup at t_k lies in [exact(t_{k-1}), exact(t_k)]; a grid inf at
  // t_{k-1} does. Each goes on the cell (t_{k-1}, t_k].
  const bool inf_type = tf.kind == TriangleKind::Conorm;
  std::vector<Jump> samples;
  samples.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    samples.push_back({static_cast<double>(k - 1) * step, value_at(inf_type ? k - 1 : k)});
  }
  return Distribution::from_right_limits(std::move(samples));
}

AxiomReport check_triangle_axioms(const BinaryOp& op, std::span<const AxiomSample> samples) {
  AxiomReport report;
  report.samples = samples.size();
  const Distribution h0 = heaviside(0.0);

  auto fail = [&](std::size_t idx, TriangleAxiom axiom, std::string detail) {
    ++report.failures[static_cast<std::size_t>(axiom)];
    if (!report.first) report.first = AxiomCounterexample{idx, axiom, std::move(detail)};
  };
  auto canonical = [](const Distribution& d) {
    try {
      return make_step({d.jumps().begin(), d.jumps().end()}) == d;
    } catch (const Error&) {
      return false;
    }
  };

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [f, g, k] = samples[i];
    const Distribution fg = op(f, g);
    const Distribution gf = op(g, f);
    const Distribution gk = op(g, k);
    const Distribution fg_k = op(fg, k);
    const Distribution f_gk = op(f, gk);

    if (!canonical(fg) || !canonical(gk) || !canonical(fg_k) || !canonical(f_gk)) {
      fail(i, TriangleAxiom::Closure, "result is not a canonical step distribution");
    }
    if (!(fg == gf)) fail(i, TriangleAxiom::Commutativity, "F*G != G*F");
    if (!(fg_k == f_gk)) fail(i, TriangleAxiom::Associativity, "(F*G)*K != F*(G*K)");
    if (!(op(f, h0) == f) || !(op(h0, g) == g)) {
      fail(i, TriangleAxiom::Neutral, "H_0 is not neutral");
    }
    const std::array<Distribution, 2> pair{f, g};
    const Distribution upper = pointwise_max(pair);
    const Distribution uk = op(upper, k);
    if (!leq(op(f, k), uk) || !leq(op(g, k), uk)) {
      fail(i, TriangleAxiom::Monotonicity, "F <= L but F*K is not <= L*K");
    }
  }
  return report;
}

AxiomReport check_triangle_axioms(const TriangleFn& tf, std::span<const AxiomSample> samples) {
  return check_triangle_axioms(
      [tf](const Distribution& a, const Distribution& b) { return star(tf, a, b); }, samples);
}

LipschitzReport check_lipschitz(const TriangleFn& tf, std::span<const LipschitzSample> samples,
                                double tol, double bisect_tol) {
  LipschitzReport report;
  report.samples = samples.size();
  const double k = tf.lipschitz_k();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    const double lhs =
        levy_distance(star(tf, s.f, s.g), star(tf, s.f_prime, s.g_prime), bisect_tol).value;
    const double rhs = levy_distance(s.f, s.f_prime, bisect_tol).value +
                       levy_distance(s.g, s.g_prime, bisect_tol).value;
    if (lhs > k * rhs + tol) report.violations.push_back(i);
    if (rhs > 0.0) report.max_ratio = std::max(report.max_ratio, lhs / rhs);
  }
  return report;
}

}  // namespace pmetric
