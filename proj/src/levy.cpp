#include "pmetric/levy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "pmetric/error.hpp"

namespace pmetric {
namespace {

// One direction of the admissibility test: G(t) <= F(t + h) + h on [0, 1/h).
// Both sides are left-continuous step functions of t, constant on each
// interval between consecutive breakpoints, so the check reduces to right
// limits at the breakpoints (plus t = 0).
bool one_sided(const Distribution& f, const Distribution& g, double h) {
  const double horizon = 1.0 / h;
  const auto fj = f.jumps();
  const auto gj = g.jumps();

  // Shifted copy of F so that "F(t+h)" comparisons use a single rounding.
  std::vector<double> shifted(fj.size());
  for (std::size_t i = 0; i < fj.size(); ++i) shifted[i] = fj[i].location - h;

  auto f_shift_right = [&](double t) {
    auto it = std::upper_bound(shifted.begin(), shifted.end(), t);
    const auto n = static_cast<std::size_t>(it - shifted.begin());
    return n == 0 ? 0.0 : fj[n - 1].level;
  };
  auto violated_at = [&](double t) {
    return eval_right(g, t) > f_shift_right(t) + h;
  };

  if (violated_at(0.0)) return false;
  for (const auto& j : gj) {
    if (j.location >= horizon) break;
    if (violated_at(j.location)) return false;
  }
  for (double s : shifted) {
    if (s >= horizon) break;
    if (s > 0.0 && violated_at(s)) return false;
  }
  return true;
}

}  // namespace

bool admissible(const Distribution& f, const Distribution& g, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::NonPositiveH, "admissibility needs h > 0");
  if (h >= 1.0) return true;
  return one_sided(f, g, h) && one_sided(g, f, h);
}

LevyResult levy_distance(const Distribution& f, const Distribution& g, double bisect_tol) {
  if (!(bisect_tol > 0.0)) throw Error(ErrorCode::OutOfRange, "bisection tolerance must be > 0");
  if (f == g) return {};
  double lo = 0.0;
  double hi = 1.0;
  int iterations = 0;
  while (hi - lo > bisect_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (admissible(f, g, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++iterations;
  }
  return {0.5 * (lo + hi), lo, hi, iterations};
}

double heaviside_closed_form(double a, double b) noexcept {
  const double m = std::min(a, b);
  const double inv = m == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / m;
  return std::min({1.0, std::abs(b - a), inv});
}

bool weakly_converges(std::span<const Distribution> fs, const Distribution& f, double tol,
                      double bisect_tol) {
  if (fs.empty()) throw Error(ErrorCode::OutOfRange, "weak convergence needs a nonempty prefix");
  std::vector<double> d;
  d.reserve(fs.size());
  for (const auto& fn : fs) d.push_back(levy_distance(fn, f, bisect_tol).value);
  if (!(d.back() < tol)) return false;
  for (std::size_t i = d.size() / 2 + 1; i < d.size(); ++i) {
    if (d[i] > d[i - 1] + tol) return false;
  }
  return true;
}

}  // namespace pmetric
