#include "pmetric/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pmetric/error.hpp"

namespace pmetric {
namespace {

std::vector<const Distribution*> resolve_values(const PMSpace& space, const ProbLipMap& f) {
  std::vector<const Distribution*> out;
  out.reserve(space.size());
  for (const auto& p : space.points()) out.push_back(&f.at(p));
  return out;
}

enum class Cmp { Holds, Fails, Undecided };

// lhs <= q·rhs decided on brackets.
Cmp scaled_leq(const LevyResult& lhs, double q, const LevyResult& rhs) {
  if (lhs.upper <= q * rhs.lower) return Cmp::Holds;
  if (lhs.lower > q * rhs.upper) return Cmp::Fails;
  return Cmp::Undecided;
}

}  // namespace

const Distribution& ProbLipMap::at(const std::string& label) const {
  const auto it = values.find(label);
  if (it == values.end()) throw Error(ErrorCode::MissingPoint, "map has no value at '" + label + "'");
  return it->second;
}

std::vector<std::size_t> SelfMap::resolve(const PMSpace& space) const {
  std::vector<std::size_t> out;
  out.reserve(space.size());
  for (const auto& p : space.points()) {
    const auto it = mapping.find(p);
    if (it == mapping.end()) throw Error(ErrorCode::MissingPoint, "self-map has no image for '" + p + "'");
    out.push_back(space.index_of(it->second));
  }
  return out;
}

Lip1Report check_lip1(const PMSpace& space, const ProbLipMap& f) {
  const auto fv = resolve_values(space, f);
  Lip1Report report;
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (!leq(star(space.triangle(), space(x, y), *fv[y]), *fv[x])) {
        report.violations.emplace_back(x, y);
      }
    }
  }
  return report;
}

ProbLipMap delta(const PMSpace& space, std::size_t x) {
  if (x >= space.size()) throw Error(ErrorCode::UnknownPoint, "point index out of range");
  ProbLipMap out;
  for (std::size_t y = 0; y < space.size(); ++y) out.values.emplace(space.label(y), space(y, x));
  return out;
}

LevyResult uniform_dist(const ProbLipMap& f, const ProbLipMap& g, double bisect_tol) {
  for (const auto& [label, _] : g.values) (void)f.at(label);
  LevyResult out;
  for (const auto& [label, fx] : f.values) {
    const LevyResult r = levy_distance(fx, g.at(label), bisect_tol);
    out.value = std::max(out.value, r.value);
    out.lower = std::max(out.lower, r.lower);
    out.upper = std::max(out.upper, r.upper);
    out.iterations += r.iterations;
  }
  return out;
}

ProbLipMap envelope(const PMSpace& space, const ProbLipMap& f, std::span<const std::size_t> subset) {
  const auto& tf = space.triangle();
  if (tf.kind != TriangleKind::Sum && tf.kind != TriangleKind::Max) {
    throw Error(ErrorCode::UnsupportedTriangleFn,
                "envelope needs a sup-continuous construction (sum or max), got " + to_string(tf));
  }
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "envelope over an empty subset");
  std::vector<const Distribution*> data;
  for (std::size_t y : subset) {
    if (y >= space.size()) throw Error(ErrorCode::UnknownPoint, "subset index out of range");
    data.push_back(&f.at(space.label(y)));
  }
  ProbLipMap out;
  std::vector<Distribution> terms(subset.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t i = 0; i < subset.size(); ++i) terms[i] = star(tf, *data[i], space(x, subset[i]));
    out.values.emplace(space.label(x), pointwise_max(terms));
  }
  return out;
}

EquicontinuityReport equicontinuity_check(const PMSpace& space, std::span<const ProbLipMap> fs,
                                          double tol, double bisect_tol) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!check_lip1(space, fs[i]).ok()) {
      throw Error(ErrorCode::NotLipschitz, "map #" + std::to_string(i) + " is not 1-Lipschitz");
    }
  }
  const double k = space.triangle().lipschitz_k();
  const std::size_t n = space.size();
  std::vector<double> bound(n * n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bound[x * n + y] = bound[y * n + x] = k * distance_to_neutral(space, x, y, bisect_tol).value;
    }
  }
  EquicontinuityReport report;
  report.max_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto fv = resolve_values(space, fs[i]);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        const double lhs = levy_distance(*fv[x], *fv[y], bisect_tol).value;
        const double excess = lhs - bound[x * n + y];
        report.max_excess = std::max(report.max_excess, excess);
        if (excess > tol) report.violations.push_back({i, x, y});
      }
    }
  }
  if (report.max_excess == -std::numeric_limits<double>::infinity()) report.max_excess = 0.0;
  return report;
}

ContractionCheck is_c_contraction(const PMSpace& space, const SelfMap& m, double q,
                                  double bisect_tol) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorCode::QOutOfRange, "contraction constant " + std::to_string(q) + " not in (0, 1)");
  }
  const auto image = m.resolve(space);
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = x + 1; y < space.size(); ++y) {
      double tol = bisect_tol;
      Cmp c = Cmp::Undecided;
      for (int attempt = 0; attempt < 2 && c == Cmp::Undecided; ++attempt, tol /= 100.0) {
        c = scaled_leq(distance_to_neutral(space, image[x], image[y], tol), q,
                       distance_to_neutral(space, x, y, tol));
      }
      if (c == Cmp::Fails) return {false, std::make_pair(x, y)};
    }
  }
  return {};
}

bool FixpointCertificate::holds() const noexcept {
  for (std::size_t n = 0; n < achieved.size(); ++n) {
    if (achieved[n] > bounds[n] + tolerance) return false;
  }
  return true;
}

FixpointCertificate fixpoint_iterate(const PMSpace& space, const SelfMap& m, double q,
                                     std::size_t x0, std::size_t max_iter, double tol,
                                     double bisect_tol) {
  // k >= 1, so q >= 1 is reported as kq >= 1.
  if (!(q > 0.0)) {
    throw Error(ErrorCode::QOutOfRange, "contraction constant " + std::to_string(q) + " not in (0, 1)");
  }
  const double k = space.triangle().lipschitz_k();
  if (!(k * q < 1.0)) {
    throw Error(ErrorCode::KQTooLarge, "k*q = " + std::to_string(k * q) + " >= 1");
  }
  if (x0 >= space.size()) throw Error(ErrorCode::UnknownPoint, "start point index out of range");
  const auto image = m.resolve(space);
  const auto check = is_c_contraction(space, m, q, bisect_tol);
  if (!check.holds) {
    throw Error(ErrorCode::NotContraction, "pair (" + space.label(check.witness->first) + ", " +
                                               space.label(check.witness->second) +
                                               ") is not contracted by q");
  }

  FixpointCertificate cert;
  cert.k = k;
  cert.q = q;
  cert.tolerance = tol;
  cert.iterates.push_back(x0);
  bool converged = false;
  for (std::size_t n = 0; n < max_iter; ++n) {
    const std::size_t next = image[cert.iterates.back()];
    if (next == cert.iterates.back()) {
      converged = true;
      break;
    }
    cert.iterates.push_back(next);
  }
  if (!converged && image[cert.iterates.back()] == cert.iterates.back()) converged = true;
  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "no fixed point after " + std::to_string(max_iter) + " iterations");
  }
  cert.fixed_point = cert.iterates.back();

  for (std::size_t p = 0; p < space.size(); ++p) {
    if (image[p] == p && p != cert.fixed_point) {
      throw Error(ErrorCode::NotContraction, "points " + space.label(cert.fixed_point) + " and " +
                                                 space.label(p) + " are both fixed");
    }
  }

  const double first_step = distance_to_neutral(space, image[x0], x0, bisect_tol).value;
  const double kq = k * q;
  for (std::size_t n = 0; n < cert.iterates.size(); ++n) {
    cert.bounds.push_back(k * std::pow(kq, static_cast<double>(n)) / (1.0 - kq) * first_step);
    cert.achieved.push_back(
        distance_to_neutral(space, cert.iterates[n], cert.fixed_point, bisect_tol).value);
  }
  return cert;
}

bool limit_closure_check(const PMSpace& space, std::span<const ProbLipMap> fs,
                         const ProbLipMap& f, double tol, double bisect_tol) {
  if (fs.empty()) throw Error(ErrorCode::NotConverging, "empty sequence");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!check_lip1(space, fs[i]).ok()) {
      throw Error(ErrorCode::NotLipschitz, "sequence element #" + std::to_string(i) +
                                               " is not 1-Lipschitz");
    }
  }
  const double gap = uniform_dist(fs.back(), f, bisect_tol).value;
  if (!(gap < tol)) {
    throw Error(ErrorCode::NotConverging,
                "last element is " + std::to_string(gap) + " away from the limit");
  }
  return check_lip1(space, f).ok();
}

}  // namespace pmetric
