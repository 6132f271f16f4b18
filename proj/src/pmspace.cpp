#include "pmetric/pmspace.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pmetric/error.hpp"

namespace pmetric {

PMSpace::PMSpace(std::vector<std::string> points, TriangleFn tf, std::vector<Distribution> upper)
    : points_(std::move(points)), tf_(tf), upper_(std::move(upper)), neutral_(heaviside(0.0)) {
  const std::size_t n = points_.size();
  if (n == 0) throw Error(ErrorCode::ShapeMismatch, "a space needs at least one point");
  if (upper_.size() != n * (n - 1) / 2) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(n * (n - 1) / 2) +
                                              " off-diagonal entries, got " +
                                              std::to_string(upper_.size()));
  }
  std::set<std::string> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw Error(ErrorCode::ShapeMismatch, "duplicate point " + p);
  }
}

PMSpace PMSpace::from_dense(std::vector<std::string> points, TriangleFn tf,
                            const std::vector<Distribution>& dense) {
  const std::size_t n = points.size();
  if (dense.size() != n * n) {
    throw Error(ErrorCode::ShapeMismatch, "matrix has " + std::to_string(dense.size()) +
                                              " entries for " + std::to_string(n) + " points");
  }
  std::vector<Distribution> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_neutral(dense[i * n + i])) {
      throw Error(ErrorCode::ShapeMismatch, "diagonal entry " + points[i] + " is not H_0");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(dense[i * n + j] == dense[j * n + i])) {
        throw Error(ErrorCode::ShapeMismatch,
                    "matrix is not symmetric at (" + points[i] + ", " + points[j] + ")");
      }
      upper.push_back(dense[i * n + j]);
    }
  }
  return PMSpace(std::move(points), tf, std::move(upper));
}

std::size_t PMSpace::index_of(const std::string& label) const {
  const auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) throw Error(ErrorCode::UnknownPoint, "no point labelled '" + label + "'");
  return static_cast<std::size_t>(it - points_.begin());
}

std::size_t PMSpace::slot(std::size_t x, std::size_t y) const noexcept {
  // x < y; rows before x contribute (n-1) + (n-2) + ... + (n-x) entries.
  const std::size_t n = points_.size();
  return x * (2 * n - x - 1) / 2 + (y - x - 1);
}

const Distribution& PMSpace::operator()(std::size_t x, std::size_t y) const {
  const std::size_t n = points_.size();
  if (x >= n || y >= n) throw Error(ErrorCode::UnknownPoint, "point index out of range");
  if (x == y) return neutral_;
  return x < y ? upper_[slot(x, y)] : upper_[slot(y, x)];
}

ValidationReport validate(const PMSpace& space) {
  ValidationReport report;
  const std::size_t n = space.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (is_neutral(space(x, y))) report.violations.push_back({1, x, y, 0});
    }
  }
  const auto& tf = space.triangle();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (!leq(star(tf, space(x, y), space(y, z)), space(x, z))) {
          report.violations.push_back({3, x, y, z});
        }
      }
    }
  }
  return report;
}

PMSpace induced_from_metric(std::vector<std::string> points, const Eigen::MatrixXd& d,
                            TriangleFn tf) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (d.rows() != n || d.cols() != n) {
    throw Error(ErrorCode::ShapeMismatch, "metric matrix does not match the point list");
  }
  if (tf.kind != TriangleKind::Sum) {
    throw Error(ErrorCode::IncompatibleTriangleFn,
                "H_a * H_b = H_{a+b} needs a sum-kind triangle function, got " + to_string(tf));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d(i, i) != 0.0) throw Error(ErrorCode::NotAMetric, "nonzero diagonal at " + points[i]);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!(d(i, j) > 0.0) || !std::isfinite(d(i, j))) {
        throw Error(ErrorCode::NotAMetric,
                    "d(" + points[i] + ", " + points[j] + ") must be positive and finite");
      }
      if (d(i, j) != d(j, i)) {
        throw Error(ErrorCode::NotAMetric, "d is not symmetric at (" + points[i] + ", " +
                                               points[j] + ")");
      }
      for (Eigen::Index k = 0; k < n; ++k) {
        if (d(i, k) > d(i, j) + d(j, k)) {
          throw Error(ErrorCode::NotAMetric, "triangle inequality fails for (" + points[i] +
                                                 ", " + points[j] + ", " + points[k] + ")");
        }
      }
    }
  }
  std::vector<Distribution> upper;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) upper.push_back(heaviside(d(i, j)));
  }
  return PMSpace(std::move(points), tf, std::move(upper));
}

LevyResult distance_to_neutral(const PMSpace& space, std::size_t x, std::size_t y,
                               double bisect_tol) {
  return levy_distance(space(x, y), space(x, x), bisect_tol);
}

LevyResult sigma(const PMSpace& space, std::size_t x, std::size_t y, double bisect_tol) {
  if (x >= space.size() || y >= space.size()) {
    throw Error(ErrorCode::UnknownPoint, "point index out of range");
  }
  LevyResult out;
  for (std::size_t z = 0; z < space.size(); ++z) {
    const LevyResult r = levy_distance(space(x, z), space(y, z), bisect_tol);
    out.value = std::max(out.value, r.value);
    out.lower = std::max(out.lower, r.lower);
    out.upper = std::max(out.upper, r.upper);
    out.iterations += r.iterations;
  }
  return out;
}

std::vector<std::size_t> strong_neighborhood(const PMSpace& space, std::size_t x, double t) {
  if (x >= space.size()) throw Error(ErrorCode::UnknownPoint, "point index out of range");
  if (!(t > 0.0)) throw Error(ErrorCode::NonPositiveT, "neighborhood radius must be > 0");
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < space.size(); ++y) {
    if (eval(space(x, y), t) > 1.0 - t) out.push_back(y);
  }
  return out;
}

Verdict neighborhood_ball_equivalence(const PMSpace& space, std::size_t x, double t,
                                      double bisect_tol) {
  const auto nbhd = strong_neighborhood(space, x, t);
  bool undecided = false;
  for (std::size_t y = 0; y < space.size(); ++y) {
    const bool in_nbhd = std::binary_search(nbhd.begin(), nbhd.end(), y);
    const LevyResult r = distance_to_neutral(space, x, y, bisect_tol);
    if (r.encloses(t)) {
      undecided = true;
      continue;
    }
    if (in_nbhd != (r.value < t)) return Verdict::False;
  }
  return undecided ? Verdict::Indeterminate : Verdict::True;
}

MetrizationReport metrization_report(const PMSpace& space, double bisect_tol) {
  const auto check = validate(space);
  if (!check.ok()) {
    throw Error(ErrorCode::InvalidSpace, std::to_string(check.violations.size()) +
                                             " axiom violation(s); run validate for details");
  }
  const auto n = static_cast<Eigen::Index>(space.size());
  MetrizationReport report;
  report.k = space.triangle().lipschitz_k();
  report.tolerance = 3.0 * bisect_tol;
  report.sigma = Eigen::MatrixXd::Zero(n, n);
  report.lower = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto x = static_cast<std::size_t>(i);
      const auto y = static_cast<std::size_t>(j);
      report.sigma(i, j) = report.sigma(j, i) = sigma(space, x, y, bisect_tol).value;
      report.lower(i, j) = report.lower(j, i) = distance_to_neutral(space, x, y, bisect_tol).value;
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double s = report.sigma(i, j);
      const double l = report.lower(i, j);
      const auto x = static_cast<std::size_t>(i);
      const auto y = static_cast<std::size_t>(j);
      if (l > s + report.tolerance) report.violations.push_back({x, y, false});
      if (s > report.k * l + report.tolerance) report.violations.push_back({x, y, true});
    }
  }
  return report;
}

}  // namespace pmetric
