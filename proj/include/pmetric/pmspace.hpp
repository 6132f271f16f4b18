#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pmetric/distribution.hpp"
#include "pmetric/levy.hpp"
#include "pmetric/triangle.hpp"

namespace pmetric {

/// A finite probabilistic metric space (G, D, ⋆).
///
/// D is stored as its strict upper triangle; the diagonal is H_0 and
/// symmetry hold by construction. The triangle inequality and the
/// "D(x,y) = H_0 only on the diagonal" axiom are checked by validate().
class PMSpace {
 public:
  /// `upper` holds D(i, j) for i < j in row-major order, n(n-1)/2 entries.
  PMSpace(std::vector<std::string> points, TriangleFn tf, std::vector<Distribution> upper);

  /// From a full n×n row-major matrix; rejects asymmetric input and a
  /// diagonal other than H_0 with ShapeMismatch.
  static PMSpace from_dense(std::vector<std::string> points, TriangleFn tf,
                            const std::vector<Distribution>& dense);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& label(std::size_t i) const { return points_.at(i); }
  const TriangleFn& triangle() const noexcept { return tf_; }

  /// Throws UnknownPoint.
  std::size_t index_of(const std::string& label) const;

  const Distribution& operator()(std::size_t x, std::size_t y) const;

 private:
  std::size_t slot(std::size_t x, std::size_t y) const noexcept;

  std::vector<std::string> points_;
  TriangleFn tf_;
  std::vector<Distribution> upper_;
  Distribution neutral_;
};

struct SpaceViolation {
  int axiom = 0;  // 1: D(x,y) = H_0 off the diagonal, 3: D(x,y)⋆D(y,z) ≰ D(x,z)
  std::size_t x = 0, y = 0, z = 0;

  friend bool operator==(const SpaceViolation&, const SpaceViolation&) = default;
};

struct ValidationReport {
  std::vector<SpaceViolation> violations;  // sorted by (axiom, x, y, z)
  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate(const PMSpace& space);

/// D(p, q) = H_{d(p,q)}. `d` must be a metric exactly in binary64
/// (NotAMetric) and `tf` of kind Sum (IncompatibleTriangleFn).
PMSpace induced_from_metric(std::vector<std::string> points, const Eigen::MatrixXd& d,
                            TriangleFn tf);

/// d_L(D(x, y), H_0).
LevyResult distance_to_neutral(const PMSpace& space, std::size_t x, std::size_t y,
                               double bisect_tol = kDefaultBisectTol);

/// σ_D(x, y) = max_z d_L(D(x,z), D(y,z)). The returned bracket is the max of
/// the per-z brackets, which encloses the max of the true distances.
LevyResult sigma(const PMSpace& space, std::size_t x, std::size_t y,
                 double bisect_tol = kDefaultBisectTol);

/// N_x(t) = { y : D(x,y)(t) > 1 − t }, as sorted point indices.
std::vector<std::size_t> strong_neighborhood(const PMSpace& space, std::size_t x, double t);

enum class Verdict { False, True, Indeterminate };

/// Compares N_x(t) with the ball { y : d_L(D(x,y), H_0) < t }. Indeterminate
/// when t falls inside the bisection bracket of one of the distances.
Verdict neighborhood_ball_equivalence(const PMSpace& space, std::size_t x, double t,
                                      double bisect_tol = kDefaultBisectTol);

struct SandwichViolation {
  std::size_t x = 0, y = 0;
  bool upper_side = false;  // false: lower > σ, true: σ > k·lower
};

struct MetrizationReport {
  Eigen::MatrixXd sigma;
  Eigen::MatrixXd lower;
  double k = 1.0;
  double tolerance = 0.0;
  std::vector<SandwichViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// lower(x,y) = d_L(D(x,y), H_0) <= σ(x,y) <= k·lower(x,y), each checked
/// with slack 3·bisect_tol. Throws InvalidSpace unless validate() passes.
MetrizationReport metrization_report(const PMSpace& space, double bisect_tol = kDefaultBisectTol);

}  // namespace pmetric
