#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmetric/distribution.hpp"
#include "pmetric/levy.hpp"
#include "pmetric/pmspace.hpp"

namespace pmetric {

/// A map f : G → Δ+, keyed by point label. Whether it is probabilistic
/// 1-Lipschitz, D(x,y) ⋆ f(y) <= f(x), is decided by check_lip1.
struct ProbLipMap {
  std::map<std::string, Distribution> values;

  /// Throws MissingPoint.
  const Distribution& at(const std::string& label) const;

  friend bool operator==(const ProbLipMap&, const ProbLipMap&) = default;
};

/// A self-map of the point set, keyed by label.
struct SelfMap {
  std::map<std::string, std::string> mapping;

  /// Image index of every point, in the space's order. Throws MissingPoint
  /// when the map is not total and UnknownPoint for images outside the space.
  std::vector<std::size_t> resolve(const PMSpace& space) const;
};

struct Lip1Report {
  std::vector<std::pair<std::size_t, std::size_t>> violations;  // (x, y), sorted
  bool ok() const noexcept { return violations.empty(); }
};

Lip1Report check_lip1(const PMSpace& space, const ProbLipMap& f);

/// δ_x : y ↦ D(y, x).
ProbLipMap delta(const PMSpace& space, std::size_t x);

/// d_∞(f, g) = max_x d_L(f(x), g(x)); both maps must share their key set.
LevyResult uniform_dist(const ProbLipMap& f, const ProbLipMap& g,
                        double bisect_tol = kDefaultBisectTol);

/// f̃_A(x) = max_{y ∈ A} f(y) ⋆ D(x, y) for every point x of the space.
/// Only Sum and Max kinds are accepted: those are the constructions for which
/// ⋆ distributes over finite pointwise maxima.
ProbLipMap envelope(const PMSpace& space, const ProbLipMap& f, std::span<const std::size_t> subset);

struct EquicontinuityReport {
  struct Entry {
    std::size_t map = 0, x = 0, y = 0;
  };
  std::vector<Entry> violations;
  double max_excess = 0.0;  // max of d_L(f(x),f(y)) − k·d_L(D(x,y),H_0)
  bool ok() const noexcept { return violations.empty(); }
};

/// d_L(f(x), f(y)) <= k·d_L(D(x,y), H_0) + tol for every f, x, y. Every map
/// must pass check_lip1 first (NotLipschitz).
EquicontinuityReport equicontinuity_check(const PMSpace& space, std::span<const ProbLipMap> fs,
                                          double tol, double bisect_tol = kDefaultBisectTol);

struct ContractionCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// d_L(D(m x, m y), H_0) <= q·d_L(D(x, y), H_0) for all pairs. A pair whose
/// brackets overlap is re-run at bisect_tol/100 and, if still undecided,
/// counted as satisfied.
ContractionCheck is_c_contraction(const PMSpace& space, const SelfMap& m, double q,
                                  double bisect_tol = kDefaultBisectTol);

struct FixpointCertificate {
  std::size_t fixed_point = 0;
  std::vector<std::size_t> iterates;  // x_0, ..., x_N = x*
  std::vector<double> bounds;         // k(kq)^n / (1 − kq) · d_L(D(x_1, x_0), H_0)
  std::vector<double> achieved;       // d_L(D(x_n, x*), H_0)
  double k = 1.0;
  double q = 0.0;
  double tolerance = 0.0;

  bool holds() const noexcept;
};

/// Runs x_{n+1} = m(x_n) from x0 until it stops moving, then certifies the
/// a priori rate at every step and that x* is the only fixed point.
/// Throws QOutOfRange, KQTooLarge, NotContraction or NoConvergence.
FixpointCertificate fixpoint_iterate(const PMSpace& space, const SelfMap& m, double q,
                                     std::size_t x0, std::size_t max_iter, double tol = 1e-9,
                                     double bisect_tol = kDefaultBisectTol);

/// Closure of Lip¹ under limits on a finite prefix: given 1-Lipschitz maps
/// fs whose last element is within `tol` of f in d_∞, returns whether f is
/// itself 1-Lipschitz. Throws NotLipschitz when some fs[n] is not, and
/// NotConverging when the prefix does not end within `tol` of f.
bool limit_closure_check(const PMSpace& space, std::span<const ProbLipMap> fs,
                         const ProbLipMap& f, double tol, double bisect_tol = kDefaultBisectTol);

}  // namespace pmetric
