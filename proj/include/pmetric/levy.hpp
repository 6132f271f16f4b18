#pragma once

#include <span>

#include "pmetric/distribution.hpp"

namespace pmetric {

inline constexpr double kDefaultBisectTol = 1e-12;

/// Enclosure of a modified Lévy distance: the true value lies in
/// [lower, upper]; `value` is the midpoint.
struct LevyResult {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;

  /// True when x cannot be ordered against the distance from the bracket.
  bool encloses(double x) const noexcept { return lower <= x && x <= upper; }
};

/// [0, 1/h) ⊂ A^h_{F,G} ∩ A^h_{G,F}, where A^h_{F,G} = {t >= 0 : G(t) <= F(t+h) + h}.
///
/// Decided by enumerating the breakpoints of t ↦ G(t) and t ↦ F(t+h) inside
/// [0, 1/h) and comparing right limits there. The only inexactness is the
/// rounding of the shifted locations F.location − h.
bool admissible(const Distribution& f, const Distribution& g, double h);

/// d_L(F, G) by bisection on h over (0, 1]; the admissible set is up-closed
/// in h. Equal arguments short-circuit to an exact 0.
LevyResult levy_distance(const Distribution& f, const Distribution& g,
                         double bisect_tol = kDefaultBisectTol);

/// d_L(H_a, H_b) = min(1, |b − a|, 1 / min(a, b)), with 1/0 = +inf.
double heaviside_closed_form(double a, double b) noexcept;

/// Finite-prefix proxy for weak convergence of `fs` to `f`: the last distance
/// is below `tol` and the distances over the second half of the prefix never
/// grow by more than `tol`. A test utility, not a proof of convergence.
bool weakly_converges(std::span<const Distribution> fs, const Distribution& f, double tol,
                      double bisect_tol = kDefaultBisectTol);

}  // namespace pmetric
