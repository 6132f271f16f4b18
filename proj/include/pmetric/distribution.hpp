#pragma once

#include <compare>
#include <span>
#include <vector>

namespace pmetric {

/// One step of a distribution function: the value rises to `level` just
/// after `location`.
struct Jump {
  double location;
  double level;

  friend bool operator==(const Jump&, const Jump&) = default;
};

/// A left-continuous, nondecreasing step function in Δ+.
///
/// F(t) is the largest level whose location lies strictly below t, 0 when no
/// location does, and 1 at t = +inf whatever the levels are (mass left at
/// infinity is allowed). Locations and levels are both strictly increasing,
/// which makes the jump list a unique canonical form: two distributions are
/// equal as functions iff their jump lists compare equal.
///
/// The default-constructed value has no jumps; it is the minimal element of
/// Δ+ (all mass at infinity), the same as heaviside(+inf).
class Distribution {
 public:
  Distribution() = default;

  std::span<const Jump> jumps() const noexcept { return jumps_; }
  std::size_t size() const noexcept { return jumps_.size(); }
  bool empty() const noexcept { return jumps_.empty(); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

  /// Builds the canonical form from right-limit samples: `samples` must be
  /// sorted by location and carry nondecreasing levels, each being the value
  /// of the function just to the right of its location. Samples that do not
  /// raise the level are dropped. Throws NonMonotone otherwise.
  static Distribution from_right_limits(std::vector<Jump> samples);

 private:
  explicit Distribution(std::vector<Jump> jumps) : jumps_(std::move(jumps)) {}

  friend Distribution make_step(std::vector<Jump> jumps);

  std::vector<Jump> jumps_;
};

/// Validating constructor. Sorts by location and removes exact duplicates;
/// anything else that is not strictly increasing in both coordinates is
/// rejected. A jump placed at +inf carries no mass below infinity and is
/// dropped.
Distribution make_step(std::vector<Jump> jumps);

/// H_a: 0 on t <= a, 1 on t > a. heaviside(+inf) has no jumps.
Distribution heaviside(double a);

/// Left-continuous value F(t); t may be +inf.
double eval(const Distribution& f, double t) noexcept;

/// Right limit lim_{s↓t} F(s).
double eval_right(const Distribution& f, double t) noexcept;

/// F(t) <= G(t) for every t.
bool leq(const Distribution& f, const Distribution& g) noexcept;

/// Pointwise maximum of a nonempty family.
Distribution pointwise_max(std::span<const Distribution> fs);

/// τ_λ F(t) = F(t − λ): every jump moved right by `lambda` >= 0.
Distribution shift(const Distribution& f, double lambda);

inline bool is_neutral(const Distribution& f) noexcept {
  return f.size() == 1 && f.jumps()[0].location == 0.0 && f.jumps()[0].level == 1.0;
}

}  // namespace pmetric
