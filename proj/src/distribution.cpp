#include "pmetric/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pmetric/error.hpp"

namespace pmetric {
namespace {

// Index one past the last jump whose location is strictly below t.
std::size_t count_below(std::span<const Jump> js, double t) {
  auto it = std::lower_bound(js.begin(), js.end(), t,
                             [](const Jump& j, double v) { return j.location < v; });
  return static_cast<std::size_t>(it - js.begin());
}

// Index one past the last jump whose location is <= t.
std::size_t count_at_or_below(std::span<const Jump> js, double t) {
  auto it = std::upper_bound(js.begin(), js.end(), t,
                             [](double v, const Jump& j) { return v < j.location; });
  return static_cast<std::size_t>(it - js.begin());
}

}  // namespace

Distribution Distribution::from_right_limits(std::vector<Jump> samples) {
  std::vector<Jump> out;
  out.reserve(samples.size());
  double prev_loc = -std::numeric_limits<double>::infinity();
  double level = 0.0;
  for (const auto& s : samples) {
    if (s.location < prev_loc) {
      throw Error(ErrorCode::NonMonotone, "right-limit samples are not sorted by location");
    }
    if (s.level < level) {
      throw Error(ErrorCode::NonMonotone,
                  "level drops to " + std::to_string(s.level) + " at " + std::to_string(s.location));
    }
    prev_loc = s.location;
    if (s.level > level) {
      // Mass to the right of a negative location is already present on t > 0.
      const double loc = std::max(s.location, 0.0);
      if (!out.empty() && out.back().location == loc) {
        out.back().level = s.level;
      } else {
        out.push_back({loc, s.level});
      }
      level = s.level;
    }
  }
  return Distribution(std::move(out));
}

Distribution make_step(std::vector<Jump> jumps) {
  for (const auto& j : jumps) {
    if (!(j.location >= 0.0)) {
      throw Error(ErrorCode::NegativeLocation,
                  "jump location " + std::to_string(j.location) + " is not a nonnegative number");
    }
    if (!(j.level > 0.0 && j.level <= 1.0)) {
      throw Error(ErrorCode::LevelOutOfRange,
                  "jump level " + std::to_string(j.level) + " is outside (0, 1]");
    }
  }
  std::sort(jumps.begin(), jumps.end(), [](const Jump& a, const Jump& b) {
    return a.location < b.location || (a.location == b.location && a.level < b.level);
  });
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
  std::erase_if(jumps, [](const Jump& j) { return std::isinf(j.location); });
  for (std::size_t i = 1; i < jumps.size(); ++i) {
    if (jumps[i].location == jumps[i - 1].location || jumps[i].level <= jumps[i - 1].level) {
      throw Error(ErrorCode::NonMonotone,
                  "jumps (" + std::to_string(jumps[i - 1].location) + ", " +
                      std::to_string(jumps[i - 1].level) + ") and (" +
                      std::to_string(jumps[i].location) + ", " + std::to_string(jumps[i].level) +
                      ") are not strictly increasing");
    }
  }
  return Distribution(std::move(jumps));
}

Distribution heaviside(double a) {
  if (!(a >= 0.0)) {
    throw Error(ErrorCode::NegativeLocation, "heaviside location " + std::to_string(a) + " < 0");
  }
  if (std::isinf(a)) return {};
  return make_step({{a, 1.0}});
}

double eval(const Distribution& f, double t) noexcept {
  if (t == std::numeric_limits<double>::infinity()) return 1.0;
  const auto js = f.jumps();
  const auto n = count_below(js, t);
  return n == 0 ? 0.0 : js[n - 1].level;
}

double eval_right(const Distribution& f, double t) noexcept {
  const auto js = f.jumps();
  const auto n = count_at_or_below(js, t);
  return n == 0 ? 0.0 : js[n - 1].level;
}

bool leq(const Distribution& f, const Distribution& g) noexcept {
  // Both sides are constant between consecutive breakpoints of the union, so
  // comparing right limits at F's breakpoints is enough: G only grows
  // between them.
  for (const auto& j : f.jumps()) {
    if (j.level > eval_right(g, j.location)) return false;
  }
  return true;
}

Distribution pointwise_max(std::span<const Distribution> fs) {
  if (fs.empty()) throw Error(ErrorCode::OutOfRange, "pointwise_max of an empty family");
  std::vector<double> locs;
  for (const auto& f : fs) {
    for (const auto& j : f.jumps()) locs.push_back(j.location);
  }
  std::sort(locs.begin(), locs.end());
  locs.erase(std::unique(locs.begin(), locs.end()), locs.end());
  std::vector<Jump> samples;
  samples.reserve(locs.size());
  for (double p : locs) {
    double v = 0.0;
    for (const auto& f : fs) v = std::max(v, eval_right(f, p));
    samples.push_back({p, v});
  }
  return Distribution::from_right_limits(std::move(samples));
}

Distribution shift(const Distribution& f, double lambda) {
  if (!(lambda >= 0.0)) {
    throw Error(ErrorCode::NegativeLocation, "shift by " + std::to_string(lambda) + " < 0");
  }
  std::vector<Jump> js(f.jumps().begin(), f.jumps().end());
  for (auto& j : js) j.location += lambda;
  return make_step(std::move(js));
}

}  // namespace pmetric
