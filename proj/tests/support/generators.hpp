#pragma once

// Random inputs for property tests. Locations are multiples of 1/16 and
// levels multiples of 1/64, so sums, products and the t-norm arithmetic used
// by the triangle functions are exact in binary64. That is what lets the
// axiom checks compare canonical forms with ==.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pmetric/pmetric.hpp"

namespace pmetric::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  /// k distinct integers from [lo, hi], sorted.
  std::vector<int> distinct_sorted(int k, int lo, int hi) {
    std::vector<int> pool(static_cast<std::size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i) pool[static_cast<std::size_t>(i - lo)] = i;
    std::shuffle(pool.begin(), pool.end(), gen_);
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

struct StepShape {
  int max_jumps = 4;
  int min_loc16 = 0;   // smallest location, in units of 1/16
  int max_loc16 = 64;  // largest location, in units of 1/16
  double full_mass = 0.5;
};

inline Distribution random_step(Rng& rng, StepShape shape = {}) {
  const int n = rng.uniform_int(1, shape.max_jumps);
  const auto locs = rng.distinct_sorted(n, shape.min_loc16, shape.max_loc16);
  auto levels = rng.distinct_sorted(n, 1, 64);
  if (rng.coin(shape.full_mass)) levels.back() = 64;
  std::vector<Jump> jumps;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    jumps.push_back({locs[k] / 16.0, levels[k] / 64.0});
  }
  return make_step(std::move(jumps));
}

inline std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

/// ℓ1 distances between distinct random points of (Z/16)², exact in binary64.
inline Eigen::MatrixXd random_l1_metric(Rng& rng, std::size_t n, int max_coord16 = 24) {
  std::vector<std::pair<int, int>> pts;
  while (pts.size() < n) {
    std::pair<int, int> p{rng.uniform_int(0, max_coord16), rng.uniform_int(0, max_coord16)};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto& a = pts[static_cast<std::size_t>(i)];
      const auto& b = pts[static_cast<std::size_t>(j)];
      d(i, j) = (std::abs(a.first - b.first) + std::abs(a.second - b.second)) / 16.0;
    }
  }
  return d;
}

/// d(x, y) = max(r_x, r_y) for x != y: an ultrametric.
inline Eigen::MatrixXd random_ultrametric(Rng& rng, std::size_t n, int max_r16 = 24) {
  std::vector<double> r(n);
  for (auto& v : r) v = rng.uniform_int(1, max_r16) / 16.0;
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i != j) d(i, j) = std::max(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)]);
    }
  }
  return d;
}

/// G scaled by s: jumps of G moved from c to c·s.
inline Distribution scaled(const Distribution& base, double s) {
  std::vector<Jump> js(base.jumps().begin(), base.jumps().end());
  for (auto& j : js) j.location *= s;
  return make_step(std::move(js));
}

/// A "simple space" D(x, y)(t) = G(t / d(x, y)). For the sum constructions
/// it is a PM-space whenever d is a metric (⋆_T <= ⋆_min and
/// G_a ⋆_min G_b = G_{a+b}); for the max, pointwise and conorm constructions
/// d must be an ultrametric.
inline PMSpace simple_space(const Distribution& base, const Eigen::MatrixXd& d, TriangleFn tf) {
  const auto n = static_cast<std::size_t>(d.rows());
  std::vector<Distribution> upper;
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < d.cols(); ++j) upper.push_back(scaled(base, d(i, j)));
  }
  return PMSpace(labels(n), tf, std::move(upper));
}

/// Base distribution for simple spaces: first jump strictly after 0, so that
/// no off-diagonal entry collapses to H_0.
inline Distribution random_base(Rng& rng) {
  return random_step(rng, StepShape{3, 1, 32, 0.5});
}

inline PMSpace random_valid_space(Rng& rng, std::size_t n, TriangleFn tf) {
  const Distribution base = random_base(rng);
  const Eigen::MatrixXd d = tf.kind == TriangleKind::Sum ? random_l1_metric(rng, n)
                                                         : random_ultrametric(rng, n);
  return simple_space(base, d, tf);
}

/// Points 1, 1/2, ..., 1/32 and 0 with d(x, y) = max(x, y), an ultrametric,
/// and the map x -> x/2 sending 1/32 to 0. Every pair is contracted by
/// exactly 1/2 and the iteration from 1 reaches 0 in six steps.
struct ContractionInstance {
  PMSpace space;
  SelfMap map;
  double q = 0.5;
  std::size_t x0 = 0;
  std::size_t fixed = 0;
};

inline PMSpace radius_space(const std::vector<double>& r, std::vector<std::string> names) {
  const auto m = static_cast<Eigen::Index>(r.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i != j) d(i, j) = std::max(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)]);
    }
  }
  return induced_from_metric(std::move(names), d, TriangleFn{});
}

inline ContractionInstance halving_instance() {
  std::vector<double> r{1.0};
  std::vector<std::string> names{"1"};
  for (int e = 1; e <= 5; ++e) {
    r.push_back(std::ldexp(1.0, -e));
    names.push_back("1/" + std::to_string(1 << e));
  }
  r.push_back(0.0);
  names.push_back("0");
  SelfMap m;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) m.mapping[names[i]] = names[i + 1];
  m.mapping["0"] = "0";
  return {radius_space(r, names), std::move(m), 0.5, 0, 6};
}

/// A random contraction with a planted fixed point p0 (radius 0). Point i
/// has a radius r_i in (0, 1] and is sent to a point of radius <= q·r_i, so
/// under d(x, y) = max(r_x, r_y) every pair is contracted by q.
inline ContractionInstance planted_contraction(Rng& rng, std::size_t n, double q) {
  std::vector<double> r{0.0};
  while (r.size() < n) r.push_back(rng.uniform_int(1, 64) / 64.0);
  const auto names = labels(n);
  SelfMap m;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> targets;
    for (std::size_t j = 0; j < n; ++j) {
      if (r[j] <= q * r[i] && (i == 0 || j != i)) targets.push_back(j);
    }
    const auto pick = targets[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<int>(targets.size()) - 1))];
    m.mapping[names[i]] = names[pick];
  }
  const auto x0 = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n) - 1));
  return {radius_space(r, names), std::move(m), q, x0, 0};
}

}  // namespace pmetric::testing
