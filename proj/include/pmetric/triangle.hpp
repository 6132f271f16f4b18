#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmetric/distribution.hpp"
#include "pmetric/levy.hpp"

namespace pmetric {

enum class TNormKind { Minimum, Product, Lukasiewicz };

/// A built-in t-norm. All three are 1-Lipschitz and continuous.
struct TNorm {
  TNormKind kind = TNormKind::Minimum;

  double lipschitz_k() const noexcept { return 1.0; }

  friend bool operator==(const TNorm&, const TNorm&) = default;
};

/// Constructions of a triangle function from a t-norm T:
///   Sum        (F ⋆ G)(t) = sup_{u+v=t}      T(F(u), G(v))
///   Max        (F ⋆ G)(t) = sup_{max(u,v)=t} T(F(u), G(v))
///   Conorm     (F ⋆ G)(t) = inf_{u+v=t}      T*(F(u), G(v))
///   Pointwise  (F ⋆ G)(t) = T(F(t), G(t))
/// with u, v >= 0 throughout.
enum class TriangleKind { Sum, Max, Conorm, Pointwise };

struct TriangleFn {
  TriangleKind kind = TriangleKind::Sum;
  TNorm tnorm{};

  /// Lipschitz constant of ⋆ with respect to d_L, inherited from T.
  double lipschitz_k() const noexcept { return tnorm.lipschitz_k(); }

  friend bool operator==(const TriangleFn&, const TriangleFn&) = default;
};

inline constexpr std::array<TNormKind, 3> kAllTNorms = {
    TNormKind::Minimum, TNormKind::Product, TNormKind::Lukasiewicz};
inline constexpr std::array<TriangleKind, 4> kAllTriangleKinds = {
    TriangleKind::Sum, TriangleKind::Max, TriangleKind::Conorm, TriangleKind::Pointwise};

std::string_view to_string(TNormKind kind) noexcept;
std::string_view to_string(TriangleKind kind) noexcept;
std::string to_string(const TriangleFn& tf);

/// T(x, y); throws OutOfRange unless x, y ∈ [0, 1].
double tnorm_eval(TNorm t, double x, double y);

/// T*(x, y) = 1 − T(1 − x, 1 − y).
double tconorm_eval(TNorm t, double x, double y);

/// Exact F ⋆ G on step functions.
Distribution star(const TriangleFn& tf, const Distribution& f, const Distribution& g);

/// Brute-force F ⋆ G: the defining sup/inf evaluated over the uniform grid
/// t_k = k·t_max/grid, k = 0..grid, with u and v restricted to grid points.
/// The value on the cell (t_{k-1}, t_k] is the grid value at t_k for the sup
/// constructions and at t_{k-1} for the conorm one, which keeps it between
/// the exact values at the two ends of the cell. Test oracle only.
Distribution star_oracle(const TriangleFn& tf, const Distribution& f, const Distribution& g,
                         int grid = 2048, std::optional<double> t_max = std::nullopt);

/// Largest jump location of F plus that of G, plus one.
double default_oracle_t_max(const Distribution& f, const Distribution& g) noexcept;

using BinaryOp = std::function<Distribution(const Distribution&, const Distribution&)>;

struct AxiomSample {
  Distribution f, g, k;
};

enum class TriangleAxiom { Closure, Commutativity, Associativity, Neutral, Monotonicity };

std::string_view to_string(TriangleAxiom axiom) noexcept;

struct AxiomCounterexample {
  std::size_t sample = 0;
  TriangleAxiom axiom = TriangleAxiom::Closure;
  std::string detail;
};

struct AxiomReport {
  std::size_t samples = 0;
  std::array<std::size_t, 5> failures{};
  std::optional<AxiomCounterexample> first;

  bool ok() const noexcept { return !first.has_value(); }
  std::size_t failures_of(TriangleAxiom a) const noexcept {
    return failures[static_cast<std::size_t>(a)];
  }
};

/// Checks commutativity, associativity, the H_0 neutral element, closure
/// (canonical output) and monotonicity on every sample. Equalities are exact
/// comparisons of canonical forms. Monotonicity is exercised on the pairs
/// F <= max(F, G) and G <= max(F, G).
AxiomReport check_triangle_axioms(const BinaryOp& op, std::span<const AxiomSample> samples);
AxiomReport check_triangle_axioms(const TriangleFn& tf, std::span<const AxiomSample> samples);

struct LipschitzSample {
  Distribution f, f_prime, g, g_prime;
};

struct LipschitzReport {
  std::size_t samples = 0;
  std::vector<std::size_t> violations;
  /// max of d_L(F⋆G, F'⋆G') / (d_L(F,F') + d_L(G,G')) over samples with a
  /// nonzero denominator.
  double max_ratio = 0.0;

  bool ok() const noexcept { return violations.empty(); }
};

/// d_L(F⋆G, F'⋆G') <= k·(d_L(F,F') + d_L(G,G')) + tol on every sample.
LipschitzReport check_lipschitz(const TriangleFn& tf, std::span<const LipschitzSample> samples,
                                double tol, double bisect_tol = kDefaultBisectTol);

}  // namespace pmetric
