#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "emit.hpp"

namespace pmetric::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;

struct RunConfig {
  double assert_tol = 1e-9;
  double bisect_tol = 1e-12;
  int oracle_grid = 2048;
  Format format = Format::Text;
};

/// Throws Error(OutOfRange) unless 0 < bisect_tol < assert_tol < 1 and grid >= 2.
void check_config(const RunConfig& cfg);

struct StarArgs {
  std::string a, b, kind = "sum", tnorm = "min";
};
struct FixpointArgs {
  std::string space, map, x0;
  double q = 0.0;
  std::size_t max_iter = 100;
};
struct EnvelopeArgs {
  std::string space, data;
  std::vector<std::string> subset;  // empty: every point
  std::optional<std::string> out;
};
struct NeighborhoodArgs {
  std::string space, x;
  double t = 0.0;
};

// Each command writes its report to `out` and returns the exit code.
// Library errors propagate; run() maps them to exit codes.
int cmd_validate(const RunConfig& cfg, Emitter& e, const std::string& space);
int cmd_levy(const RunConfig& cfg, Emitter& e, const std::string& a, const std::string& b);
int cmd_star(const RunConfig& cfg, Emitter& e, const StarArgs& args);
int cmd_report(const RunConfig& cfg, Emitter& e, const std::string& space);
int cmd_fixpoint(const RunConfig& cfg, Emitter& e, const FixpointArgs& args);
int cmd_envelope(const RunConfig& cfg, Emitter& e, const EnvelopeArgs& args);
int cmd_neighborhood(const RunConfig& cfg, Emitter& e, const NeighborhoodArgs& args);

}  // namespace pmetric::cli
