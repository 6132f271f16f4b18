// pmetric: command-line front end.
//
// Exit status: 0 when every assertion holds, 1 for a mathematical violation
// or an unsupported request, 2 for bad input (files, labels, flags).

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pmetric/error.hpp"

namespace {

using namespace pmetric;
using namespace pmetric::cli;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpace:
    case ErrorCode::NotContraction:
    case ErrorCode::KQTooLarge:
    case ErrorCode::NoConvergence:
    case ErrorCode::UnsupportedTriangleFn:
    case ErrorCode::IncompatibleTriangleFn:
    case ErrorCode::NotLipschitz:
    case ErrorCode::NotConverging:
    case ErrorCode::NotAMetric:
      return kExitViolation;
    default:
      return kExitInput;
  }
}

void header(Emitter& e, const std::string& command, const RunConfig& cfg) {
  e.field("command", command);
  e.field("assert_tol", cfg.assert_tol);
  e.field("bisect_tol", cfg.bisect_tol);
  e.field("grid", cfg.oracle_grid);
  e.field("format", cfg.format == Format::Machine ? "machine" : "text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in finite probabilistic metric spaces"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--assert-tol", cfg.assert_tol, "Tolerance for numerical assertions")
      ->capture_default_str();
  app.add_option("--bisect-tol", cfg.bisect_tol, "Width of Levy-distance brackets")
      ->capture_default_str();
  app.add_option("--grid", cfg.oracle_grid, "Grid size of the brute-force star oracle")
      ->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  std::string space, a, b;
  auto* validate = app.add_subcommand("validate", "Check the PM-space axioms of a space file");
  validate->add_option("space", space, "PMSpace file")->required();

  auto* levy = app.add_subcommand("levy", "Modified Levy distance between two distributions");
  levy->add_option("a", a, "Distribution file")->required();
  levy->add_option("b", b, "Distribution file")->required();

  StarArgs star_args;
  auto* star = app.add_subcommand("star", "F * G for a triangle function, checked against the grid oracle");
  star->add_option("a", star_args.a, "Distribution file")->required();
  star->add_option("b", star_args.b, "Distribution file")->required();
  star->add_option("--kind", star_args.kind, "sum, max, conorm or pointwise")->capture_default_str();
  star->add_option("--tnorm", star_args.tnorm, "min, prod or luk")->capture_default_str();

  auto* report = app.add_subcommand("report", "Metrization report: sigma, lower bound, sandwich");
  report->add_option("space", space, "PMSpace file")->required();

  FixpointArgs fix_args;
  auto* fixpoint = app.add_subcommand("fixpoint", "Iterate a C-contraction and certify the rate");
  fixpoint->add_option("space", fix_args.space, "PMSpace file")->required();
  fixpoint->add_option("map", fix_args.map, "SelfMap file")->required();
  fixpoint->add_option("--q", fix_args.q, "Contraction constant")->required();
  fixpoint->add_option("--x0", fix_args.x0, "Starting point label")->required();
  fixpoint->add_option("--max-iter", fix_args.max_iter, "Iteration cap")->capture_default_str();

  EnvelopeArgs env_args;
  std::string out_path;
  auto* env = app.add_subcommand("envelope", "Sup-star envelope of data given on a subset");
  env->add_option("space", env_args.space, "PMSpace file")->required();
  env->add_option("data", env_args.data, "ProbLipMap file")->required();
  env->add_option("--subset", env_args.subset, "Point labels of A (default: all points)")
      ->delimiter(',');
  env->add_option("--out", out_path, "Write the envelope map here");

  NeighborhoodArgs nb_args;
  auto* nb = app.add_subcommand("neighborhood", "Compare N_x(t) with the d_L ball of radius t");
  nb->add_option("space", nb_args.space, "PMSpace file")->required();
  nb->add_option("--x", nb_args.x, "Center label")->required();
  nb->add_option("--t", nb_args.t, "Radius")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }
  cfg.format = format == "machine" ? Format::Machine : Format::Text;
  if (!out_path.empty()) env_args.out = out_path;

  // The report is buffered so that a failing run prints a complete record set.
  std::ostringstream buffer;
  Emitter e(buffer, cfg.format);
  const std::string command = app.get_subcommands().front()->get_name();
  header(e, command, cfg);
  int rc = kExitOk;
  try {
    check_config(cfg);
    if (command == "validate") rc = cmd_validate(cfg, e, space);
    else if (command == "levy") rc = cmd_levy(cfg, e, a, b);
    else if (command == "star") rc = cmd_star(cfg, e, star_args);
    else if (command == "report") rc = cmd_report(cfg, e, space);
    else if (command == "fixpoint") rc = cmd_fixpoint(cfg, e, fix_args);
    else if (command == "envelope") rc = cmd_envelope(cfg, e, env_args);
    else if (command == "neighborhood") rc = cmd_neighborhood(cfg, e, nb_args);
  } catch (const Error& err) {
    rc = exit_code_for(err.code());
    e.field("error", std::string(to_string(err.code())));
    e.field("message", std::string(err.what()));
    std::cerr << "pmetric: " << err.what() << '\n';
  } catch (const std::exception& err) {
    rc = kExitInput;
    e.field("error", "Internal");
    e.field("message", std::string(err.what()));
    std::cerr << "pmetric: " << err.what() << '\n';
  }
  e.field("exit", rc);
  std::cout << buffer.str();
  return rc;
}
