#include "orbithk/driver.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

namespace {

using orbithk::driver::RunConfig;
using orbithk::driver::json;

struct CommonOpts {
  std::string algebra = "all";
  double c = 0.0;
  double t = 1.0;
  double eta = 0.0;
  bool eta_set = false;
  int trials = 200;
  bool trials_set = false;
  std::uint64_t seed = 42;
  std::string json_path;
  std::string cache_dir;
  std::vector<std::string> tol;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--algebra", o.algebra, "Algebra, e.g. A2, E8, or 'all'");
  cmd->add_option("--c", o.c, "Potential-family constant c >= 0")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--t", o.t, "Orbit point X = t e_theta, t > 0")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--eta", o.eta, "Set the orbit point by eta(X) instead of t")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--trials", o.trials, "Random trials per check")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--json", o.json_path, "Write the JSON report to PATH");
  cmd->add_option("--cache", o.cache_dir,
                  "Structure-constant cache directory (default: $ORBIT_HK_CACHE)");
  cmd->add_option("--tol", o.tol, "Tolerance override, name=value (repeatable)");
}

RunConfig to_config(const CLI::App* cmd, const CommonOpts& o, const std::string& command) {
  RunConfig cfg;
  cfg.command = command;
  cfg.algebras = orbithk::driver::parse_algebras(o.algebra);
  cfg.c = o.c;
  cfg.t = o.t;
  if (cmd->count("--eta")) cfg.eta = o.eta;
  cfg.trials = o.trials;
  cfg.trials_explicit = cmd->count("--trials") > 0;
  cfg.seed = o.seed;
  cfg.cache_dir = cmd->count("--cache") ? o.cache_dir
                                        : orbithk::driver::default_cache_dir();
  for (const std::string& s : o.tol) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw CLI::ValidationError("--tol", "expected name=value, got '" + s + "'");
    cfg.tol[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
  }
  return cfg;
}

int emit(const json& report, const std::string& json_path) {
  const std::string text = report.dump(2);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 2;
    }
    out << text << "\n";
  }
  std::cout << text << "\n";
  return orbithk::driver::report_pass(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal nilpotent orbits of simple complex Lie algebras: "
               "exact Chevalley bases and hyperKahler metric verification"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  CommonOpts vo, lo, so, eo;
  CLI::App* verify = app.add_subcommand("verify", "Run the full verification suite");
  add_common(verify, vo);

  CLI::App* table = app.add_subcommand("lambda-table",
                                       "Compute lambda^2 across the classical and "
                                       "exceptional series and compare to the "
                                       "published values");
  add_common(table, lo);

  CLI::App* spectrum = app.add_subcommand("spectrum",
                                          "sl(2)-decomposition and minimality verdict");
  add_common(spectrum, so);
  std::string triple = "theta";
  std::string triple_file;
  spectrum->add_option("--triple", triple, "theta | principal | file");
  spectrum->add_option("--triple-file", triple_file,
                       "JSON file with E/H/F coefficient arrays");

  CLI::App* eh = app.add_subcommand("eguchi-hanson",
                                    "sl(2) ODE and Eguchi-Hanson form checks");
  add_common(eh, eo);
  std::vector<double> eh_c = {0.0, 1.0, 3.0};
  int eh_points = 100;
  eh->add_option("--eh-c", eh_c, "c values for the standard-form sweep");
  eh->add_option("--eh-points", eh_points, "Sample points per sweep")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      RunConfig cfg = to_config(verify, vo, "verify");
      return emit(orbithk::driver::run_verify(cfg), vo.json_path);
    }
    if (table->parsed()) {
      RunConfig cfg = to_config(table, lo, "lambda-table");
      return emit(orbithk::driver::run_lambda_table(cfg), lo.json_path);
    }
    if (spectrum->parsed()) {
      RunConfig cfg = to_config(spectrum, so, "spectrum");
      if (!triple_file.empty()) {
        cfg.triple = "file";
        cfg.triple_file = triple_file;
      } else {
        cfg.triple = triple;
      }
      return emit(orbithk::driver::run_spectrum(cfg), so.json_path);
    }
    if (eh->parsed()) {
      RunConfig cfg = to_config(eh, eo, "eguchi-hanson");
      cfg.eh_c = eh_c;
      cfg.eh_points = eh_points;
      return emit(orbithk::driver::run_eguchi_hanson(cfg), eo.json_path);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
