// zermelo - command-line verifier for the Taub-NUT Randers construction
//
// Subcommands: verify-riemann, verify-killing, verify-isometry, verify-finsler,
// sample-flag, export-randers, geodesic. Exit codes: 0 all checks pass,
// 1 verification failure, 2 usage/configuration error.
//
// Config precedence: command-line flags > --config key=value file > defaults
// (a=1, m=n=0.5, samples=200, radius=2, seed=42).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zermelo/errors.hpp"
#include "zermelo/suites.hpp"

namespace {

using zermelo::ConfigError;
using zermelo::RunConfig;
using zermelo::VerificationReport;

// every --tol.<name> the suites understand
const std::vector<std::string> kToleranceNames = {
    "cross",    "decomposition", "bianchi",  "compatibility", "ricci",
    "residual", "homothety",     "deviation", "isometry",     "blocks",
    "norm",     "group",         "generator", "covector",     "windnorm",
    "implicit", "bnorm",         "fbound",    "einstein",     "spread",
    "flagresidual", "flagconst"};

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: expected key=value at " + path + ":" +
                        std::to_string(lineno));
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "a") cfg.a = std::stod(value);
      else if (key == "m") cfg.m = std::stod(value);
      else if (key == "n") cfg.n = std::stod(value);
      else if (key == "seed") cfg.seed = std::stoull(value);
      else if (key == "samples") cfg.samples = std::stoi(value);
      else if (key == "radius") cfg.radius = std::stod(value);
      else if (key == "format") cfg.format = value;
      else if (key == "out") cfg.out = value;
      else if (key.rfind("tol.", 0) == 0) cfg.tolerances[key.substr(4)] = std::stod(value);
      else throw ConfigError("config: unknown key '" + key + "' in " + path);
    } catch (const std::invalid_argument&) {
      throw ConfigError("config: bad value for '" + key + "' in " + path);
    } catch (const std::out_of_range&) {
      throw ConfigError("config: value out of range for '" + key + "' in " + path);
    }
  }
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--a", cfg.a, "Taub-NUT parameter a >= 0");
  sub->add_option("--m", cfg.m, "first rotation rate m > 0");
  sub->add_option("--n", cfg.n, "second rotation rate n > 0");
  sub->add_option("--seed", cfg.seed, "sampling seed");
  sub->add_option("--samples", cfg.samples, "number of samples");
  sub->add_option("--radius", cfg.radius, "sampling ball radius");
  sub->add_option("--format", cfg.format, "report format: json or csv");
  sub->add_option("--out", cfg.out, "write the report to this path");
  for (const std::string& name : kToleranceNames)
    sub->add_option_function<double>(
        "--tol." + name,
        [&cfg, name](double v) { cfg.tolerances[name] = v; },
        "tolerance override for the '" + name + "' check");
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output path " + out_path);
  out << text;
}

int emit_report(VerificationReport report, const RunConfig& cfg, double seconds) {
  report.wall_time_seconds = seconds;
  for (const auto& c : report.checks) {
    if (c.kind == "info") {
      std::fprintf(stderr, "  [info] %-28s %s\n", c.name.c_str(),
                   zermelo::format_full(c.value).c_str());
      continue;
    }
    std::fprintf(stderr, "  [%s] %-28s %s %s %s\n", c.pass ? "pass" : "FAIL",
                 c.name.c_str(), zermelo::format_full(c.value).c_str(),
                 c.kind == "min" ? ">" : "<",
                 zermelo::format_full(c.tolerance).c_str());
  }
  std::fprintf(stderr, "%s: %s (%zu checks, %.3f s)\n", report.suite.c_str(),
               report.aggregate_pass() ? "PASS" : "FAIL", report.checks.size(),
               seconds);
  write_output(zermelo::render(report, cfg.format), cfg.out);
  return report.aggregate_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verifier for Einstein Randers metrics from Zermelo "
               "navigation on the Hawking Taub-NUT background"};
  app.require_subcommand(1);

  RunConfig cfg;

  // --config is applied before parsing so flags override the file
  std::string config_path;
  for (int i = 1; i < argc - 1; ++i)
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];

  std::vector<double> x0{1.0, 0.0, 0.0, 0.0};
  std::vector<double> v0{0.0, 1.0, 0.0, 0.0};
  double t_end = 1.0;
  int steps = 1000;
  int grid = 3;

  CLI::App* verify_riemann =
      app.add_subcommand("verify-riemann", "metric cross-construction, decomposition, "
                                           "Bianchi and Ricci-flatness checks");
  CLI::App* verify_killing =
      app.add_subcommand("verify-killing", "Killing residual of W_{m,n} and the "
                                           "fitted homothety constant");
  CLI::App* verify_isometry =
      app.add_subcommand("verify-isometry", "isometry, block equivariance, group law "
                                            "and generator checks for phi_theta");
  CLI::App* verify_finsler =
      app.add_subcommand("verify-finsler", "navigation identities, Einstein scan and "
                                           "flag-curvature spread");
  CLI::App* sample_flag =
      app.add_subcommand("sample-flag", "table of sampled flags (x, y, V, K)");
  CLI::App* export_randers =
      app.add_subcommand("export-randers", "grid export of the Randers data "
                                           "(a_ij, b_i, lambda, f, |W|^2)");
  CLI::App* geodesic =
      app.add_subcommand("geodesic", "RK4 Randers geodesic trace with the "
                                     "F-conservation column");

  for (CLI::App* sub : {verify_riemann, verify_killing, verify_isometry,
                        verify_finsler, sample_flag, export_randers, geodesic}) {
    add_common_options(sub, cfg);
    sub->add_option("--config", config_path,
                    "key=value config file (flags take precedence)");
  }
  export_randers->add_option("--grid", grid, "grid points per axis");
  geodesic->add_option("--x0", x0, "initial point, 4 components")->expected(4);
  geodesic->add_option("--v0", v0, "initial velocity, 4 components")->expected(4);
  geodesic->add_option("--t-end", t_end, "integration time");
  geodesic->add_option("--steps", steps, "RK4 step count");

  try {
    if (!config_path.empty()) apply_config_file(config_path, cfg);
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    auto seconds = [&t0] {
      return std::chrono::duration<double>(clock::now() - t0).count();
    };

    if (*verify_riemann) {
      VerificationReport rep = zermelo::run_verify_riemann(cfg);
      return emit_report(std::move(rep), cfg, seconds());
    }
    if (*verify_killing) {
      VerificationReport rep = zermelo::run_verify_killing(cfg);
      return emit_report(std::move(rep), cfg, seconds());
    }
    if (*verify_isometry) {
      VerificationReport rep = zermelo::run_verify_isometry(cfg);
      return emit_report(std::move(rep), cfg, seconds());
    }
    if (*verify_finsler) {
      VerificationReport rep = zermelo::run_verify_finsler(cfg);
      return emit_report(std::move(rep), cfg, seconds());
    }
    if (*sample_flag) {
      write_output(zermelo::run_sample_flag(cfg), cfg.out);
      return 0;
    }
    if (*export_randers) {
      write_output(zermelo::run_export_randers(cfg, grid), cfg.out);
      return 0;
    }
    if (*geodesic) {
      if (x0.size() != 4 || v0.size() != 4)
        throw ConfigError("geodesic: --x0 and --v0 need 4 components");
      const zermelo::Vec4 p{x0[0], x0[1], x0[2], x0[3]};
      const zermelo::Vec4 d{v0[0], v0[1], v0[2], v0[3]};
      write_output(zermelo::run_geodesic(cfg, p, d, t_end, steps), cfg.out);
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const zermelo::Error& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
