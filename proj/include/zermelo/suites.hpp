// zermelo - verification suites shared by the CLI and the acceptance tests
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "zermelo/linalg.hpp"
#include "zermelo/report.hpp"

namespace zermelo {

struct RunConfig {
  double a = 1.0;
  double m = 0.5;
  double n = 0.5;
  std::uint64_t seed = 42;
  int samples = 200;
  double radius = 2.0;
  std::map<std::string, double> tolerances;  // overrides from --tol.<name>
  std::string format = "json";               // json | csv
  std::string out;                           // output path, empty = stdout

  double tol(const std::string& name, double fallback) const {
    auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
  }
  void validate() const;
};

VerificationReport run_verify_riemann(const RunConfig& cfg);
VerificationReport run_verify_killing(const RunConfig& cfg);
VerificationReport run_verify_isometry(const RunConfig& cfg);
VerificationReport run_verify_finsler(const RunConfig& cfg);

// formatted tables (CSV or JSON per cfg.format)
std::string run_sample_flag(const RunConfig& cfg);
std::string run_export_randers(const RunConfig& cfg, int grid_per_axis);
std::string run_geodesic(const RunConfig& cfg, const Vec4& x0, const Vec4& v0,
                         double t_end, int steps);

std::string render(const VerificationReport& report, const std::string& format);

}  // namespace zermelo
