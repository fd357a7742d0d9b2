// zermelo - machine-readable verification reports
//
// Serialization is byte-stable: identical (config, seed) must produce
// identical bytes, so the canonical forms never include timing. Floats in CSV
// are printed with 17 significant digits, '.' decimal, ',' separator.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace zermelo {

struct CheckResult {
  std::string name;
  double value = 0.0;      // measured residual / statistic
  double tolerance = 0.0;  // bound it was tested against
  bool pass = false;
  // how value relates to tolerance: "max" checks value < tolerance,
  // "min" checks value > tolerance (non-constancy witnesses)
  std::string kind = "max";
};

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> config;  // echo, insertion order
  std::vector<CheckResult> checks;
  double wall_time_seconds = 0.0;  // console diagnostics only, never serialized

  bool aggregate_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add_config(const std::string& key, const std::string& value) {
    config.emplace_back(key, value);
  }
  // value < tolerance
  void check_max(const std::string& name, double value, double tolerance) {
    checks.push_back({name, value, tolerance, value < tolerance, "max"});
  }
  // value > tolerance
  void check_min(const std::string& name, double value, double tolerance) {
    checks.push_back({name, value, tolerance, value > tolerance, "min"});
  }
};

// shortest round-trip decimal text for a double ("%.17g")
std::string format_full(double v);

std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);

}  // namespace zermelo
