#include "zermelo/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace zermelo {

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.config) cfg[key] = value;
  j["config"] = cfg;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["value"] = c.value;
    jc["tolerance"] = c.tolerance;
    jc["kind"] = c.kind;
    jc["pass"] = c.pass;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  j["pass"] = report.aggregate_pass();
  return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
  std::string out = "suite,check,value,tolerance,kind,pass\n";
  for (const auto& c : report.checks) {
    out += report.suite;
    out += ',';
    out += c.name;
    out += ',';
    out += format_full(c.value);
    out += ',';
    out += format_full(c.tolerance);
    out += ',';
    out += c.kind;
    out += ',';
    out += c.pass ? "true" : "false";
    out += '\n';
  }
  out += report.suite;
  out += ",aggregate,,,all,";
  out += report.aggregate_pass() ? "true" : "false";
  out += '\n';
  return out;
}

}  // namespace zermelo
