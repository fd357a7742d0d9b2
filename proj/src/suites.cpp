// zermelo - suite runners: deterministic sampling, one CheckResult per check

#include "zermelo/suites.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "zermelo/finsler.hpp"
#include "zermelo/geodesic.hpp"
#include "zermelo/isometry.hpp"
#include "zermelo/metric.hpp"
#include "zermelo/navigation.hpp"
#include "zermelo/rng.hpp"

namespace zermelo {

namespace {

// suite substream tags so different suites never share draws
constexpr std::uint64_t kStreamRiemann = 101;
constexpr std::uint64_t kStreamKilling = 102;
constexpr std::uint64_t kStreamIsometry = 103;
constexpr std::uint64_t kStreamNavigation = 104;
constexpr std::uint64_t kStreamSphereProbe = 105;

std::string fmt(double v) { return format_full(v); }

void echo_common(VerificationReport& r, const RunConfig& cfg, bool with_mn = true) {
  r.add_config("a", fmt(cfg.a));
  if (with_mn) {
    r.add_config("m", fmt(cfg.m));
    r.add_config("n", fmt(cfg.n));
  }
  r.add_config("seed", std::to_string(cfg.seed));
  r.add_config("samples", std::to_string(cfg.samples));
  r.add_config("radius", fmt(cfg.radius));
}

}  // namespace

void RunConfig::validate() const {
  if (!(a >= 0.0)) throw ConfigError("config: a must be >= 0");
  if (!(m > 0.0) || !(n > 0.0)) throw ConfigError("config: m and n must be > 0");
  if (samples < 1) throw ConfigError("config: samples must be >= 1");
  if (!(radius > 0.0)) throw ConfigError("config: radius must be > 0");
  for (const auto& [name, value] : tolerances)
    if (!(value > 0.0)) throw ConfigError("config: tolerance " + name + " must be > 0");
  if (format != "json" && format != "csv")
    throw ConfigError("config: format must be json or csv");
}

VerificationReport run_verify_riemann(const RunConfig& cfg) {
  cfg.validate();
  VerificationReport r;
  r.suite = "verify-riemann";
  echo_common(r, cfg, false);

  const MetricSpec spec = MetricSpec::taub_nut(cfg.a);
  CounterRng rng = CounterRng(cfg.seed).split(kStreamRiemann);

  double max_cross = 0.0, max_decomp = 0.0, max_bianchi = 0.0;
  double max_compat = 0.0, max_ricci = 0.0;
  int spd_failures = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    const Vec4 x = rng.in_ball(cfg.radius);
    const Mat4 g = metric_matrix(spec, x);
    max_cross = std::max(max_cross, inf_norm(g - metric_via_oneform(cfg.a, x)));
    max_decomp = std::max(max_decomp, decomposition_check(cfg.a, x));
    if (!is_positive_definite(g)) ++spd_failures;
    const CurvatureTensors curv = curvature(spec, x);
    max_ricci = std::max(max_ricci, inf_norm(curv.ricci));
    max_bianchi = std::max(max_bianchi, bianchi_residual(curv));
    max_compat = std::max(max_compat, metric_compatibility_residual(spec, x));
  }

  r.check_max("cross_construction", max_cross, cfg.tol("cross", 1e-13));
  r.check_max("decomposition", max_decomp, cfg.tol("decomposition", 1e-14));
  r.check_max("spd_failures", spd_failures, 0.5);
  r.check_max("bianchi", max_bianchi, cfg.tol("bianchi", 1e-9));
  r.check_max("metric_compatibility", max_compat, cfg.tol("compatibility", 1e-10));
  r.check_max("ricci_flat", max_ricci, cfg.tol("ricci", 1e-7));
  return r;
}

VerificationReport run_verify_killing(const RunConfig& cfg) {
  cfg.validate();
  VerificationReport r;
  r.suite = "verify-killing";
  echo_common(r, cfg);

  const MetricSpec spec = MetricSpec::taub_nut(cfg.a);
  const VectorField field = wind_field(cfg.m, cfg.n);
  CounterRng rng = CounterRng(cfg.seed).split(kStreamKilling);

  double max_residual = 0.0, max_c = 0.0, max_deviation = 0.0;
  for (int i = 0; i < cfg.samples; ++i) {
    const Vec4 x = rng.in_ball(cfg.radius);
    const Mat4 residual = killing_residual(spec, x, field);
    max_residual = std::max(max_residual, inf_norm(residual));
    const auto [c, deviation] = homothety_constant_fit(residual, metric_matrix(spec, x));
    max_c = std::max(max_c, std::abs(c));
    max_deviation = std::max(max_deviation, deviation);
  }

  r.check_max("killing_residual", max_residual, cfg.tol("residual", 1e-9));
  r.check_max("homothety_c", max_c, cfg.tol("homothety", 1e-9));
  r.check_max("fit_deviation", max_deviation, cfg.tol("deviation", 1e-9));
  return r;
}

VerificationReport run_verify_isometry(const RunConfig& cfg) {
  cfg.validate();
  VerificationReport r;
  r.suite = "verify-isometry";
  echo_common(r, cfg);

  CounterRng rng = CounterRng(cfg.seed).split(kStreamIsometry);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  double max_iso = 0.0, max_equiv = 0.0, max_norm = 0.0, max_group = 0.0;
  double max_gen = 0.0;
  for (int i = 0; i < cfg.samples; ++i) {
    const Vec4 x = rng.in_ball(cfg.radius);
    const double theta = rng.uniform(-kTwoPi, kTwoPi);
    const double theta2 = rng.uniform(-kTwoPi, kTwoPi);

    max_iso = std::max(max_iso, isometry_residual(cfg.a, cfg.m, cfg.n, theta, x));
    max_equiv = std::max(max_equiv, h_equivariance_residual(cfg.m, cfg.n, theta, x));
    max_norm = std::max(max_norm,
                        std::abs(norm(flow(cfg.m, cfg.n, theta, x)) - norm(x)));
    max_group =
        std::max(max_group, group_law_residual(cfg.m, cfg.n, theta, theta2, x));

    const Vec4 gen = generator(cfg.m, cfg.n, x);
    const Vec4 w = wind(NavigationParams(cfg.a, cfg.m, cfg.n), x);
    Vec4 diff{};
    for (int k = 0; k < 4; ++k) diff[k] = gen[k] - w[k];
    max_gen = std::max(max_gen, inf_norm(diff));
  }

  r.check_max("isometry", max_iso, cfg.tol("isometry", 1e-12));
  r.check_max("block_equivariance", max_equiv, cfg.tol("blocks", 1e-13));
  r.check_max("norm_preservation", max_norm, cfg.tol("norm", 1e-13));
  r.check_max("group_law", max_group, cfg.tol("group", 1e-13));
  r.check_max("generator_vs_wind", max_gen, cfg.tol("generator", 1e-9));
  return r;
}

VerificationReport run_verify_finsler(const RunConfig& cfg) {
  cfg.validate();
  VerificationReport r;
  r.suite = "verify-finsler";
  echo_common(r, cfg);
  r.add_config("case", cfg.a == 0.0 ? "constant" : "taub-nut");

  const NavigationParams params(cfg.a, cfg.m, cfg.n);
  const FinslerMetricHandle handle(params);
  const MetricSpec spec = params.metric();
  const double margin = 0.99;

  // navigation identities on exact-domain points
  CounterRng rng = CounterRng(cfg.seed).split(kStreamNavigation);
  double max_cov = 0.0, max_normsq = 0.0, max_implicit = 0.0, max_bnorm = 0.0;
  double max_fdom = -1.0;
  int spd_failures = 0;
  const bool check_fbound = cfg.m <= 1.0 && cfg.n <= 1.0;
  for (int i = 0; i < cfg.samples; ++i) {
    Vec4 x = rng.in_ball(cfg.radius);
    int tries = 0;
    while (!(wind_norm_sq(params, x) <= margin)) {
      x = rng.in_ball(cfg.radius);
      if (++tries > 10000)
        throw ConfigError("verify-finsler: cannot sample the exact domain");
    }
    const Mat4 g = metric_matrix(spec, x);
    const Vec4 w = wind(params, x);
    const Vec4 w_low_direct = g * w;
    const Vec4 w_low = wind_covector(params, x);
    Vec4 dcov{};
    for (int k = 0; k < 4; ++k) dcov[k] = w_low[k] - w_low_direct[k];
    max_cov = std::max(max_cov, inf_norm(dcov));

    const double wsq = wind_norm_sq(params, x);
    max_normsq = std::max(max_normsq, std::abs(wsq - quadratic_form(g, w, w)));

    const Vec4 y = rng.on_sphere();
    const RandersPointData rd = randers_data(params, x);
    if (!is_positive_definite(rd.a_ij)) ++spd_failures;
    const double f_direct = std::sqrt(quadratic_form(rd.a_ij, y, y)) + dot(rd.b, y);
    max_implicit =
        std::max(max_implicit, std::abs(solve_implicit_F(params, x, y) - f_direct));

    const double b_norm = std::sqrt(dot(rd.b, solve_spd(rd.a_ij, rd.b)));
    max_bnorm = std::max(max_bnorm, std::abs(b_norm - std::sqrt(wsq)));

    if (check_fbound) max_fdom = std::max(max_fdom, wsq - f_bound(params, x));
  }

  r.check_max("covector_closed_form", max_cov, cfg.tol("covector", 1e-12));
  r.check_max("wind_norm_closed_form", max_normsq, cfg.tol("windnorm", 1e-12));
  r.check_max("implicit_vs_randers", max_implicit, cfg.tol("implicit", 1e-12));
  r.check_max("b_norm_identity", max_bnorm, cfg.tol("bnorm", 1e-12));
  r.check_max("randers_spd_failures", spd_failures, 0.5);
  if (check_fbound)
    r.check_max("f_bound_dominates", max_fdom, cfg.tol("fbound", 1e-12));

  // domain boundary probe on the unit sphere: counts points with f < 1 but
  // |W|^2 >= 1 (the sufficient bound is not necessary)
  {
    CounterRng probe = CounterRng(cfg.seed).split(kStreamSphereProbe);
    int witnesses = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Vec4 x = probe.on_sphere();
      const DomainReport d = domain_report(params, x);
      if (d.in_domain_sufficient && !d.in_domain_exact) ++witnesses;
    }
    CheckResult info;
    info.name = "sphere_f_lt_1_but_wsq_ge_1";
    info.value = witnesses;
    info.tolerance = 0.0;
    info.pass = true;
    info.kind = "info";
    r.checks.push_back(info);
  }

  // curvature scan
  ScanConfig scan_cfg;
  scan_cfg.samples = cfg.samples;
  scan_cfg.radius = cfg.radius;
  scan_cfg.seed = cfg.seed;
  scan_cfg.margin = margin;
  const EinsteinScan scan = einstein_scan(handle, scan_cfg);

  r.add_config("flag_min", fmt(scan.flag_min));
  r.add_config("flag_max", fmt(scan.flag_max));
  r.add_config("flag_spread", fmt(scan.flag_spread));

  r.check_max("einstein_ricci_ratio", scan.max_ricci_ratio, cfg.tol("einstein", 1e-6));
  if (cfg.a == 0.0) {
    // flat background + Killing rotation: constant flag curvature zero
    r.check_max("constant_case_abs_flag", scan.max_abs_flag, cfg.tol("flagconst", 1e-7));
  } else {
    r.check_min("flag_spread", scan.flag_spread, cfg.tol("spread", 1e-3));
    r.check_min("flag_residual_witness", scan.max_flag_residual_rel,
                cfg.tol("flagresidual", 1e-3));
  }
  return r;
}

namespace {

std::string table_to_csv(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

std::string table_to_json(const std::string& suite, const RunConfig& cfg,
                          const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  c["a"] = fmt(cfg.a);
  c["m"] = fmt(cfg.m);
  c["n"] = fmt(cfg.n);
  c["seed"] = std::to_string(cfg.seed);
  c["samples"] = std::to_string(cfg.samples);
  c["radius"] = fmt(cfg.radius);
  j["config"] = c;
  j["columns"] = header;
  nlohmann::ordered_json data = nlohmann::ordered_json::array();
  for (const auto& row : rows) data.push_back(row);
  j["rows"] = data;
  return j.dump(2) + "\n";
}

}  // namespace

std::string run_sample_flag(const RunConfig& cfg) {
  cfg.validate();
  const FinslerMetricHandle handle(NavigationParams(cfg.a, cfg.m, cfg.n));
  ScanConfig scan_cfg{cfg.samples, cfg.radius, cfg.seed, 0.99};
  const auto samples = sample_flags(handle, scan_cfg);

  const std::vector<std::string> header = {"x1", "x2", "x3", "x4", "y1", "y2", "y3",
                                           "y4", "V1", "V2", "V3", "V4", "K"};
  std::vector<std::vector<std::string>> rows;
  rows.reserve(samples.size());
  for (const FlagSample& s : samples) {
    std::vector<std::string> row;
    for (double v : s.x) row.push_back(fmt(v));
    for (double v : s.y) row.push_back(fmt(v));
    for (double v : s.v) row.push_back(fmt(v));
    row.push_back(fmt(s.flag_curvature));
    rows.push_back(std::move(row));
  }
  return cfg.format == "csv" ? table_to_csv(header, rows)
                             : table_to_json("sample-flag", cfg, header, rows);
}

std::string run_export_randers(const RunConfig& cfg, int grid_per_axis) {
  cfg.validate();
  if (grid_per_axis < 1) throw ConfigError("export-randers: grid must be >= 1");
  const NavigationParams params(cfg.a, cfg.m, cfg.n);

  std::vector<double> axis;
  if (grid_per_axis == 1) {
    axis.push_back(0.0);
  } else {
    for (int k = 0; k < grid_per_axis; ++k)
      axis.push_back(-cfg.radius + 2.0 * cfg.radius * k / (grid_per_axis - 1));
  }

  std::vector<std::string> header = {"x1", "x2", "x3", "x4", "wind_norm_sq",
                                     "f_bound", "in_domain_exact",
                                     "in_domain_sufficient", "lambda"};
  for (int i = 0; i < 4; ++i) header.push_back("b" + std::to_string(i + 1));
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      header.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));

  std::vector<std::vector<std::string>> rows;
  for (double x1 : axis)
    for (double x2 : axis)
      for (double x3 : axis)
        for (double x4 : axis) {
          const Vec4 x{x1, x2, x3, x4};
          const DomainReport d = domain_report(params, x);
          std::vector<std::string> row;
          for (double v : x) row.push_back(fmt(v));
          row.push_back(fmt(d.wind_norm_sq));
          row.push_back(fmt(d.f_value));
          row.push_back(d.in_domain_exact ? "1" : "0");
          row.push_back(d.in_domain_sufficient ? "1" : "0");
          if (d.in_domain_exact) {
            const RandersPointData rd = randers_data(params, x);
            row.push_back(fmt(rd.lambda));
            for (double v : rd.b) row.push_back(fmt(v));
            for (int i = 0; i < 4; ++i)
              for (int j = i; j < 4; ++j) row.push_back(fmt(rd.a_ij(i, j)));
          } else {
            // flagged, not dropped: navigation data is undefined here
            for (int k = 0; k < 15; ++k) row.push_back("nan");
          }
          rows.push_back(std::move(row));
        }

  return cfg.format == "csv" ? table_to_csv(header, rows)
                             : table_to_json("export-randers", cfg, header, rows);
}

std::string run_geodesic(const RunConfig& cfg, const Vec4& x0, const Vec4& v0,
                         double t_end, int steps) {
  cfg.validate();
  const FinslerMetricHandle handle(NavigationParams(cfg.a, cfg.m, cfg.n));
  const GeodesicTrace trace = integrate(handle, x0, v0, t_end, steps);

  const std::vector<std::string> header = {"t",  "x1", "x2", "x3", "x4", "v1",
                                           "v2", "v3", "v4", "F",  "F_drift"};
  const double f0 = trace.samples.front().f;
  std::vector<std::vector<std::string>> rows;
  rows.reserve(trace.samples.size());
  for (const GeodesicSample& s : trace.samples) {
    std::vector<std::string> row;
    row.push_back(fmt(s.t));
    for (double v : s.x) row.push_back(fmt(v));
    for (double v : s.v) row.push_back(fmt(v));
    row.push_back(fmt(s.f));
    row.push_back(fmt(s.f - f0));
    rows.push_back(std::move(row));
  }
  return cfg.format == "csv" ? table_to_csv(header, rows)
                             : table_to_json("geodesic", cfg, header, rows);
}

std::string render(const VerificationReport& report, const std::string& format) {
  return format == "csv" ? to_csv(report) : to_json(report);
}

}  // namespace zermelo
