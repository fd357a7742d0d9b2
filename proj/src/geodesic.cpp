#include "zermelo/geodesic.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "zermelo/metric.hpp"

namespace zermelo {

namespace {

constexpr double kExitMargin = 0.999;

struct State {
  Vec4 x{};
  Vec4 v{};
};

State axpy(const State& s, double h, const State& d) {
  State r;
  for (int i = 0; i < 4; ++i) {
    r.x[i] = s.x[i] + h * d.x[i];
    r.v[i] = s.v[i] + h * d.v[i];
  }
  return r;
}

using SprayFn = std::function<Vec4(const Vec4&, const Vec4&)>;

GeodesicTrace run_rk4(const SprayFn& spray_fn, const NavigationParams& domain_params,
                      bool check_domain, const std::function<double(const State&)>& f_of,
                      std::string metric_id, const Vec4& x0, const Vec4& v0,
                      double t_end, int steps) {
  if (steps < 1) throw ConfigError("integrate: steps must be >= 1");
  if (v0[0] == 0.0 && v0[1] == 0.0 && v0[2] == 0.0 && v0[3] == 0.0)
    throw ConfigError("integrate: initial velocity must be nonzero");
  if (!(t_end > 0.0)) throw ConfigError("integrate: t_end must be positive");
  if (check_domain && !(wind_norm_sq(domain_params, x0) <= kExitMargin))
    throw OutsideDomainError("integrate: starting point outside the exact domain");

  auto deriv = [&](const State& s) {
    const Vec4 g = spray_fn(s.x, s.v);
    State d;
    d.x = s.v;
    for (int i = 0; i < 4; ++i) d.v[i] = -2.0 * g[i];
    return d;
  };

  GeodesicTrace trace;
  trace.metric_id = std::move(metric_id);
  trace.samples.reserve(static_cast<std::size_t>(steps) + 1);

  const double h = t_end / steps;
  State s{x0, v0};
  trace.samples.push_back({0.0, s.x, s.v, f_of(s)});
  for (int k = 0; k < steps; ++k) {
    const State k1 = deriv(s);
    const State k2 = deriv(axpy(s, 0.5 * h, k1));
    const State k3 = deriv(axpy(s, 0.5 * h, k2));
    const State k4 = deriv(axpy(s, h, k3));
    State next;
    for (int i = 0; i < 4; ++i) {
      next.x[i] = s.x[i] + h / 6.0 * (k1.x[i] + 2.0 * (k2.x[i] + k3.x[i]) + k4.x[i]);
      next.v[i] = s.v[i] + h / 6.0 * (k1.v[i] + 2.0 * (k2.v[i] + k3.v[i]) + k4.v[i]);
    }
    if (check_domain && !(wind_norm_sq(domain_params, next.x) <= kExitMargin)) {
      trace.exited_domain = true;
      break;
    }
    s = next;
    trace.samples.push_back({(k + 1) * h, s.x, s.v, f_of(s)});
    trace.step_count = k + 1;
  }
  return trace;
}

}  // namespace

GeodesicTrace integrate(const FinslerMetricHandle& h, const Vec4& x0, const Vec4& v0,
                        double t_end, int steps) {
  const NavigationParams& p = h.params();
  char id[96];
  std::snprintf(id, sizeof id, "randers a=%g m=%g n=%g", p.a, p.m, p.n);
  return run_rk4([&h](const Vec4& x, const Vec4& v) { return spray(h, x, v); }, p,
                 true, [&h](const State& s) { return F_value(h, s.x, s.v); }, id, x0,
                 v0, t_end, steps);
}

GeodesicTrace integrate_riemannian(const MetricSpec& spec, const Vec4& x0,
                                   const Vec4& v0, double t_end, int steps) {
  auto spray_fn = [&spec](const Vec4& x, const Vec4& v) {
    const ChristoffelSymbols cs = christoffel(spec, x);
    Vec4 g{};
    for (int i = 0; i < 4; ++i) {
      double acc = 0.0;
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) acc += cs.gamma[i][j][k] * v[j] * v[k];
      g[i] = 0.5 * acc;
    }
    return g;
  };
  auto f_of = [&spec](const State& s) {
    return std::sqrt(quadratic_form(metric_matrix(spec, s.x), s.v, s.v));
  };
  char id[96];
  std::snprintf(id, sizeof id, "riemannian a=%g", spec.a);
  return run_rk4(spray_fn, NavigationParams(spec.a, 0.0, 0.0), false, f_of, id, x0,
                 v0, t_end, steps);
}

std::pair<double, double> conservation_report(const GeodesicTrace& trace) {
  if (trace.samples.empty())
    throw ConfigError("conservation_report: trace has no samples");
  const double f0 = trace.samples.front().f;
  double max_drift = 0.0;
  for (const GeodesicSample& s : trace.samples)
    max_drift = std::max(max_drift, std::abs(s.f - f0));
  return {max_drift, f0 != 0.0 ? max_drift / f0 : 0.0};
}

}  // namespace zermelo
