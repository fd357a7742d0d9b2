// zermelo - fixed-step RK4 geodesics of the Randers and Riemannian metrics
//
// Integrates xdot = v, vdot = -2 G(x, v). For a Randers handle the spray is
// the Finsler one; the Riemannian variant uses (1/2) Gamma^i_{jk} v^j v^k.
// F(x(t), v(t)) is constant along geodesics and recorded per sample as the
// conservation diagnostic.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zermelo/finsler.hpp"

namespace zermelo {

struct GeodesicSample {
  double t = 0.0;
  Vec4 x{};
  Vec4 v{};
  double f = 0.0;  // F(x, v)
};

struct GeodesicTrace {
  std::vector<GeodesicSample> samples;
  int step_count = 0;
  std::string metric_id;
  bool exited_domain = false;
};

// Randers geodesic. Truncates with exited_domain = true if the trajectory
// leaves |W|^2 <= 0.999.
GeodesicTrace integrate(const FinslerMetricHandle& h, const Vec4& x0, const Vec4& v0,
                        double t_end, int steps);

// Riemannian geodesic of g_a (independent spray path through the Christoffel
// symbols; used for the zero-wind cross-check).
GeodesicTrace integrate_riemannian(const MetricSpec& spec, const Vec4& x0,
                                   const Vec4& v0, double t_end, int steps);

// (max |F(t) - F(0)|, max drift / F(0))
std::pair<double, double> conservation_report(const GeodesicTrace& trace);

}  // namespace zermelo
