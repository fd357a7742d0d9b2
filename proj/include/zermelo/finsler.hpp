// zermelo - the Randers metric F = alpha + beta and its curvature
//
// A handle bundles the navigation data (g_a, W_{m,n}). All (x, y) derivatives
// of F^2 come from one jet evaluation with 8 seed variables (x^1..x^4,
// y^1..y^4): total order 2 for the geodesic spray, total order 4 for the
// Riemann endomorphism R^i_k, whose formula needs mixed second derivatives of
// the spray coefficients G^i.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zermelo/navigation.hpp"
#include "zermelo/rng.hpp"

namespace zermelo {

class FinslerMetricHandle {
 public:
  explicit FinslerMetricHandle(const NavigationParams& params) : params_(params) {}
  FinslerMetricHandle(const MetricSpec& spec, double m, double n)
      : params_(spec.a, m, n) {}

  const NavigationParams& params() const { return params_; }
  bool zero_wind() const { return params_.m == 0.0 && params_.n == 0.0; }

 private:
  NavigationParams params_;
};

// F(x, y) = sqrt(a_ij y^i y^j) + b_i y^i; zero for y = 0.
double F_value(const FinslerMetricHandle& h, const Vec4& x, const Vec4& y);

// fundamental tensor g_y = (1/2) d^2 F^2 / dy dy; symmetric positive definite
// away from y = 0 on the exact domain, with g_y(y, y) = F^2.
Mat4 fundamental_tensor(const FinslerMetricHandle& h, const Vec4& x, const Vec4& y);

// geodesic coefficients G^i = (1/4) g_y^{il} (y^k d^2F^2/dx^k dy^l - dF^2/dx^l)
Vec4 spray(const FinslerMetricHandle& h, const Vec4& x, const Vec4& y);

// R^i_k = 2 dG^i/dx^k - y^j d^2G^i/dx^j dy^k + 2 G^j d^2G^i/dy^j dy^k
//         - (dG^i/dy^j)(dG^j/dy^k); annihilates the flag pole: R^i_k y^k = 0.
Mat4 riemann_endomorphism(const FinslerMetricHandle& h, const Vec4& x, const Vec4& y);

// Ric(x, y) = R^k_k, 2-homogeneous in y
double ricci(const FinslerMetricHandle& h, const Vec4& x, const Vec4& y);

// flag curvature of the flag (pole y, edge V):
//   K = g_y(R_y V, V) / (g_y(y,y) g_y(V,V) - g_y(y,V)^2)
double flag_curvature(const FinslerMetricHandle& h, const Vec4& x, const Vec4& y,
                      const Vec4& v);

// least-squares lambda in R^i_k = lambda (F^2 delta^i_k - F F_{y^k} y^i) over
// the 16 components, and the Frobenius residual of the fit
std::pair<double, double> constant_flag_residual(const FinslerMetricHandle& h,
                                                 const Vec4& x, const Vec4& y);

struct ScanConfig {
  int samples = 200;
  double radius = 2.0;
  std::uint64_t seed = 42;
  double margin = 0.99;  // sampling requires |W|^2 <= margin
};

struct EinsteinScan {
  int samples = 0;
  double max_ricci_ratio = 0.0;    // max |Ric|/F^2
  double max_flag_residual = 0.0;  // max absolute constant-flag residual
  double max_flag_residual_rel = 0.0;  // max residual / ||R||_F
  double flag_min = 0.0;
  double flag_max = 0.0;
  double flag_spread = 0.0;
  double max_abs_flag = 0.0;
};

// Seeded scan over (x, y, V) samples; sample i is a pure function of
// (seed, i), so results do not depend on evaluation order or worker count.
EinsteinScan einstein_scan(const FinslerMetricHandle& h, const ScanConfig& cfg);

struct FlagSample {
  Vec4 x{};
  Vec4 y{};
  Vec4 v{};
  double flag_curvature = 0.0;
};

// The same deterministic sample stream as einstein_scan, row per sample.
std::vector<FlagSample> sample_flags(const FinslerMetricHandle& h, const ScanConfig& cfg);

}  // namespace zermelo
