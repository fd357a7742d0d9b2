// zermelo - navigation data implementation

#include "zermelo/navigation.hpp"

#include <algorithm>
#include <cmath>

namespace zermelo {

Vec4 wind(const NavigationParams& p, const Vec4& x) {
  auto w = wind_components<double>(p.m, p.n, x);
  return {w[0], w[1], w[2], w[3]};
}

double sigma(const NavigationParams& p, const Vec4& x) {
  return p.m * (x[0] * x[0] + x[1] * x[1]) + p.n * (x[2] * x[2] + x[3] * x[3]);
}

namespace {

struct BlockFactors {
  double first;   // B - sigma A / m
  double second;  // B - sigma A / n
};

BlockFactors block_factors(const NavigationParams& p, const Vec4& x) {
  const double nx2 = norm_sq(x);
  const double b = p.a * nx2 + 1.0;
  const double a = p.a * (1.0 + 1.0 / b);
  const double s = sigma(p, x);
  // m = 0 (or n = 0) zeroes the block's wind components, so the factor value
  // is irrelevant there; keep it finite
  return {p.m > 0.0 ? b - s * a / p.m : 0.0, p.n > 0.0 ? b - s * a / p.n : 0.0};
}

}  // namespace

Vec4 wind_covector(const NavigationParams& p, const Vec4& x) {
  const Vec4 w = wind(p, x);
  const BlockFactors f = block_factors(p, x);
  return {w[0] * f.first, w[1] * f.first, w[2] * f.second, w[3] * f.second};
}

double wind_norm_sq(const NavigationParams& p, const Vec4& x) {
  const Vec4 w = wind(p, x);
  const BlockFactors f = block_factors(p, x);
  return (w[0] * w[0] + w[1] * w[1]) * f.first + (w[2] * w[2] + w[3] * w[3]) * f.second;
}

double f_bound(const NavigationParams& p, const Vec4& x) {
  const double nx2 = norm_sq(x);
  const double pmax = std::max(p.m, p.n);
  const double dmn = std::abs(p.m - p.n);
  return nx2 / (1.0 + p.a * nx2) *
         (pmax + 2.0 * p.a * dmn * nx2 + p.a * p.a * dmn * nx2 * nx2);
}

DomainReport domain_report(const NavigationParams& p, const Vec4& x) {
  DomainReport r;
  r.x = x;
  r.f_value = f_bound(p, x);
  r.wind_norm_sq = wind_norm_sq(p, x);
  r.in_domain_sufficient = r.f_value < 1.0;
  r.in_domain_exact = r.wind_norm_sq < 1.0;
  return r;
}

RandersPointData randers_data(const NavigationParams& p, const Vec4& x) {
  const double wsq = wind_norm_sq(p, x);
  if (!(wsq < 1.0))
    throw OutsideDomainError("randers_data: |W|^2 >= 1 at the requested point");
  const double lambda = 1.0 - wsq;

  const Mat4 g = metric_matrix(p.metric(), x);
  const Vec4 w_low = wind_covector(p, x);

  RandersPointData out;
  out.lambda = lambda;
  for (int i = 0; i < 4; ++i) {
    out.b[i] = -w_low[i] / lambda;
    for (int j = 0; j < 4; ++j)
      out.a_ij(i, j) = g(i, j) / lambda + w_low[i] * w_low[j] / (lambda * lambda);
  }
  return out;
}

double solve_implicit_F(const NavigationParams& p, const Vec4& x, const Vec4& y) {
  const double wsq = wind_norm_sq(p, x);
  if (!(wsq < 1.0))
    throw OutsideDomainError("solve_implicit_F: |W|^2 >= 1 at the requested point");
  if (y[0] == 0.0 && y[1] == 0.0 && y[2] == 0.0 && y[3] == 0.0) return 0.0;

  const double lambda = 1.0 - wsq;
  const Mat4 g = metric_matrix(p.metric(), x);
  const Vec4 w = wind(p, x);
  const double gyw = quadratic_form(g, y, w);
  const double gyy = quadratic_form(g, y, y);
  // lambda F^2 + 2 g(y,W) F - g(y,y) = 0; positive branch
  return (-gyw + std::sqrt(gyw * gyw + lambda * gyy)) / lambda;
}

VectorField wind_field(double m, double n) {
  return [m, n](const std::array<Jet, 4>& xj) { return wind_components<Jet>(m, n, xj); };
}

}  // namespace zermelo
