#include "zermelo/isometry.hpp"

#include <cmath>

#include "zermelo/metric.hpp"

namespace zermelo {

BlockRotation rotation(double m, double n, double theta) {
  BlockRotation r;
  r.theta = theta;
  r.m = m;
  r.n = n;
  const double cm = std::cos(m * theta);
  const double sm = std::sin(m * theta);
  const double cn = std::cos(n * theta);
  const double sn = std::sin(n * theta);
  r.matrix(0, 0) = cm;
  r.matrix(0, 1) = -sm;
  r.matrix(1, 0) = sm;
  r.matrix(1, 1) = cm;
  r.matrix(2, 2) = cn;
  r.matrix(2, 3) = -sn;
  r.matrix(3, 2) = sn;
  r.matrix(3, 3) = cn;
  return r;
}

Vec4 flow(double m, double n, double theta, const Vec4& x) {
  return rotation(m, n, theta).matrix * x;
}

double isometry_residual(double a, double m, double n, double theta, const Vec4& x) {
  const Mat4 at = rotation(m, n, theta).matrix;
  const Vec4 y = at * x;
  const MetricSpec spec = MetricSpec::taub_nut(a);
  const Mat4 pulled = transpose(at) * metric_matrix(spec, y) * at;
  return inf_norm(pulled - metric_matrix(spec, x));
}

namespace {

// H block entries from the pair (u, v) = ((x^2, -x^1), (x^4, -x^3))
void h_vectors(const Vec4& x, double u[2], double v[2]) {
  u[0] = x[1];
  u[1] = -x[0];
  v[0] = x[3];
  v[1] = -x[2];
}

double block_residual(const double lhs_u[2], const double lhs_v[2],
                      const double rhs_u[2], const double rhs_v[2],
                      const double rot_left[2][2], const double rot_right[2][2]) {
  // residual of L^T (rhs_u rhs_v^T) R - lhs_u lhs_v^T
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double acc = 0.0;
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
          acc += rot_left[p][i] * rhs_u[p] * rhs_v[q] * rot_right[q][j];
      worst = std::max(worst, std::abs(acc - lhs_u[i] * lhs_v[j]));
    }
  return worst;
}

}  // namespace

double h_equivariance_residual(double m, double n, double theta, const Vec4& x) {
  const Vec4 y = flow(m, n, theta, x);
  double ux[2], vx[2], uy[2], vy[2];
  h_vectors(x, ux, vx);
  h_vectors(y, uy, vy);

  const double cm = std::cos(m * theta), sm = std::sin(m * theta);
  const double cn = std::cos(n * theta), sn = std::sin(n * theta);
  const double am[2][2] = {{cm, -sm}, {sm, cm}};
  const double an[2][2] = {{cn, -sn}, {sn, cn}};

  const double r1 = block_residual(ux, ux, uy, uy, am, am);
  const double r2 = block_residual(ux, vx, uy, vy, am, an);
  const double r3 = block_residual(vx, vx, vy, vy, an, an);
  return std::max({r1, r2, r3});
}

Vec4 generator(double m, double n, const Vec4& p) {
  constexpr double h = 1e-6;
  const Vec4 fwd = flow(m, n, h, p);
  const Vec4 bwd = flow(m, n, -h, p);
  Vec4 d{};
  for (int i = 0; i < 4; ++i) d[i] = (fwd[i] - bwd[i]) / (2.0 * h);
  return d;
}

double group_law_residual(double m, double n, double theta1, double theta2,
                          const Vec4& x) {
  const Vec4 combined = flow(m, n, theta1 + theta2, x);
  const Vec4 chained = flow(m, n, theta1, flow(m, n, theta2, x));
  Vec4 diff{};
  for (int i = 0; i < 4; ++i) diff[i] = combined[i] - chained[i];
  return norm(diff);
}

}  // namespace zermelo
