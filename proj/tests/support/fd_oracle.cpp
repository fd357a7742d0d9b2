#include "support/fd_oracle.hpp"

#include <cmath>

namespace zermelo::testsupport {

double fd_partial(const ScalarFn& f, std::vector<double> x, int i, double h) {
  auto central = [&](double step) {
    x[i] += step;
    const double fp = f(x);
    x[i] -= 2.0 * step;
    const double fm = f(x);
    x[i] += step;
    return (fp - fm) / (2.0 * step);
  };
  const double d1 = central(h);
  const double d2 = central(h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

double fd_second(const ScalarFn& f, std::vector<double> x, int i, int j, double h) {
  auto central = [&](double step) {
    if (i == j) {
      const double f0 = f(x);
      x[i] += step;
      const double fp = f(x);
      x[i] -= 2.0 * step;
      const double fm = f(x);
      x[i] += step;
      return (fp - 2.0 * f0 + fm) / (step * step);
    }
    double acc = 0.0;
    for (int si = -1; si <= 1; si += 2)
      for (int sj = -1; sj <= 1; sj += 2) {
        x[i] += si * step;
        x[j] += sj * step;
        acc += si * sj * f(x);
        x[i] -= si * step;
        x[j] -= sj * step;
      }
    return acc / (4.0 * step * step);
  };
  const double d1 = central(h);
  const double d2 = central(h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

double f_squared_double(const NavigationParams& p, const Vec4& x, const Vec4& y) {
  const RandersPointData rd = randers_data(p, x);
  const double alpha = std::sqrt(quadratic_form(rd.a_ij, y, y));
  const double f = alpha + dot(rd.b, y);
  return f * f;
}

namespace {

ScalarFn metric_entry_fn(double a, int i, int j) {
  return [a, i, j](const std::vector<double>& q) {
    const std::array<double, 4> x{q[0], q[1], q[2], q[3]};
    return metric_entries<double>(a, x)[static_cast<std::size_t>(i)]
                                       [static_cast<std::size_t>(j)];
  };
}

}  // namespace

ChristoffelSymbols fd_christoffel(double a, const Vec4& x) {
  const std::vector<double> q{x[0], x[1], x[2], x[3]};
  double dg[4][4][4];  // dg[k][i][j] = d g_ij / d x^k
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        dg[k][i][j] = fd_partial(metric_entry_fn(a, i, j), q, k);
        dg[k][j][i] = dg[k][i][j];
      }
  const Mat4 ginv = inverse_spd(metric_matrix(MetricSpec::taub_nut(a), x));

  ChristoffelSymbols out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        double acc = 0.0;
        for (int l = 0; l < 4; ++l)
          acc += ginv(i, l) * (dg[j][l][k] + dg[k][j][l] - dg[l][j][k]);
        out.gamma[i][j][k] = 0.5 * acc;
      }
  return out;
}

Mat4 fd_ricci(double a, const Vec4& x) {
  // second FD level: difference fd_christoffel itself (plain central here;
  // the inner values carry ~1e-11 noise, Richardson would only amplify it)
  constexpr double h = 1e-4;
  ChristoffelSymbols plus[4], minus[4];
  for (int l = 0; l < 4; ++l) {
    Vec4 xp = x, xm = x;
    xp[l] += h;
    xm[l] -= h;
    plus[l] = fd_christoffel(a, xp);
    minus[l] = fd_christoffel(a, xm);
  }
  const ChristoffelSymbols base = fd_christoffel(a, x);

  auto dgamma = [&](int l, int i, int j, int k) {
    return (plus[l].gamma[i][j][k] - minus[l].gamma[i][j][k]) / (2.0 * h);
  };

  Mat4 ricci;
  for (int j = 0; j < 4; ++j)
    for (int l = 0; l < 4; ++l) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) {
        double r = dgamma(k, k, l, j) - dgamma(l, k, k, j);
        for (int m = 0; m < 4; ++m)
          r += base.gamma[k][k][m] * base.gamma[m][l][j] -
               base.gamma[k][l][m] * base.gamma[m][k][j];
        s += r;
      }
      ricci(j, l) = s;
    }
  return ricci;
}

Vec4 fd_spray(const NavigationParams& p, const Vec4& x, const Vec4& y) {
  auto f2 = [&p](const std::vector<double>& q) {
    return f_squared_double(p, {q[0], q[1], q[2], q[3]}, {q[4], q[5], q[6], q[7]});
  };
  const std::vector<double> q{x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3]};

  Mat4 gy;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      gy(i, j) = 0.5 * fd_second(f2, q, 4 + i, 4 + j);
      gy(j, i) = gy(i, j);
    }
  Vec4 rhs{};
  for (int l = 0; l < 4; ++l) {
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) acc += y[k] * fd_second(f2, q, k, 4 + l);
    acc -= fd_partial(f2, q, l);
    rhs[l] = 0.25 * acc;
  }
  return solve_spd(gy, rhs);
}

Mat4 fd_riemann_endomorphism(const FinslerMetricHandle& h, const Vec4& x,
                             const Vec4& y) {
  auto spray_comp = [&h](int i) {
    return ScalarFn([&h, i](const std::vector<double>& q) {
      return spray(h, {q[0], q[1], q[2], q[3]}, {q[4], q[5], q[6], q[7]})[i];
    });
  };
  const std::vector<double> q{x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3]};
  const Vec4 g = spray(h, x, y);

  double dgdx[4][4], dgdy[4][4], d2gxy[4][4][4], d2gyy[4][4][4];
  for (int i = 0; i < 4; ++i) {
    const ScalarFn gi = spray_comp(i);
    for (int k = 0; k < 4; ++k) {
      dgdx[i][k] = fd_partial(gi, q, k);
      dgdy[i][k] = fd_partial(gi, q, 4 + k);
      for (int j = 0; j < 4; ++j) {
        d2gxy[i][j][k] = fd_second(gi, q, j, 4 + k);
        d2gyy[i][j][k] = fd_second(gi, q, 4 + j, 4 + k);
      }
    }
  }

  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      double acc = 2.0 * dgdx[i][k];
      for (int j = 0; j < 4; ++j) {
        acc -= y[j] * d2gxy[i][j][k];
        acc += 2.0 * g[j] * d2gyy[i][j][k];
        acc -= dgdy[i][j] * dgdy[j][k];
      }
      r(i, k) = acc;
    }
  return r;
}

}  // namespace zermelo::testsupport
