// zermelo - metric constructions and curvature via order-2 jets

#include "zermelo/metric.hpp"

#include <cmath>

namespace zermelo {

Mat4 metric_matrix(const MetricSpec& spec, const Vec4& x) {
  auto g = metric_entries<double>(spec.a, x);
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = g[i][j];
  return m;
}

Mat4 metric_via_oneform(double a, const Vec4& x) {
  const double nx2 = norm_sq(x);
  const Vec4 omega{-x[1], x[0], -x[3], x[2]};
  const double coef = a * (a * nx2 + 2.0) / (a * nx2 + 1.0);
  Mat4 m = (a * nx2 + 1.0) * Mat4::identity() - coef * outer(omega, omega);
  return m;
}

double decomposition_check(double a, const Vec4& x) {
  const Mat4 g = metric_matrix(MetricSpec::taub_nut(a), x);

  // H blocks: H1 from (x^2, -x^1), H3 from (x^4, -x^3), H2 the cross block
  const double u[2] = {x[1], -x[0]};
  const double v[2] = {x[3], -x[2]};
  Mat4 h;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      h(i, j) = u[i] * u[j];
      h(i, j + 2) = u[i] * v[j];
      h(i + 2, j) = v[i] * u[j];
      h(i + 2, j + 2) = v[i] * v[j];
    }

  const double nx2 = norm_sq(x);
  const double b = a * nx2 + 1.0;
  const double aa = a * (1.0 + 1.0 / b);
  const Mat4 assembled = b * Mat4::identity() - aa * h;
  return inf_norm(g - assembled);
}

namespace {

constexpr JetConfig kBaseConfig{4, 2};

std::array<Jet, 4> seed4(const Vec4& x) {
  auto jets = seed(std::span<const double>(x.data(), 4), kBaseConfig);
  return {jets[0], jets[1], jets[2], jets[3]};
}

// Christoffel symbols as order-1 jets (values + first derivatives).
std::array<SquareArray<Jet, 4>, 4> christoffel_jets(double a, const std::array<Jet, 4>& xj) {
  auto g2 = metric_entries<Jet>(a, xj);

  SquareArray<Jet, 4> g1;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g1[i][j] = g2[i][j].truncated(1);

  const JetConfig cfg1{4, 1};
  const Jet zero1 = Jet::constant(cfg1, 0.0);
  const Jet one1 = Jet::constant(cfg1, 1.0);
  auto ginv = invert<Jet, 4>(g1, zero1, one1);

  // dg[k][i][j] = d g_ij / d x^k as order-1 jets
  std::array<SquareArray<Jet, 4>, 4> dg;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) dg[k][i][j] = g2[i][j].derivative(k);

  std::array<SquareArray<Jet, 4>, 4> gamma;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = j; k < 4; ++k) {
        Jet acc = zero1;
        for (int l = 0; l < 4; ++l)
          acc += ginv[i][l] * (dg[j][l][k] + dg[k][j][l] - dg[l][j][k]);
        gamma[i][j][k] = acc * 0.5;
        if (k != j) gamma[i][k][j] = gamma[i][j][k];
      }
  return gamma;
}

}  // namespace

ChristoffelSymbols christoffel(const MetricSpec& spec, const Vec4& x) {
  auto gj = christoffel_jets(spec.a, seed4(x));
  ChristoffelSymbols out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) out.gamma[i][j][k] = gj[i][j][k].value();
  return out;
}

CurvatureTensors curvature(const MetricSpec& spec, const Vec4& x) {
  auto gj = christoffel_jets(spec.a, seed4(x));

  double gv[4][4][4];
  double dgv[4][4][4][4];  // dgv[l][i][j][k] = d_l Gamma^i_{jk}
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        gv[i][j][k] = gj[i][j][k].value();
        for (int l = 0; l < 4; ++l) dgv[l][i][j][k] = gj[i][j][k].derivative(l).value();
      }

  CurvatureTensors out;
  // R^i_{jkl} = d_k Gamma^i_{lj} - d_l Gamma^i_{kj}
  //           + Gamma^i_{km} Gamma^m_{lj} - Gamma^i_{lm} Gamma^m_{kj}
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double r = dgv[k][i][l][j] - dgv[l][i][k][j];
          for (int m = 0; m < 4; ++m)
            r += gv[i][k][m] * gv[m][l][j] - gv[i][l][m] * gv[m][k][j];
          out.riemann[i][j][k][l] = r;
        }

  for (int j = 0; j < 4; ++j)
    for (int l = 0; l < 4; ++l) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += out.riemann[k][j][k][l];
      out.ricci(j, l) = s;
    }

  const Mat4 ginv = inverse_spd(metric_matrix(spec, x));
  double scal = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int l = 0; l < 4; ++l) scal += ginv(j, l) * out.ricci(j, l);
  out.scalar = scal;
  return out;
}

double sectional_curvature(const MetricSpec& spec, const Vec4& x, const Vec4& u,
                           const Vec4& v) {
  const Mat4 g = metric_matrix(spec, x);
  const double guu = quadratic_form(g, u, u);
  const double gvv = quadratic_form(g, v, v);
  const double guv = quadratic_form(g, u, v);
  const double denom = guu * gvv - guv * guv;
  if (denom < 1e-12)
    throw DegenerateFlagError("sectional_curvature: plane (u, v) is degenerate");

  const CurvatureTensors curv = curvature(spec, x);
  // R(u,v)v contracted against u
  double num = 0.0;
  for (int i = 0; i < 4; ++i) {
    double ruvv = 0.0;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          ruvv += curv.riemann[i][j][k][l] * v[j] * u[k] * v[l];
    for (int m = 0; m < 4; ++m) num += g(i, m) * u[m] * ruvv;
  }
  return num / denom;
}

Mat4 killing_residual(const MetricSpec& spec, const Vec4& x, const VectorField& field) {
  auto xj = seed4(x);
  auto g2 = metric_entries<Jet>(spec.a, xj);
  auto w_up = field(xj);

  // lowered components as jets: W_i = g_ij W^j
  std::array<Jet, 4> w_low;
  for (int i = 0; i < 4; ++i) {
    Jet acc = Jet::constant(kBaseConfig, 0.0);
    for (int j = 0; j < 4; ++j) acc += g2[i][j] * w_up[j];
    w_low[i] = acc;
  }

  auto gj = christoffel_jets(spec.a, xj);

  Mat4 residual;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double v = w_low[i].derivative(j).value() + w_low[j].derivative(i).value();
      for (int l = 0; l < 4; ++l) v -= 2.0 * gj[l][i][j].value() * w_low[l].value();
      residual(i, j) = v;
    }
  return residual;
}

std::pair<double, double> homothety_constant_fit(const Mat4& residual, const Mat4& g) {
  const double c = -frobenius_inner(residual, g) / (4.0 * frobenius_inner(g, g));
  const Mat4 rest = residual + (4.0 * c) * g;
  return {c, frobenius_norm(rest)};
}

double harmonicity_check(double a, const std::array<double, 3>& y) {
  const double r2 = y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
  if (!(r2 > 0.0)) throw DomainError("harmonicity_check: u_a is singular at the origin");
  const JetConfig cfg{3, 2};
  auto yj = seed(std::span<const double>(y.data(), 3), cfg);
  const Jet r = sqrt(yj[0] * yj[0] + yj[1] * yj[1] + yj[2] * yj[2]);
  const Jet u = (1.0 / r + a) * 0.25;
  return u.partial({2, 0, 0}) + u.partial({0, 2, 0}) + u.partial({0, 0, 2});
}

double metric_compatibility_residual(const MetricSpec& spec, const Vec4& x) {
  auto xj = seed4(x);
  auto g2 = metric_entries<Jet>(spec.a, xj);
  auto gj = christoffel_jets(spec.a, xj);

  double worst = 0.0;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double v = g2[i][j].derivative(k).value();
        for (int l = 0; l < 4; ++l)
          v -= gj[l][k][i].value() * g2[l][j].value() +
               gj[l][k][j].value() * g2[i][l].value();
        worst = std::max(worst, std::abs(v));
      }
  return worst;
}

double bianchi_residual(const CurvatureTensors& curv) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const double s = curv.riemann[i][j][k][l] + curv.riemann[i][k][l][j] +
                           curv.riemann[i][l][j][k];
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

}  // namespace zermelo
