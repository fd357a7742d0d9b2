// zermelo - Randers curvature from jet-exact derivatives of F^2

#include "zermelo/finsler.hpp"

#include <cmath>

namespace zermelo {

namespace {

constexpr double kFlagDegeneracyThreshold = 1e-12;

// F^2 at (x, y) with T = double or Jet. The Randers data is assembled inline:
//   alpha^2 = g(y,y)/lambda + (W.y)^2/lambda^2,  beta = -(W.y)/lambda,
// with W.y the lowered-contraction W_i y^i.
template <class T>
T f_squared_impl(const NavigationParams& p, const std::array<T, 4>& x,
                 const std::array<T, 4>& y) {
  using std::sqrt;
  const T zero = x[0] * 0.0;

  auto g = metric_entries<T>(p.a, x);
  auto w = wind_components<T>(p.m, p.n, x);

  std::array<T, 4> w_low;
  for (int i = 0; i < 4; ++i) {
    T acc = zero;
    for (int j = 0; j < 4; ++j) acc += g[i][j] * w[j];
    w_low[i] = acc;
  }

  T wsq = zero;
  for (int i = 0; i < 4; ++i) wsq += w_low[i] * w[i];
  const T lambda = 1.0 - wsq;

  T gyy = zero;
  for (int i = 0; i < 4; ++i) {
    gyy += g[i][i] * (y[i] * y[i]);
    for (int j = i + 1; j < 4; ++j) gyy += 2.0 * (g[i][j] * (y[i] * y[j]));
  }

  T wy = zero;
  for (int i = 0; i < 4; ++i) wy += w_low[i] * y[i];

  const T alpha2 = gyy / lambda + (wy * wy) / (lambda * lambda);
  const T alpha = sqrt(alpha2);
  const T f = alpha - wy / lambda;
  return f * f;
}

void require_domain(const NavigationParams& p, const Vec4& x, const char* what) {
  if (!(wind_norm_sq(p, x) < 1.0))
    throw OutsideDomainError(std::string(what) + ": |W|^2 >= 1 at the requested point");
}

void require_nonzero(const Vec4& y, const char* what) {
  if (y[0] == 0.0 && y[1] == 0.0 && y[2] == 0.0 && y[3] == 0.0)
    throw DomainError(std::string(what) + ": direction y must be nonzero");
}

std::array<Jet, 4> subrange(const std::vector<Jet>& jets, int from) {
  return {jets[from], jets[from + 1], jets[from + 2], jets[from + 3]};
}

// F^2 as a jet of the requested total order in the 8 variables (x, y)
Jet f_squared_jet(const NavigationParams& p, const Vec4& x, const Vec4& y, int order) {
  const JetConfig cfg{8, order};
  std::array<double, 8> point{x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3]};
  auto jets = seed(std::span<const double>(point.data(), 8), cfg);
  const auto xa = subrange(jets, 0);
  const auto ya = subrange(jets, 4);
  return f_squared_impl<Jet>(p, xa, ya);
}

Mat4 fundamental_from_jet(const Jet& f2) {
  Mat4 gy;
  for (int i = 0; i < 4; ++i) {
    const Jet di = f2.derivative(4 + i);
    for (int j = i; j < 4; ++j) {
      gy(i, j) = 0.5 * di.derivative(4 + j).value();
      gy(j, i) = gy(i, j);
    }
  }
  return gy;
}

// Everything riemann_endomorphism and its consumers need from one order-4
// jet evaluation.
struct CurvatureEval {
  Mat4 riemann;   // R^i_k
  Mat4 g_y;
  double f2 = 0.0;
  Vec4 f2_dy{};   // dF^2/dy^k values
};

CurvatureEval evaluate_curvature(const FinslerMetricHandle& h, const Vec4& x,
                                 const Vec4& y) {
  require_domain(h.params(), x, "riemann_endomorphism");
  require_nonzero(y, "riemann_endomorphism");

  const Jet f2 = f_squared_jet(h.params(), x, y, 4);

  // spray coefficients as order-2 jets: solve (2 g_y) G = (1/2) rhs, i.e.
  // G = (1/4) g_y^{-1} (y^k d^2F^2/dx^k dy - dF^2/dx)
  const JetConfig cfg2{8, 2};
  SquareArray<Jet, 4> gy2;
  std::array<Jet, 4> rhs2;
  for (int i = 0; i < 4; ++i) {
    const Jet dyi = f2.derivative(4 + i);
    for (int j = 0; j < 4; ++j) gy2[i][j] = dyi.derivative(4 + j) * 0.5;
  }
  for (int l = 0; l < 4; ++l) {
    Jet acc = Jet::constant(cfg2, 0.0);
    for (int k = 0; k < 4; ++k) {
      const Jet yk = Jet::variable(cfg2, 4 + k, y[k]);
      acc += yk * f2.derivative(k).derivative(4 + l);
    }
    acc -= f2.derivative(l).truncated(2);
    rhs2[l] = acc * 0.25;
  }
  const std::array<Jet, 4> spray2 = solve_linear<Jet, 4>(gy2, rhs2);

  double gv[4];
  double dgdx[4][4];
  double dgdy[4][4];
  double d2gxy[4][4][4];  // [i][j][k] = d^2 G^i / dx^j dy^k
  double d2gyy[4][4][4];
  for (int i = 0; i < 4; ++i) {
    gv[i] = spray2[i].value();
    for (int j = 0; j < 4; ++j) {
      const Jet dxj = spray2[i].derivative(j);
      const Jet dyj = spray2[i].derivative(4 + j);
      dgdx[i][j] = dxj.value();
      dgdy[i][j] = dyj.value();
      for (int k = 0; k < 4; ++k) {
        d2gxy[i][j][k] = dxj.derivative(4 + k).value();
        d2gyy[i][j][k] = dyj.derivative(4 + k).value();
      }
    }
  }

  CurvatureEval out;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      double r = 2.0 * dgdx[i][k];
      for (int j = 0; j < 4; ++j) {
        r -= y[j] * d2gxy[i][j][k];
        r += 2.0 * gv[j] * d2gyy[i][j][k];
        r -= dgdy[i][j] * dgdy[j][k];
      }
      out.riemann(i, k) = r;
    }

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.g_y(i, j) = gy2[i][j].value();
  out.f2 = f2.value();
  for (int k = 0; k < 4; ++k) out.f2_dy[k] = f2.derivative(4 + k).value();
  return out;
}

double flag_from_eval(const CurvatureEval& e, const Vec4& y, const Vec4& v) {
  const double gyy = quadratic_form(e.g_y, y, y);
  const double gvv = quadratic_form(e.g_y, v, v);
  const double gyv = quadratic_form(e.g_y, y, v);
  const double denom = gyy * gvv - gyv * gyv;
  if (denom < kFlagDegeneracyThreshold)
    throw DegenerateFlagError("flag_curvature: flag (y, V) is degenerate");
  Vec4 rv{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) rv[i] += e.riemann(i, k) * v[k];
  return quadratic_form(e.g_y, rv, v) / denom;
}

std::pair<double, double> cfr_from_eval(const CurvatureEval& e, const Vec4& y) {
  const double f = std::sqrt(e.f2);
  Mat4 model;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const double fy_k = e.f2_dy[k] / (2.0 * f);
      model(i, k) = e.f2 * (i == k ? 1.0 : 0.0) - f * fy_k * y[i];
    }
  const double denom = frobenius_inner(model, model);
  const double lambda_fit =
      denom > 0.0 ? frobenius_inner(e.riemann, model) / denom : 0.0;
  const Mat4 rest = e.riemann - lambda_fit * model;
  return {lambda_fit, frobenius_norm(rest)};
}

}  // namespace

double F_value(const FinslerMetricHandle& h, const Vec4& x, const Vec4& y) {
  if (y[0] == 0.0 && y[1] == 0.0 && y[2] == 0.0 && y[3] == 0.0) return 0.0;
  const RandersPointData rd = randers_data(h.params(), x);
  const double alpha = std::sqrt(quadratic_form(rd.a_ij, y, y));
  return alpha + dot(rd.b, y);
}

Mat4 fundamental_tensor(const FinslerMetricHandle& h, const Vec4& x, const Vec4& y) {
  require_domain(h.params(), x, "fundamental_tensor");
  require_nonzero(y, "fundamental_tensor");
  return fundamental_from_jet(f_squared_jet(h.params(), x, y, 2));
}

Vec4 spray(const FinslerMetricHandle& h, const Vec4& x, const Vec4& y) {
  require_domain(h.params(), x, "spray");
  require_nonzero(y, "spray");
  const Jet f2 = f_squared_jet(h.params(), x, y, 2);
  const Mat4 gy = fundamental_from_jet(f2);
  Vec4 rhs{};
  for (int l = 0; l < 4; ++l) {
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) acc += y[k] * f2.derivative(k).derivative(4 + l).value();
    acc -= f2.derivative(l).value();
    rhs[l] = 0.25 * acc;
  }
  return solve_spd(gy, rhs);
}

Mat4 riemann_endomorphism(const FinslerMetricHandle& h, const Vec4& x, const Vec4& y) {
  return evaluate_curvature(h, x, y).riemann;
}

double ricci(const FinslerMetricHandle& h, const Vec4& x, const Vec4& y) {
  const Mat4 r = riemann_endomorphism(h, x, y);
  return r(0, 0) + r(1, 1) + r(2, 2) + r(3, 3);
}

double flag_curvature(const FinslerMetricHandle& h, const Vec4& x, const Vec4& y,
                      const Vec4& v) {
  return flag_from_eval(evaluate_curvature(h, x, y), y, v);
}

std::pair<double, double> constant_flag_residual(const FinslerMetricHandle& h,
                                                 const Vec4& x, const Vec4& y) {
  return cfr_from_eval(evaluate_curvature(h, x, y), y);
}

namespace {

struct DrawnFlag {
  Vec4 x{};
  Vec4 y{};
  Vec4 v{};
  CurvatureEval eval;
};

DrawnFlag draw_flag(const FinslerMetricHandle& h, CounterRng rng, const ScanConfig& cfg) {
  DrawnFlag out;
  int tries = 0;
  for (;;) {
    out.x = rng.in_ball(cfg.radius);
    if (wind_norm_sq(h.params(), out.x) <= cfg.margin) break;
    if (++tries > 10000)
      throw ConfigError("einstein_scan: could not sample the exact domain; "
                        "shrink the radius or the wind");
  }
  out.y = rng.on_sphere();
  out.eval = evaluate_curvature(h, out.x, out.y);
  for (;;) {
    out.v = rng.on_sphere();
    const double gyy = quadratic_form(out.eval.g_y, out.y, out.y);
    const double gvv = quadratic_form(out.eval.g_y, out.v, out.v);
    const double gyv = quadratic_form(out.eval.g_y, out.y, out.v);
    if (gyy * gvv - gyv * gyv > kFlagDegeneracyThreshold) break;
  }
  return out;
}

}  // namespace

EinsteinScan einstein_scan(const FinslerMetricHandle& h, const ScanConfig& cfg) {
  if (cfg.samples < 1)
    throw ConfigError("einstein_scan: sample count must be >= 1");
  if (!(cfg.radius > 0.0)) throw ConfigError("einstein_scan: radius must be positive");

  EinsteinScan scan;
  scan.samples = cfg.samples;
  const CounterRng root(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    const DrawnFlag s = draw_flag(h, root.split(static_cast<std::uint64_t>(i)), cfg);
    const double ric = s.eval.riemann(0, 0) + s.eval.riemann(1, 1) +
                       s.eval.riemann(2, 2) + s.eval.riemann(3, 3);
    scan.max_ricci_ratio = std::max(scan.max_ricci_ratio, std::abs(ric) / s.eval.f2);

    const auto [lambda_fit, residual] = cfr_from_eval(s.eval, s.y);
    (void)lambda_fit;
    scan.max_flag_residual = std::max(scan.max_flag_residual, residual);
    const double norm_r = frobenius_norm(s.eval.riemann);
    if (norm_r > 0.0)
      scan.max_flag_residual_rel =
          std::max(scan.max_flag_residual_rel, residual / norm_r);

    const double k = flag_from_eval(s.eval, s.y, s.v);
    if (i == 0) {
      scan.flag_min = scan.flag_max = k;
    } else {
      scan.flag_min = std::min(scan.flag_min, k);
      scan.flag_max = std::max(scan.flag_max, k);
    }
    scan.max_abs_flag = std::max(scan.max_abs_flag, std::abs(k));
  }
  scan.flag_spread = scan.flag_max - scan.flag_min;
  return scan;
}

std::vector<FlagSample> sample_flags(const FinslerMetricHandle& h, const ScanConfig& cfg) {
  if (cfg.samples < 1)
    throw ConfigError("sample_flags: sample count must be >= 1");
  if (!(cfg.radius > 0.0)) throw ConfigError("sample_flags: radius must be positive");

  std::vector<FlagSample> rows;
  rows.reserve(static_cast<std::size_t>(cfg.samples));
  const CounterRng root(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    const DrawnFlag s = draw_flag(h, root.split(static_cast<std::uint64_t>(i)), cfg);
    rows.push_back({s.x, s.y, s.v, flag_from_eval(s.eval, s.y, s.v)});
  }
  return rows;
}

}  // namespace zermelo
