// zermelo - Zermelo navigation data for the rotational wind W_{m,n}
//
// W_{m,n} = -m x^2 d/dx^1 + m x^1 d/dx^2 - n x^4 d/dx^3 + n x^3 d/dx^4 on the
// Taub-NUT background g_a. The navigation problem F = sqrt(g(x, y - F W))
// produces the Randers data a_ij, b_j, lambda wherever |W|^2_g < 1 (the exact
// domain predicate; the paper's sufficient bound f(x) < 1 is also reported).
#pragma once

#include <array>

#include "zermelo/linalg.hpp"
#include "zermelo/metric.hpp"

namespace zermelo {

struct NavigationParams {
  double a = 1.0;   // Taub-NUT parameter, >= 0
  double m = 0.5;   // first rotation rate
  double n = 0.5;   // second rotation rate

  // The theorem case has m, n > 0; zero is accepted so the flat / wind-off
  // control handles can be expressed. Negative values are rejected.
  NavigationParams(double a_, double m_, double n_) : a(a_), m(m_), n(n_) {
    if (!(a >= 0.0)) throw ConfigError("NavigationParams: a must be >= 0");
    if (!(m >= 0.0) || !(n >= 0.0))
      throw ConfigError("NavigationParams: m and n must be nonnegative");
  }
  NavigationParams() = default;

  MetricSpec metric() const { return MetricSpec::taub_nut(a); }
};

// wind components, usable with double or Jet coordinates
template <class T>
std::array<T, 4> wind_components(double m, double n, const std::array<T, 4>& x) {
  return {-(m * x[1]), m * x[0], -(n * x[3]), n * x[2]};
}

Vec4 wind(const NavigationParams& p, const Vec4& x);

// sigma = m((x^1)^2 + (x^2)^2) + n((x^3)^2 + (x^4)^2)
double sigma(const NavigationParams& p, const Vec4& x);

// closed-form lowered covector W_j = W^j (B - sigma A / m) [j = 1, 2],
// W^j (B - sigma A / n) [j = 3, 4]; equals g_ij W^i to rounding
Vec4 wind_covector(const NavigationParams& p, const Vec4& x);

// closed-form |W|^2 = [(W^1)^2 + (W^2)^2](B - sigma A/m)
//                   + [(W^3)^2 + (W^4)^2](B - sigma A/n)
double wind_norm_sq(const NavigationParams& p, const Vec4& x);

// sufficient bound f(x) = |x|^2/(1 + a|x|^2) (p + 2a|m-n||x|^2 + a^2|m-n||x|^4),
// p = max{m, n}; f(x) < 1 implies |W|^2 < 1 when m, n <= 1
double f_bound(const NavigationParams& p, const Vec4& x);

struct DomainReport {
  Vec4 x{};
  double f_value = 0.0;
  double wind_norm_sq = 0.0;
  bool in_domain_sufficient = false;  // f(x) < 1, the paper's Omega
  bool in_domain_exact = false;       // |W|^2 < 1, the operative predicate
};

DomainReport domain_report(const NavigationParams& p, const Vec4& x);

struct RandersPointData {
  Mat4 a_ij;       // symmetric positive definite
  Vec4 b{};        // covector with ||b||_a < 1
  double lambda = 1.0;  // 1 - |W|^2, in (0, 1]
};

// a_ij = g_ij/lambda + W_i W_j/lambda^2, b_j = -W_j/lambda.
// Throws OutsideDomainError when |W|^2 >= 1.
RandersPointData randers_data(const NavigationParams& p, const Vec4& x);

// Unique positive root F of lambda F^2 + 2 g(y, W) F - g(y, y) = 0, the
// implicit navigation definition; equals alpha + beta from randers_data.
// y = 0 returns 0. Throws OutsideDomainError when |W|^2 >= 1.
double solve_implicit_F(const NavigationParams& p, const Vec4& x, const Vec4& y);

// W_{m,n} as a jet-valued evaluation handle for killing_residual
VectorField wind_field(double m, double n);

}  // namespace zermelo
