// zermelo - Hawking Taub-NUT / flat metrics on R^4 and their tensor calculus
//
// Coordinates are written x[0]..x[3] for the paper-style x^1..x^4. The metric
// family is
//   g_a = B(x) I - A(x) H(x),  B = a|x|^2 + 1,  A = a (1 + 1/B),
// with H the rank-one block matrix built from (x^2, -x^1) and (x^4, -x^3).
// a = 0 is the flat metric. All curvature quantities are obtained from jets
// seeded in the 4 base coordinates, so derivatives are exact.
#pragma once

#include <array>
#include <functional>
#include <utility>

#include "zermelo/jet.hpp"
#include "zermelo/linalg.hpp"

namespace zermelo {

struct MetricSpec {
  double a = 0.0;

  static MetricSpec flat() { return MetricSpec{0.0}; }
  static MetricSpec taub_nut(double a) {
    if (!(a >= 0.0)) throw ConfigError("MetricSpec: parameter a must be >= 0");
    return MetricSpec{a};
  }
  bool flat_case() const { return a == 0.0; }
};

// Entry table of the metric (the explicit 4x4 form), usable with double or
// Jet coordinates. This is the single source for every derived computation.
template <class T>
SquareArray<T, 4> metric_entries(double a, const std::array<T, 4>& x) {
  const T nx2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  const T b = a * nx2 + 1.0;
  const T aa = a * (1.0 / b + 1.0);
  SquareArray<T, 4> g;
  g[0][0] = b - aa * (x[1] * x[1]);
  g[0][1] = aa * (x[0] * x[1]);
  g[0][2] = -(aa * (x[1] * x[3]));
  g[0][3] = aa * (x[1] * x[2]);
  g[1][1] = b - aa * (x[0] * x[0]);
  g[1][2] = aa * (x[0] * x[3]);
  g[1][3] = -(aa * (x[0] * x[2]));
  g[2][2] = b - aa * (x[3] * x[3]);
  g[2][3] = aa * (x[2] * x[3]);
  g[3][3] = b - aa * (x[2] * x[2]);
  g[1][0] = g[0][1];
  g[2][0] = g[0][2];
  g[3][0] = g[0][3];
  g[2][1] = g[1][2];
  g[3][1] = g[1][3];
  g[3][2] = g[2][3];
  return g;
}

// g_ij at x from the explicit entry table; flat spec gives the identity.
Mat4 metric_matrix(const MetricSpec& spec, const Vec4& x);

// Independent construction from the one-form formula
//   (a|x|^2+1) g_0 - [a(a|x|^2+2)/(a|x|^2+1)] w (x) w,
//   w = -x^2 dx^1 + x^1 dx^2 - x^4 dx^3 + x^3 dx^4.
// Must agree with metric_matrix to 1e-13.
Mat4 metric_via_oneform(double a, const Vec4& x);

// ||G(x) - (B I - A H)||_inf with H assembled from its three 2x2 blocks.
double decomposition_check(double a, const Vec4& x);

struct ChristoffelSymbols {
  // gamma[i][j][k] = Gamma^i_{jk}, symmetric in (j, k)
  std::array<SquareArray<double, 4>, 4> gamma{};
};

using Tensor4 = std::array<std::array<SquareArray<double, 4>, 4>, 4>;

struct CurvatureTensors {
  Tensor4 riemann{};  // riemann[i][j][k][l] = R^i_{jkl}
  Mat4 ricci;         // ricci(j, l) = R^k_{jkl}
  double scalar = 0.0;
};

ChristoffelSymbols christoffel(const MetricSpec& spec, const Vec4& x);
CurvatureTensors curvature(const MetricSpec& spec, const Vec4& x);

// g(R(u,v)v, u) / (g(u,u) g(v,v) - g(u,v)^2); throws DegenerateFlagError when
// the Gram denominator falls below 1e-12.
double sectional_curvature(const MetricSpec& spec, const Vec4& x, const Vec4& u,
                           const Vec4& v);

// A vector field handle: takes the seeded coordinate jets and returns the
// four jet-valued components W^i. Works for arbitrary differentiable fields.
using VectorField = std::function<std::array<Jet, 4>(const std::array<Jet, 4>&)>;

// W_{i|j} + W_{j|i} with W_i = g_ij W^j and | the Levi-Civita covariant
// derivative; identically zero for Killing fields.
Mat4 killing_residual(const MetricSpec& spec, const Vec4& x, const VectorField& field);

// Least-squares c minimizing ||residual + 4c g||_F; returns (c, deviation).
std::pair<double, double> homothety_constant_fit(const Mat4& residual, const Mat4& g);

// 3-dimensional Euclidean Laplacian of u_a(y) = (1/|y| + a)/4 at y != 0.
double harmonicity_check(double a, const std::array<double, 3>& y);

// max_k ||nabla_k g||_inf; zero by construction up to rounding.
double metric_compatibility_residual(const MetricSpec& spec, const Vec4& x);

// max |R^i_{jkl} + R^i_{klj} + R^i_{ljk}| (first Bianchi identity).
double bianchi_residual(const CurvatureTensors& curv);

}  // namespace zermelo
