// zermelo - the block-rotation flow phi_theta and its isometry checks
//
// phi_theta(x) = A_theta x with A_theta block-diagonal from the 2x2 rotations
// by m*theta and n*theta. The flow preserves |x|, forms a one-parameter
// group, is an isometry of every g_a, and its generator at theta = 0 is the
// wind field W_{m,n}.
#pragma once

#include "zermelo/linalg.hpp"

namespace zermelo {

struct BlockRotation {
  double theta = 0.0;
  double m = 1.0;
  double n = 1.0;
  Mat4 matrix;  // orthogonal, det 1, block-diagonal 2+2
};

BlockRotation rotation(double m, double n, double theta);

// phi_theta(x)
Vec4 flow(double m, double n, double theta, const Vec4& x);

// ||A_theta^T G(phi_theta x) A_theta - G(x)||_inf
double isometry_residual(double a, double m, double n, double theta, const Vec4& x);

// max over the three 2x2 block identities H_1(x) = A_{theta,m}^T H_1(y) A_{theta,m},
// H_2(x) = A_{theta,m}^T H_2(y) A_{theta,n}, H_3(x) = A_{theta,n}^T H_3(y) A_{theta,n}
double h_equivariance_residual(double m, double n, double theta, const Vec4& x);

// d phi_theta(p) / d theta at theta = 0 by central differences (step 1e-6);
// matches the wind field W_{m,n}(p)
Vec4 generator(double m, double n, const Vec4& p);

// |phi_{t1+t2}(x) - phi_{t1}(phi_{t2}(x))|
double group_law_residual(double m, double n, double theta1, double theta2, const Vec4& x);

}  // namespace zermelo
