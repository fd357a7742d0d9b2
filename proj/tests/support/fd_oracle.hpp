// test-side finite-difference oracle, independent of the jet code path
//
// Central differences with base step 1e-4 and one Richardson extrapolation
// level for first derivatives; second derivatives use step 1e-3 (balancing
// truncation against roundoff in the difference quotient). The Christoffel
// and Ricci oracles difference the closed-form double-precision metric
// entries only. The spray oracle differences the double-precision F^2 (the
// Randers double path), so it shares no jet machinery either. The Riemann
// endomorphism oracle differences spray values, checking the outermost
// derivative level against an independent scheme.
#pragma once

#include <functional>
#include <vector>

#include "zermelo/finsler.hpp"
#include "zermelo/metric.hpp"
#include "zermelo/navigation.hpp"

namespace zermelo::testsupport {

using ScalarFn = std::function<double(const std::vector<double>&)>;

double fd_partial(const ScalarFn& f, std::vector<double> x, int i, double h = 1e-4);
double fd_second(const ScalarFn& f, std::vector<double> x, int i, int j,
                 double h = 1e-3);

// F^2 through the double-precision Randers path (no jets anywhere)
double f_squared_double(const NavigationParams& p, const Vec4& x, const Vec4& y);

ChristoffelSymbols fd_christoffel(double a, const Vec4& x);
Mat4 fd_ricci(double a, const Vec4& x);
Vec4 fd_spray(const NavigationParams& p, const Vec4& x, const Vec4& y);
Mat4 fd_riemann_endomorphism(const FinslerMetricHandle& h, const Vec4& x,
                             const Vec4& y);

}  // namespace zermelo::testsupport
