#include "zermelo/rng.hpp"

#include <cmath>
#include <numbers>

namespace zermelo {

double CounterRng::normal() {
  // Box-Muller; u1 bounded away from 0 so log stays finite
  const double u1 = std::max(uniform(), 0x1.0p-60);
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec4 CounterRng::in_ball(double radius) {
  for (;;) {
    Vec4 x{uniform(-radius, radius), uniform(-radius, radius),
           uniform(-radius, radius), uniform(-radius, radius)};
    if (norm_sq(x) <= radius * radius) return x;
  }
}

Vec4 CounterRng::on_sphere() {
  for (;;) {
    Vec4 x{normal(), normal(), normal(), normal()};
    const double r = norm(x);
    if (r > 1e-12) {
      for (double& c : x) c /= r;
      return x;
    }
  }
}

}  // namespace zermelo
