#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "support/fd_oracle.hpp"
#include "zermelo/jet.hpp"
#include "zermelo/rng.hpp"

using namespace zermelo;
using zermelo::testsupport::fd_partial;
using zermelo::testsupport::fd_second;

namespace {

Jet seed1(double x, int order) {
  const std::array<double, 1> p{x};
  return seed(p, order)[0];
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max({std::abs(got), std::abs(want), 1.0});
}

// multi-indices of total degree <= order over nvars variables
std::vector<std::vector<int>> all_indices(int nvars, int order) {
  std::vector<std::vector<int>> out;
  std::vector<int> mi(nvars, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars - 1) {
      mi[pos] = left;
      out.push_back(mi);
      return;
    }
    for (int e = left; e >= 0; --e) {
      mi[pos] = e;
      self(self, pos + 1, left - e);
    }
    mi[pos] = 0;
  };
  for (int deg = 0; deg <= order; ++deg) rec(rec, 0, deg);
  return out;
}

}  // namespace

TEST_CASE("seed then square gives exact polynomial derivatives") {
  const Jet x = seed1(3.0, 2);
  const Jet sq = x * x;
  CHECK(sq.value() == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(sq.partial({1}) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(sq.partial({2}) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("mixed partial of x*y") {
  const std::array<double, 2> p{1.7, -0.3};
  auto jets = seed(p, 2);
  const Jet prod = jets[0] * jets[1];
  CHECK(prod.partial({1, 1}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(prod.partial({2, 0}) == 0.0);
  CHECK(prod.partial({0, 2}) == 0.0);
}

TEST_CASE("sqrt chain rule at 2") {
  const Jet r = sqrt(seed1(2.0, 2));
  CHECK(r.value() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r.partial({1}) == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
}

TEST_CASE("constants multiply to constants") {
  const JetConfig cfg{2, 3};
  const Jet c = Jet::constant(cfg, 4.0) * Jet::constant(cfg, 0.5);
  CHECK(c.value() == 2.0);
  for (const auto& mi : all_indices(2, 3)) {
    bool zero_index = true;
    for (int e : mi) zero_index = zero_index && e == 0;
    if (!zero_index) CHECK(c.partial(std::span<const int>(mi.data(), mi.size())) == 0.0);
  }
}

TEST_CASE("geometric series (1+t)/(1-t) at t=0") {
  const Jet t = seed1(0.0, 2);
  const Jet q = (t + 1.0) / (1.0 - t);
  CHECK(q.value() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(q.partial({1}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(q.partial({2}) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("sin Maclaurin coefficients") {
  const Jet t = seed1(0.0, 3);
  const Jet s = sin(t);
  CHECK(s.value() == 0.0);
  CHECK(s.partial({1}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.partial({2}) == 0.0);
  CHECK(s.partial({3}) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("cos and sin derivatives at a generic point agree with closed form") {
  const Jet t = seed1(0.7, 4);
  const Jet s = sin(t);
  const Jet c = cos(t);
  CHECK(s.partial({1}) == doctest::Approx(std::cos(0.7)).epsilon(1e-14));
  CHECK(s.partial({4}) == doctest::Approx(std::sin(0.7)).epsilon(1e-13));
  CHECK(c.partial({2}) == doctest::Approx(-std::cos(0.7)).epsilon(1e-13));
  CHECK(c.partial({3}) == doctest::Approx(std::sin(0.7)).epsilon(1e-13));
}

TEST_CASE("extract on x^2 y") {
  const std::array<double, 2> p{1.3, 2.1};
  auto jets = seed(p, 3);
  const Jet f = jets[0] * jets[0] * jets[1];
  CHECK(f.partial({2, 1}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(f.partial({2, 0}) == doctest::Approx(2.0 * 2.1).epsilon(1e-14));
  CHECK(f.partial({1, 1}) == doctest::Approx(2.0 * 1.3).epsilon(1e-14));
}

TEST_CASE("error paths") {
  const std::array<double, 2> p2{1.0, 2.0};
  CHECK_THROWS_AS(seed(p2, JetConfig{3, 2}), ConfigError);
  CHECK_THROWS_AS(seed(p2, 0), ConfigError);
  CHECK_THROWS_AS(seed(p2, 5), ConfigError);

  const Jet x = seed1(1.0, 2);
  CHECK_THROWS_AS((void)x.partial({3}), ConfigError);

  const Jet zero_const = seed1(0.0, 2);  // value 0, derivative 1
  CHECK_THROWS_AS(x / zero_const, SingularJetError);
  CHECK_THROWS_AS(sqrt(zero_const), DomainError);
  CHECK_THROWS_AS(sqrt(seed1(-2.0, 2)), DomainError);

  const Jet other_config = seed1(1.0, 3);
  CHECK_THROWS_AS(x + other_config, ConfigError);
}

TEST_CASE("random polynomial programs have exact partials") {
  // P(x) = sum_beta c_beta x^beta, degree <= 4 in 4 variables; every
  // extracted partial must match the analytic expansion to 1e-13 relative
  CounterRng rng(2024);
  const auto betas = all_indices(4, 4);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> coef(betas.size());
    for (double& c : coef) c = rng.uniform(-1.0, 1.0);
    const std::array<double, 4> pt{rng.uniform(-1, 1), rng.uniform(-1, 1),
                                   rng.uniform(-1, 1), rng.uniform(-1, 1)};
    auto jets = seed(pt, 4);

    Jet value = Jet::constant(JetConfig{4, 4}, 0.0);
    for (std::size_t b = 0; b < betas.size(); ++b) {
      Jet mono = Jet::constant(JetConfig{4, 4}, coef[b]);
      for (int v = 0; v < 4; ++v)
        for (int e = 0; e < betas[b][v]; ++e) mono = mono * jets[v];
      value += mono;
    }

    auto falling = [](int b, int a) {  // b!/(b-a)!
      double r = 1.0;
      for (int k = 0; k < a; ++k) r *= b - k;
      return r;
    };
    for (const auto& alpha : all_indices(4, 4)) {
      double expected = 0.0;
      for (std::size_t b = 0; b < betas.size(); ++b) {
        double term = coef[b];
        bool ok = true;
        for (int v = 0; v < 4 && ok; ++v) {
          if (betas[b][v] < alpha[v]) {
            ok = false;
            break;
          }
          term *= falling(betas[b][v], alpha[v]) *
                  std::pow(pt[v], betas[b][v] - alpha[v]);
        }
        if (ok) expected += term;
      }
      const double got = value.partial(std::span<const int>(alpha.data(), alpha.size()));
      CHECK(rel_err(got, expected) < 1e-13);
    }
  }
}

namespace {

// random polynomial jet built from seeded variables (order-4 coefficients
// stay O(1) because the generating coefficients live in [-1, 1])
Jet random_jet(CounterRng& rng, const std::array<Jet, 2>& vars) {
  const JetConfig cfg = vars[0].config();
  Jet out = Jet::constant(cfg, rng.uniform(-1.0, 1.0));
  for (const auto& beta : all_indices(2, cfg.max_order)) {
    Jet mono = Jet::constant(cfg, rng.uniform(-1.0, 1.0));
    for (int v = 0; v < 2; ++v)
      for (int e = 0; e < beta[v]; ++e) mono = mono * vars[v];
    out += mono;
  }
  return out;
}

double max_coeff_diff(const Jet& a, const Jet& b) {
  double worst = 0.0;
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i)
    worst = std::max(worst, std::abs(ca[i] - cb[i]));
  return worst;
}

double max_abs_coeff(const Jet& a) {
  double m = 0.0;
  for (double c : a.coefficients()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

TEST_CASE("multiplication is commutative and associative") {
  CounterRng rng(7);
  const std::array<double, 2> pt{0.4, -0.8};
  auto seeds = seed(pt, 4);
  const std::array<Jet, 2> vars{seeds[0], seeds[1]};
  for (int trial = 0; trial < 20; ++trial) {
    const Jet u = random_jet(rng, vars);
    const Jet v = random_jet(rng, vars);
    const Jet w = random_jet(rng, vars);
    const double scale = std::max(
        {max_abs_coeff(u), max_abs_coeff(v), max_abs_coeff(w), 1.0});
    CHECK(max_coeff_diff(u * v, v * u) < 1e-14 * scale * scale);
    CHECK(max_coeff_diff((u * v) * w, u * (v * w)) <
          1e-14 * scale * scale * scale);
  }
}

TEST_CASE("Leibniz rule coefficient-wise and against the FD oracle") {
  const std::array<double, 2> pt{0.9, 0.35};
  auto seeds = seed(pt, 3);
  CounterRng rng(11);
  const std::array<Jet, 2> vars{seeds[0], seeds[1]};
  const Jet u = random_jet(rng, vars);
  const Jet v = random_jet(rng, vars);
  const Jet uv = u * v;
  // coefficient-wise: d(u v) = u dv + v du in each variable
  for (int var = 0; var < 2; ++var) {
    const Jet lhs = uv.derivative(var);
    const Jet rhs = u.truncated(2) * v.derivative(var) + v.truncated(2) * u.derivative(var);
    CHECK(max_coeff_diff(lhs, rhs) < 1e-13 * std::max(1.0, max_abs_coeff(lhs)));
  }
}

TEST_CASE("smooth compositions match the FD oracle to 1e-5") {
  auto program = [](const auto& x, const auto& y) {
    using std::sqrt;
    return sqrt(x * x + y * y + 1.0) / (x + 2.0) + (x * y) / (y * y + 3.0);
  };
  auto fd_fn = [&](const std::vector<double>& q) { return program(q[0], q[1]); };

  CounterRng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const std::array<double, 2> pt{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    auto jets = seed(pt, 2);
    const Jet f = program(jets[0], jets[1]);
    const std::vector<double> q{pt[0], pt[1]};
    for (int i = 0; i < 2; ++i) {
      std::vector<int> mi(2, 0);
      mi[i] = 1;
      CHECK(rel_err(f.partial(std::span<const int>(mi.data(), 2)),
                    fd_partial(fd_fn, q, i)) < 1e-5);
      for (int j = i; j < 2; ++j) {
        std::vector<int> mij(2, 0);
        mij[i] += 1;
        mij[j] += 1;
        CHECK(rel_err(f.partial(std::span<const int>(mij.data(), 2)),
                      fd_second(fd_fn, q, i, j)) < 1e-5);
      }
    }
  }
}

TEST_CASE("sqrt(1+t^2) derivatives against the FD oracle") {
  auto fd_fn = [](const std::vector<double>& q) { return std::sqrt(1.0 + q[0] * q[0]); };
  const Jet t = seed1(0.6, 2);
  const Jet f = sqrt(t * t + 1.0);
  CHECK(rel_err(f.partial({1}), fd_partial(fd_fn, {0.6}, 0)) < 1e-5);
  CHECK(rel_err(f.partial({2}), fd_second(fd_fn, {0.6}, 0, 0)) < 1e-5);
}

TEST_CASE("div undoes mul when the divisor is well conditioned") {
  CounterRng rng(17);
  const std::array<double, 2> pt{-0.2, 0.5};
  auto seeds = seed(pt, 4);
  const std::array<Jet, 2> vars{seeds[0], seeds[1]};
  int accepted = 0;
  for (int trial = 0; trial < 40 && accepted < 15; ++trial) {
    const Jet u = random_jet(rng, vars);
    Jet v = random_jet(rng, vars);
    if (std::abs(v.value()) <= 0.1) continue;
    ++accepted;
    const Jet back = (u * v) / v;
    CHECK(max_coeff_diff(back, u) < 1e-12 * std::max(1.0, max_abs_coeff(u)));
  }
  CHECK(accepted >= 10);
}

TEST_CASE("truncation keeps the graded prefix") {
  const std::array<double, 2> pt{1.1, -0.4};
  auto jets = seed(pt, 4);
  const Jet f = (jets[0] * jets[1] + 2.0) * jets[0];
  const Jet t2 = f.truncated(2);
  CHECK(t2.max_order() == 2);
  CHECK(t2.value() == f.value());
  CHECK(t2.partial({1, 1}) == f.partial({1, 1}));
  CHECK(t2.partial({0, 2}) == f.partial({0, 2}));
}
