// zermelo - truncated multivariate Taylor jets (exact forward-mode derivatives)
//
// A Jet carries the value and all mixed partial derivatives of a scalar
// quantity up to a fixed total order (<= 4) in a fixed number of seed
// variables (<= 8). Stored coefficients ARE the partial derivatives (Taylor
// coefficient times alpha!), one slot per canonical sorted multi-index, so
// extraction is a direct lookup and the product rule carries binomial
// weights. All operations are pure; jets are immutable after construction
// and safe to share across threads.
#pragma once

#include <array>
#include <span>
#include <vector>

#include "zermelo/errors.hpp"

namespace zermelo {

inline constexpr int kJetMaxVars = 8;
inline constexpr int kJetMaxOrder = 4;

struct JetConfig {
  int num_vars = 1;
  int max_order = 1;

  friend bool operator==(const JetConfig&, const JetConfig&) = default;
};

namespace detail {
class JetTable;
// Interned table for a (num_vars, max_order) pair. Orders 0..4 are accepted
// here; order 0 arises from Jet::derivative() of an order-1 jet.
const JetTable& jet_table(int num_vars, int max_order);
}  // namespace detail

class Jet {
 public:
  Jet() = default;

  // value with all derivatives zero
  static Jet constant(const JetConfig& config, double value);
  // value with d/dx_var = 1, everything else zero
  static Jet variable(const JetConfig& config, int var, double value);

  JetConfig config() const;
  int num_vars() const;
  int max_order() const;

  double value() const { return coeffs_.empty() ? 0.0 : coeffs_[0]; }

  // Exact mixed partial for the given multi-index (one exponent per seed
  // variable; trailing zeros may be omitted). |multi_index| > max_order is a
  // ConfigError.
  double partial(std::span<const int> multi_index) const;
  double partial(std::initializer_list<int> multi_index) const {
    return partial(std::span<const int>(multi_index.begin(), multi_index.size()));
  }

  // d/dx_var as a jet of one order lower (coefficients shift; still exact).
  Jet derivative(int var) const;

  // Copy truncated to a lower order (a prefix of the coefficient array).
  Jet truncated(int order) const;

  std::span<const double> coefficients() const { return coeffs_; }

  Jet operator-() const;
  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

  friend Jet operator+(const Jet& a, double s);
  friend Jet operator+(double s, const Jet& a) { return a + s; }
  friend Jet operator-(const Jet& a, double s) { return a + (-s); }
  friend Jet operator-(double s, const Jet& a) { return -a + s; }
  friend Jet operator*(const Jet& a, double s);
  friend Jet operator*(double s, const Jet& a) { return a * s; }
  friend Jet operator/(const Jet& a, double s);
  friend Jet operator/(double s, const Jet& a);

  friend Jet sqrt(const Jet& a);
  friend Jet sin(const Jet& a);
  friend Jet cos(const Jet& a);

 private:
  friend class detail::JetTable;
  explicit Jet(const detail::JetTable* table);

  const detail::JetTable* table_ = nullptr;
  std::vector<double> coeffs_;
};

// One jet per coordinate: value point[i], first derivative 1 w.r.t. variable
// i. point.size() must equal config.num_vars.
std::vector<Jet> seed(std::span<const double> point, const JetConfig& config);

// Convenience: num_vars taken from the point length.
std::vector<Jet> seed(std::span<const double> point, int order);

}  // namespace zermelo
