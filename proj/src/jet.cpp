// zermelo - jet arithmetic implementation
//
// Dense coefficient storage indexed by a precomputed canonical multi-index
// table (graded lexicographic). Tables are interned per (num_vars, max_order)
// and immutable once built, so jets only carry a table pointer plus their
// coefficient vector.

#include "zermelo/jet.hpp"

#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <utility>

namespace zermelo {
namespace detail {

namespace {

using MultiIndex = std::array<std::uint8_t, kJetMaxVars>;

constexpr int kCodeBase = kJetMaxOrder + 1;

// C(n, k) for n, k <= kJetMaxOrder
constexpr double kBinom[5][5] = {
    {1, 0, 0, 0, 0},
    {1, 1, 0, 0, 0},
    {1, 2, 1, 0, 0},
    {1, 3, 3, 1, 0},
    {1, 4, 6, 4, 1},
};

int pow_int(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

class JetTable {
 public:
  JetTable(int num_vars, int max_order, const JetTable* lower_table);

  int num_vars;
  int max_order;
  int count = 0;

  std::vector<MultiIndex> indices;         // graded-lex order
  std::vector<std::int32_t> code_to_index; // dense lookup, -1 where absent
  const JetTable* lower = nullptr;         // (num_vars, max_order - 1)

  struct MulEntry {
    std::int32_t a;
    std::int32_t b;
    double w;
  };
  std::vector<MulEntry> mul_entries;       // grouped per target index
  std::vector<std::int32_t> mul_offsets;   // size count + 1

  // deriv_src[v][j]: index in THIS table of (lower->indices[j] + e_v)
  std::array<std::vector<std::int32_t>, kJetMaxVars> deriv_src;

  int code_of(const MultiIndex& mi) const {
    int code = 0;
    for (int v = num_vars - 1; v >= 0; --v) code = code * kCodeBase + mi[v];
    return code;
  }

  Jet make_zero() const { return Jet(this); }
};

JetTable::JetTable(int nv, int mo, const JetTable* lower_table)
    : num_vars(nv), max_order(mo), lower(lower_table) {
  // enumerate multi-indices degree by degree, lexicographic within a degree
  MultiIndex mi{};
  auto emit = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == num_vars - 1) {
      mi[pos] = static_cast<std::uint8_t>(remaining);
      indices.push_back(mi);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      mi[pos] = static_cast<std::uint8_t>(e);
      self(self, pos + 1, remaining - e);
    }
    mi[pos] = 0;
  };
  for (int deg = 0; deg <= max_order; ++deg) emit(emit, 0, deg);
  count = static_cast<int>(indices.size());

  code_to_index.assign(pow_int(kCodeBase, num_vars), -1);
  for (int i = 0; i < count; ++i) code_to_index[code_of(indices[i])] = i;

  // product-rule pairs: for target gamma, all alpha <= gamma componentwise,
  // weight prod_k C(gamma_k, alpha_k)
  mul_offsets.assign(count + 1, 0);
  for (int t = 0; t < count; ++t) {
    const MultiIndex& gamma = indices[t];
    MultiIndex alpha{};
    MultiIndex beta{};
    auto gen = [&](auto&& self, int pos, double w) -> void {
      if (pos == num_vars) {
        mul_entries.push_back({code_to_index[code_of(alpha)],
                               code_to_index[code_of(beta)], w});
        return;
      }
      for (int e = 0; e <= gamma[pos]; ++e) {
        alpha[pos] = static_cast<std::uint8_t>(e);
        beta[pos] = static_cast<std::uint8_t>(gamma[pos] - e);
        self(self, pos + 1, w * kBinom[gamma[pos]][e]);
      }
    };
    gen(gen, 0, 1.0);
    mul_offsets[t + 1] = static_cast<std::int32_t>(mul_entries.size());
  }

  if (max_order > 0) {
    for (int v = 0; v < num_vars; ++v) {
      auto& map = deriv_src[v];
      map.resize(lower->count);
      for (int j = 0; j < lower->count; ++j) {
        MultiIndex shifted = lower->indices[j];
        shifted[v] += 1;
        map[j] = code_to_index[code_of(shifted)];
      }
    }
  }
}

const JetTable& jet_table(int num_vars, int max_order) {
  if (num_vars < 1 || num_vars > kJetMaxVars)
    throw ConfigError("jet: num_vars must be in 1..8, got " + std::to_string(num_vars));
  if (max_order < 0 || max_order > kJetMaxOrder)
    throw ConfigError("jet: max_order must be in 0..4, got " + std::to_string(max_order));

  static std::mutex mu;
  static std::array<std::array<std::unique_ptr<JetTable>, kJetMaxOrder + 1>, kJetMaxVars>
      cache;
  std::scoped_lock lock(mu);
  // build bottom-up; each table keeps a pointer to the one below it
  for (int d = 0; d <= max_order; ++d) {
    auto& slot = cache[num_vars - 1][d];
    if (!slot) {
      const JetTable* lower = d > 0 ? cache[num_vars - 1][d - 1].get() : nullptr;
      slot = std::make_unique<JetTable>(num_vars, d, lower);
    }
  }
  return *cache[num_vars - 1][max_order];
}

}  // namespace detail

using detail::JetTable;

Jet::Jet(const JetTable* table) : table_(table), coeffs_(table->count, 0.0) {}

Jet Jet::constant(const JetConfig& config, double value) {
  Jet j(&detail::jet_table(config.num_vars, config.max_order));
  j.coeffs_[0] = value;
  return j;
}

Jet Jet::variable(const JetConfig& config, int var, double value) {
  if (var < 0 || var >= config.num_vars)
    throw ConfigError("jet: variable index " + std::to_string(var) +
                      " out of range for " + std::to_string(config.num_vars) + " vars");
  if (config.max_order < 1) throw ConfigError("jet: seeding a variable needs max_order >= 1");
  Jet j(&detail::jet_table(config.num_vars, config.max_order));
  j.coeffs_[0] = value;
  std::array<std::uint8_t, kJetMaxVars> u{};
  u[var] = 1;
  j.coeffs_[j.table_->code_to_index[j.table_->code_of(u)]] = 1.0;
  return j;
}

JetConfig Jet::config() const {
  if (!table_) throw ConfigError("jet: uninitialized");
  return JetConfig{table_->num_vars, table_->max_order};
}

int Jet::num_vars() const { return table_ ? table_->num_vars : 0; }
int Jet::max_order() const { return table_ ? table_->max_order : 0; }

double Jet::partial(std::span<const int> multi_index) const {
  if (!table_) throw ConfigError("jet: uninitialized");
  std::array<std::uint8_t, kJetMaxVars> mi{};
  int total = 0;
  for (std::size_t k = 0; k < multi_index.size(); ++k) {
    int e = multi_index[k];
    if (e < 0) throw ConfigError("jet: negative exponent in multi-index");
    if (e != 0 && static_cast<int>(k) >= table_->num_vars)
      throw ConfigError("jet: multi-index touches variable beyond num_vars");
    if (e != 0) mi[k] = static_cast<std::uint8_t>(e);
    total += e;
  }
  if (total > table_->max_order)
    throw ConfigError("jet: requested order " + std::to_string(total) +
                      " exceeds max_order " + std::to_string(table_->max_order));
  return coeffs_[table_->code_to_index[table_->code_of(mi)]];
}

Jet Jet::derivative(int var) const {
  if (!table_) throw ConfigError("jet: uninitialized");
  if (var < 0 || var >= table_->num_vars)
    throw ConfigError("jet: derivative variable out of range");
  if (table_->max_order == 0)
    throw ConfigError("jet: cannot differentiate an order-0 jet");
  Jet out(table_->lower);
  const auto& src = table_->deriv_src[var];
  for (int j = 0; j < table_->lower->count; ++j) out.coeffs_[j] = coeffs_[src[j]];
  return out;
}

Jet Jet::truncated(int order) const {
  if (!table_) throw ConfigError("jet: uninitialized");
  if (order < 0 || order > table_->max_order)
    throw ConfigError("jet: truncation order out of range");
  const JetTable& target = detail::jet_table(table_->num_vars, order);
  Jet out(&target);
  // graded ordering makes the lower-order table a prefix of this one
  for (int j = 0; j < target.count; ++j) out.coeffs_[j] = coeffs_[j];
  return out;
}

namespace {

void require_same(const Jet& a, const Jet& b) {
  if (a.config() != b.config())
    throw ConfigError("jet: operands have different configs");
}

}  // namespace

Jet Jet::operator-() const {
  Jet out = *this;
  for (double& c : out.coeffs_) c = -c;
  return out;
}

Jet& Jet::operator+=(const Jet& rhs) {
  require_same(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  require_same(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet out = a;
  out += b;
  return out;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet out = a;
  out -= b;
  return out;
}

Jet operator*(const Jet& a, const Jet& b) {
  require_same(a, b);
  const JetTable* t = a.table_;
  Jet out(t);
  const auto& entries = t->mul_entries;
  const auto& offsets = t->mul_offsets;
  for (int g = 0; g < t->count; ++g) {
    double acc = 0.0;
    for (std::int32_t e = offsets[g]; e < offsets[g + 1]; ++e) {
      const auto& me = entries[e];
      acc += me.w * a.coeffs_[me.a] * b.coeffs_[me.b];
    }
    out.coeffs_[g] = acc;
  }
  return out;
}

Jet operator/(const Jet& a, const Jet& b) {
  require_same(a, b);
  if (b.value() == 0.0)
    throw SingularJetError("jet: division by jet with zero constant term");
  const JetTable* t = a.table_;
  Jet out(t);
  const double v0 = b.coeffs_[0];
  const auto& entries = t->mul_entries;
  const auto& offsets = t->mul_offsets;
  // graded order: every alpha < gamma is already solved when gamma is reached
  for (int g = 0; g < t->count; ++g) {
    double acc = a.coeffs_[g];
    for (std::int32_t e = offsets[g]; e < offsets[g + 1]; ++e) {
      const auto& me = entries[e];
      if (me.a == g) continue;  // the unknown term out[g] * b[0]
      acc -= me.w * out.coeffs_[me.a] * b.coeffs_[me.b];
    }
    out.coeffs_[g] = acc / v0;
  }
  return out;
}

Jet operator+(const Jet& a, double s) {
  Jet out = a;
  out.coeffs_[0] += s;
  return out;
}

Jet operator*(const Jet& a, double s) {
  Jet out = a;
  for (double& c : out.coeffs_) c *= s;
  return out;
}

Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }

Jet operator/(double s, const Jet& a) {
  return Jet::constant(a.config(), s) / a;
}

namespace {

// f(c0 + h) = sum_k series[k] h^k evaluated by Horner; h is the input with
// its constant term removed, so powers beyond max_order vanish exactly.
Jet compose_series(const Jet& a, std::span<const double> series) {
  Jet h = a;
  Jet out = Jet::constant(a.config(), 0.0);
  // zero the constant term of h
  h = h + (-a.value());
  const int d = a.max_order();
  out = out + series[d];
  for (int k = d - 1; k >= 0; --k) {
    out = out * h;
    out = out + series[k];
  }
  return out;
}

}  // namespace

Jet sqrt(const Jet& a) {
  const double c0 = a.value();
  if (!(c0 > 0.0))
    throw DomainError("jet: sqrt requires a strictly positive constant term");
  const int d = a.max_order();
  std::array<double, kJetMaxOrder + 1> series{};
  series[0] = std::sqrt(c0);
  for (int k = 1; k <= d; ++k)
    series[k] = series[k - 1] * (0.5 - (k - 1)) / (static_cast<double>(k) * c0);
  return compose_series(a, std::span<const double>(series.data(), d + 1));
}

Jet sin(const Jet& a) {
  const double c0 = a.value();
  const int d = a.max_order();
  std::array<double, kJetMaxOrder + 1> series{};
  const double table[4] = {std::sin(c0), std::cos(c0), -std::sin(c0), -std::cos(c0)};
  double factorial = 1.0;
  for (int k = 0; k <= d; ++k) {
    if (k > 0) factorial *= k;
    series[k] = table[k % 4] / factorial;
  }
  return compose_series(a, std::span<const double>(series.data(), d + 1));
}

Jet cos(const Jet& a) {
  const double c0 = a.value();
  const int d = a.max_order();
  std::array<double, kJetMaxOrder + 1> series{};
  const double table[4] = {std::cos(c0), -std::sin(c0), -std::cos(c0), std::sin(c0)};
  double factorial = 1.0;
  for (int k = 0; k <= d; ++k) {
    if (k > 0) factorial *= k;
    series[k] = table[k % 4] / factorial;
  }
  return compose_series(a, std::span<const double>(series.data(), d + 1));
}

std::vector<Jet> seed(std::span<const double> point, const JetConfig& config) {
  if (static_cast<int>(point.size()) != config.num_vars)
    throw ConfigError("jet: seed point has " + std::to_string(point.size()) +
                      " coordinates, config expects " + std::to_string(config.num_vars));
  if (config.max_order < 1 || config.max_order > kJetMaxOrder)
    throw ConfigError("jet: seed order must be in 1..4");
  std::vector<Jet> jets;
  jets.reserve(point.size());
  for (int i = 0; i < config.num_vars; ++i)
    jets.push_back(Jet::variable(config, i, point[i]));
  return jets;
}

std::vector<Jet> seed(std::span<const double> point, int order) {
  return seed(point, JetConfig{static_cast<int>(point.size()), order});
}

}  // namespace zermelo
