#include "coxdepth/counting.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

#include "coxdepth/stats.hpp"

namespace coxdepth {

namespace {

// Exact arithmetic in Q(sqrt 5): values x + y sqrt(5) with rational x, y.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }
  bool is_zero() const { return num == 0; }
};

struct QuadraticValue {  // x + y sqrt(5)
  Rational x, y;

  friend QuadraticValue operator+(const QuadraticValue& a, const QuadraticValue& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend QuadraticValue operator-(const QuadraticValue& a, const QuadraticValue& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend QuadraticValue operator*(const QuadraticValue& a, const QuadraticValue& b) {
    return {a.x * b.x + Rational(5) * a.y * b.y, a.x * b.y + a.y * b.x};
  }
  friend QuadraticValue operator/(const QuadraticValue& a, const QuadraticValue& b) {
    // multiply by the conjugate of b
    Rational norm = b.x * b.x - Rational(5) * b.y * b.y;
    QuadraticValue numer{a.x * b.x - Rational(5) * a.y * b.y, a.y * b.x - a.x * b.y};
    return {numer.x / norm, numer.y / norm};
  }
  QuadraticValue pow(int e) const {
    QuadraticValue result{Rational(1), Rational(0)};
    for (int k = 0; k < e; ++k) result = result * *this;
    return result;
  }
};

}  // namespace

std::uint64_t CountTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, count] : counts) sum += count;
  return sum;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return result;
}

std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

std::uint64_t fibonacci(int m) {
  if (m < 1) throw std::invalid_argument("Fibonacci index starts at 1");
  std::uint64_t a = 1, b = 1;  // F_1, F_2
  for (int i = 3; i <= m; ++i) {
    std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return m == 1 ? 1 : b;
}

CountTable depth_distribution(const GroupContext& ctx) {
  CountTable table{ctx.family, ctx.rank, "depth", "enumerated", {}};
  for_each_element(ctx, [&](const SignedPermutation& w) { ++table.counts[depth(w, ctx).total]; });
  return table;
}

std::uint64_t count_depth_eq_length(const GroupContext& ctx) {
  std::uint64_t count = 0;
  for_each_element(ctx, [&](const SignedPermutation& w) {
    if (depth(w, ctx).total == length(w, ctx).total) ++count;
  });
  return count;
}

std::uint64_t closed_form_depth_eq_length(const GroupContext& ctx) {
  switch (ctx.family) {
    case Family::A:
      throw std::domain_error("no closed form for family A; enumerate instead");
    case Family::B:
      return catalan(ctx.rank + 1);
    case Family::D: {
      if (ctx.rank < 2)
        throw std::domain_error("the type D count (n+3)C_n/2 - 1 is stated for n >= 2");
      return static_cast<std::uint64_t>(ctx.rank + 3) * catalan(ctx.rank) / 2 - 1;
    }
  }
  throw std::logic_error("bad family");
}

std::uint64_t count_boolean(const CayleyGraph& graph) {
  const GroupContext& ctx = graph.context();
  std::uint64_t count = 0;
  for (std::size_t k = 0; k < graph.order(); ++k) {
    const SignedPermutation& w = graph.element(k);
    int ls = length(w, ctx).total;
    if (graph.reflection_length_table()[k] == ls && depth(w, ctx).total == ls) ++count;
  }
  return count;
}

std::uint64_t count_boolean(const GroupContext& ctx) { return count_boolean(CayleyGraph(ctx)); }

std::uint64_t closed_form_boolean(const GroupContext& ctx) {
  switch (ctx.family) {
    case Family::A:
      throw std::domain_error("no closed form for family A; enumerate instead");
    case Family::B:
      return fibonacci(2 * ctx.rank + 1);
    case Family::D: {
      if (ctx.rank < 4) throw std::domain_error("the type D closed form is stated for n >= 4");
      const QuadraticValue a{Rational(3, 2), Rational(1, 2)};
      const QuadraticValue b{Rational(3, 2), Rational(-1, 2)};
      const QuadraticValue thirteen{Rational(13), Rational(0)};
      const QuadraticValue four{Rational(4), Rational(0)};
      QuadraticValue ca = (thirteen - four * b) / (a * a * (a - b));
      QuadraticValue cb = (thirteen - four * a) / (b * b * (b - a));
      QuadraticValue value = ca * a.pow(ctx.rank) + cb * b.pow(ctx.rank);
      if (!value.y.is_zero() || value.x.den != 1 || value.x.num < 0)
        throw std::logic_error("type D boolean count did not evaluate to an integer");
      return static_cast<std::uint64_t>(value.x.num);
    }
  }
  throw std::logic_error("bad family");
}

std::uint64_t count_boolean_by_length(const CayleyGraph& graph, int k) {
  const GroupContext& ctx = graph.context();
  std::uint64_t count = 0;
  for (std::size_t idx = 0; idx < graph.order(); ++idx) {
    const SignedPermutation& w = graph.element(idx);
    int ls = length(w, ctx).total;
    if (ls == k && graph.reflection_length_table()[idx] == ls && depth(w, ctx).total == ls) ++count;
  }
  return count;
}

std::uint64_t count_boolean_by_length(const GroupContext& ctx, int k) {
  return count_boolean_by_length(CayleyGraph(ctx), k);
}

namespace {

// L(n,k) from the type D by-length formula; the B formula is L(n+1,k).
std::uint64_t boolean_length_sum(int n, int k) {
  if (k < 0 || n < 0) return 0;
  if (k == 0) return 1;
  std::uint64_t sum = 0;
  for (int i = 1; i <= k; ++i) sum += binomial(n - i, k + 1 - i) * binomial(k - 1, i - 1);
  return sum;
}

}  // namespace

std::uint64_t closed_form_boolean_by_length(const GroupContext& ctx, int k) {
  const int n = ctx.rank;
  switch (ctx.family) {
    case Family::A:
      throw std::domain_error("no closed form for family A; enumerate instead");
    case Family::B:
      return boolean_length_sum(n + 1, k);
    case Family::D: {
      if (n == 1) return k == 0 ? 1 : 0;  // L^D(1,0) = 1, L^D(1,1) = 0
      std::uint64_t plus = boolean_length_sum(n, k) + 2 * boolean_length_sum(n, k - 1);
      std::uint64_t minus = boolean_length_sum(n - 2, k - 1) + boolean_length_sum(n - 2, k - 2);
      if (plus < minus) throw std::logic_error("negative boolean count");
      return plus - minus;
    }
  }
  throw std::logic_error("bad family");
}

CountTable boolean_length_table(const GroupContext& ctx) {
  CountTable table{ctx.family, ctx.rank, "boolean_by_length", "enumerated", {}};
  CayleyGraph graph(ctx);
  for (std::size_t idx = 0; idx < graph.order(); ++idx) {
    const SignedPermutation& w = graph.element(idx);
    int ls = length(w, ctx).total;
    if (graph.reflection_length_table()[idx] == ls && depth(w, ctx).total == ls)
      ++table.counts[ls];
  }
  return table;
}

std::vector<SignedPermutation> shallow_elements(const CayleyGraph& graph) {
  const GroupContext& ctx = graph.context();
  std::vector<SignedPermutation> out;
  for (std::size_t idx = 0; idx < graph.order(); ++idx) {
    const SignedPermutation& w = graph.element(idx);
    if (2 * depth(w, ctx).total == graph.reflection_length_table()[idx] + length(w, ctx).total)
      out.push_back(w);
  }
  return out;
}

std::vector<SignedPermutation> shallow_elements(const GroupContext& ctx) {
  return shallow_elements(CayleyGraph(ctx));
}

void write_csv(const std::vector<CountTable>& tables, std::ostream& out) {
  out << "family,n,statistic,key,count,source\n";
  for (const CountTable& table : tables)
    for (const auto& [key, count] : table.counts)
      out << family_letter(table.family) << ',' << table.rank << ',' << table.statistic << ','
          << key << ',' << count << ',' << table.source << '\n';
}

}  // namespace coxdepth
