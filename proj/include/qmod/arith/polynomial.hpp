#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qmod/arith/error.hpp"
#include "qmod/arith/field.hpp"
#include "qmod/arith/matrix.hpp"

namespace qmod {

/// Univariate polynomial, coefficients from the constant term up, with no
/// trailing zeros (the zero polynomial has no coefficients).
template <Field F>
class Polynomial {
 public:
  using value_type = typename F::value_type;

  explicit Polynomial(F field) : field_(std::move(field)) {}
  Polynomial(F field, std::vector<value_type> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(F field, value_type c) { return Polynomial(field, {std::move(c)}); }
  /// x - root
  static Polynomial linear_root(F field, const value_type& root) {
    return Polynomial(field, {-root, field.one()});
  }
  static Polynomial monomial(F field, std::size_t degree, value_type c) {
    std::vector<value_type> v(degree + 1, field.zero());
    v[degree] = std::move(c);
    return Polynomial(field, std::move(v));
  }

  const F& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<value_type>& coeffs() const { return c_; }
  value_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  value_type leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  value_type operator()(const value_type& x) const {
    value_type acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<value_type> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return Polynomial(a.field_, std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  Polynomial operator-() const {
    std::vector<value_type> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return Polynomial(field_, std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<value_type> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(a.field_, std::move(r));
  }
  Polynomial scaled(const value_type& s) const {
    std::vector<value_type> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x * s);
    return Polynomial(field_, std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial derivative() const {
    std::vector<value_type> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i)));
    return Polynomial(field_, std::move(r));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
  }

  /// Quotient and remainder of division by a nonzero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<value_type> rem = c_;
    if (degree() < d.degree()) return {Polynomial(field_), *this};
    std::vector<value_type> quo(c_.size() - d.c_.size() + 1, field_.zero());
    const auto lead_inv = field_.inv(d.leading());
    for (std::size_t k = quo.size(); k-- > 0;) {
      const auto q = rem[k + d.c_.size() - 1] * lead_inv;
      quo[k] = q;
      if (field_.is_zero(q)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] = rem[k + j] - q * d.c_[j];
    }
    rem.resize(d.c_.size() - 1, field_.zero());
    return {Polynomial(field_, std::move(quo)), Polynomial(field_, std::move(rem))};
  }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divmod(b).first; }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<value_type> c_;
};

/// Monic gcd (zero if both inputs are zero).
template <Field F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

enum class SquarefreeStatus { squarefree, repeated_factor, identically_zero };

/// gcd(f, f') constant? Over F_p this is only meaningful when p > deg f.
template <Field F>
SquarefreeStatus squarefree_test(const Polynomial<F>& f) {
  if (f.is_zero()) return SquarefreeStatus::identically_zero;
  if (f.field().characteristic() != 0 &&
      static_cast<std::uint64_t>(f.degree()) >= f.field().characteristic()) {
    throw ConfigurationError("squarefree test needs characteristic above the degree");
  }
  return gcd(f, f.derivative()).degree() == 0 ? SquarefreeStatus::squarefree
                                               : SquarefreeStatus::repeated_factor;
}

/// Determinant of the Sylvester matrix of f and g read with the given formal
/// degrees (leading coefficients may vanish). Formal degrees must be at least
/// the actual ones.
template <Field F>
typename F::value_type sylvester_resultant(const Polynomial<F>& f, std::size_t deg_f,
                                           const Polynomial<F>& g, std::size_t deg_g) {
  if (f.degree() > static_cast<long>(deg_f) || g.degree() > static_cast<long>(deg_g)) {
    throw DomainError("formal degree below actual degree");
  }
  const F& field = f.field();
  const std::size_t n = deg_f + deg_g;
  if (n == 0) return field.one();
  DenseMatrix<F> s(field, n, n);
  // rows 0..deg_g-1: shifts of f; rows deg_g..n-1: shifts of g; highest power first
  for (std::size_t r = 0; r < deg_g; ++r)
    for (std::size_t i = 0; i <= deg_f; ++i) s(r, r + i) = f.coeff(deg_f - i);
  for (std::size_t r = 0; r < deg_f; ++r)
    for (std::size_t i = 0; i <= deg_g; ++i) s(deg_g + r, r + i) = g.coeff(deg_g - i);
  return determinant(std::move(s));
}

/// Resultant at the actual degrees; zero iff a common root exists in the
/// algebraic closure (or either input is zero).
template <Field F>
typename F::value_type resultant(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (f.is_zero() || g.is_zero()) return f.field().zero();
  return sylvester_resultant(f, static_cast<std::size_t>(f.degree()), g,
                             static_cast<std::size_t>(g.degree()));
}

/// Newton interpolation through (xs[i], ys[i]); xs distinct.
template <Field F>
Polynomial<F> interpolate(const F& field, const std::vector<typename F::value_type>& xs,
                          const std::vector<typename F::value_type>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolation: size mismatch");
  const std::size_t n = xs.size();
  std::vector<typename F::value_type> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const auto denom = xs[i] - xs[i - level];
      if (field.is_zero(denom)) throw DomainError("interpolation: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) * field.inv(denom);
      if (i == level) break;
    }
  Polynomial<F> result(field);
  for (std::size_t k = n; k-- > 0;) {
    result = result * Polynomial<F>(field, {-xs[k], field.one()}) + Polynomial<F>::constant(field, dd[k]);
  }
  return result;
}

/// base^e mod m, with e given as an unsigned 64-bit exponent.
template <Field F>
Polynomial<F> powmod(Polynomial<F> base, std::uint64_t e, const Polynomial<F>& m) {
  Polynomial<F> result = Polynomial<F>::constant(m.field(), m.field().one()) % m;
  base = base % m;
  while (e != 0) {
    if (e & 1) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return result;
}

namespace detail {

inline void split_roots(const Polynomial<PrimeField>& f, std::mt19937_64& rng, std::vector<Fp>& out) {
  const PrimeField& field = f.field();
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(-f.coeff(0) * field.inv(f.coeff(1)));
    return;
  }
  const std::uint64_t half = (field.modulus() - 1) / 2;
  for (;;) {
    const Polynomial<PrimeField> shift(field, {field.random(rng), field.one()});
    auto h = powmod(shift, half, f) - Polynomial<PrimeField>::constant(field, field.one());
    auto d = gcd(f, h);
    if (d.degree() > 0 && d.degree() < f.degree()) {
      split_roots(d, rng, out);
      split_roots((f / d).monic(), rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Distinct roots in F_p of a nonzero polynomial, sorted by residue.
inline std::vector<Fp> roots(const Polynomial<PrimeField>& f) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  const PrimeField& field = f.field();
  const Polynomial<PrimeField> x(field, {field.zero(), field.one()});
  const auto fm = f.monic();
  // product of the distinct linear factors: gcd(f, x^p - x)
  auto xp = powmod(x, field.modulus(), fm);
  auto linear_part = gcd(fm, xp - x);
  std::vector<Fp> out;
  std::mt19937_64 rng(0x5eed);
  detail::split_roots(linear_part, rng, out);
  std::sort(out.begin(), out.end(), [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
  return out;
}

/// Multiplicity of `root` as a root of nonzero f.
template <Field F>
std::size_t root_multiplicity(Polynomial<F> f, const typename F::value_type& root) {
  if (f.is_zero()) throw DomainError("multiplicity in the zero polynomial");
  const auto lin = Polynomial<F>::linear_root(f.field(), root);
  std::size_t m = 0;
  for (;;) {
    auto [q, r] = f.divmod(lin);
    if (!r.is_zero()) return m;
    f = std::move(q);
    ++m;
  }
}

}  // namespace qmod
