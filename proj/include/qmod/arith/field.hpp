#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "qmod/arith/prime_field.hpp"
#include "qmod/arith/rational.hpp"

namespace qmod {

/// A field descriptor: builds constants and recognizes its own elements.
/// Elements themselves carry the usual arithmetic operators.
template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, std::int64_t n) {
  typename F::value_type;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.contains(a) } -> std::convertible_to<bool>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { a + a } -> std::convertible_to<typename F::value_type>;
  { a - a } -> std::convertible_to<typename F::value_type>;
  { a * a } -> std::convertible_to<typename F::value_type>;
  { -a } -> std::convertible_to<typename F::value_type>;
};

static_assert(Field<RationalField>);
static_assert(Field<PrimeField>);

/// a + b*eps with eps^2 = 0; used to take exact first derivatives of
/// polynomial maps by forward evaluation.
template <class T>
struct Dual {
  T re;
  T eps;

  friend Dual operator+(const Dual& a, const Dual& b) { return {a.re + b.re, a.eps + b.eps}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.re - b.re, a.eps - b.eps}; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.re * b.re, a.re * b.eps + a.eps * b.re};
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    const T inv = T(b.re).inv();
    return {a.re * inv, (a.eps * b.re - a.re * b.eps) * inv * inv};
  }
  Dual operator-() const { return {-re, -eps}; }
  Dual& operator+=(const Dual& b) { return *this = *this + b; }
  Dual& operator-=(const Dual& b) { return *this = *this - b; }
  Dual& operator*=(const Dual& b) { return *this = *this * b; }
  friend bool operator==(const Dual& a, const Dual& b) { return a.re == b.re && a.eps == b.eps; }
};

/// Dual numbers over a prime field. Not a field (eps is nilpotent); inversion
/// is only defined for units, which is all the quadric constructions need.
class DualPrimeField {
 public:
  using value_type = Dual<Fp>;
  explicit DualPrimeField(PrimeField base) : base_(base) {}

  const PrimeField& base() const { return base_; }
  value_type zero() const { return {base_.zero(), base_.zero()}; }
  value_type one() const { return {base_.one(), base_.zero()}; }
  value_type from_int(std::int64_t n) const { return {base_.from_int(n), base_.zero()}; }
  value_type constant(const Fp& a) const { return {a, base_.zero()}; }
  value_type variable(const Fp& a) const { return {a, base_.one()}; }
  bool is_zero(const value_type& a) const { return base_.is_zero(a.re) && base_.is_zero(a.eps); }
  bool contains(const value_type& a) const { return base_.contains(a.re) && base_.contains(a.eps); }
  value_type inv(const value_type& a) const { return one() / a; }
  std::uint64_t characteristic() const { return base_.characteristic(); }
  bool operator==(const DualPrimeField&) const = default;

 private:
  PrimeField base_;
};

static_assert(Field<DualPrimeField>);

}  // namespace qmod
