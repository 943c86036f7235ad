#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qmod/arith/error.hpp"
#include "qmod/arith/field.hpp"
#include "qmod/arith/polynomial.hpp"

namespace qmod {

/// Homogeneous form of declared degree d in (s, t); coefficient i multiplies
/// s^(d-i) t^i. The degree is part of the value even when the form is zero.
template <Field F>
class BinaryForm {
 public:
  using value_type = typename F::value_type;

  BinaryForm(F field, std::size_t degree)
      : field_(std::move(field)), coeffs_(degree + 1, field_.zero()) {}
  BinaryForm(F field, std::vector<value_type> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("binary form needs at least one coefficient");
  }

  static BinaryForm one(F field) { return BinaryForm(field, std::vector<value_type>{field.one()}); }
  /// s^(d-i) t^i
  static BinaryForm monomial(F field, std::size_t degree, std::size_t i) {
    BinaryForm f(field, degree);
    f.coeffs_.at(i) = f.field_.one();
    return f;
  }
  template <class Rng>
  static BinaryForm random(const F& field, std::size_t degree, Rng& rng) {
    std::vector<value_type> c;
    c.reserve(degree + 1);
    for (std::size_t i = 0; i <= degree; ++i) c.push_back(field.random(rng));
    return BinaryForm(field, std::move(c));
  }

  const F& field() const { return field_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<value_type>& coeffs() const { return coeffs_; }
  const value_type& coeff(std::size_t i) const { return coeffs_.at(i); }
  value_type& coeff(std::size_t i) { return coeffs_.at(i); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!field_.is_zero(c)) return false;
    return true;
  }

  value_type operator()(const value_type& s, const value_type& t) const {
    std::vector<value_type> s_powers(coeffs_.size(), field_.one());
    for (std::size_t i = 1; i < coeffs_.size(); ++i) s_powers[i] = s_powers[i - 1] * s;
    value_type acc = field_.zero();
    value_type t_pow = field_.one();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      acc = acc + coeffs_[i] * s_powers[degree() - i] * t_pow;
      t_pow = t_pow * t;
    }
    return acc;
  }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r(a.field_, a.degree() + b.degree());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.field_.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    a.require_same_degree(b);
    BinaryForm r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] + b.coeffs_[i];
    return r;
  }
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    a.require_same_degree(b);
    BinaryForm r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] - b.coeffs_[i];
    return r;
  }
  BinaryForm scaled(const value_type& c) const {
    BinaryForm r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
  }
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

  /// f(1, t) as a polynomial in t.
  Polynomial<F> dehomogenize() const { return Polynomial<F>(field_, coeffs_); }

 private:
  void require_same_degree(const BinaryForm& b) const {
    if (degree() != b.degree()) throw DomainError("binary forms of different degrees");
  }

  F field_;
  std::vector<value_type> coeffs_;
};

template <Field F>
BinaryForm<F> multiply_forms(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  return f * g;
}

/// Squarefree as a form on P^1: the affine part f(1, t) is squarefree and
/// the point (0:1) is at most a simple root.
template <Field F>
SquarefreeStatus squarefree_test(const BinaryForm<F>& f) {
  const auto affine = f.dehomogenize();
  if (affine.is_zero()) return SquarefreeStatus::identically_zero;
  const auto drop = static_cast<long>(f.degree()) - affine.degree();
  if (drop >= 2) return SquarefreeStatus::repeated_factor;
  return squarefree_test(affine);
}

}  // namespace qmod
