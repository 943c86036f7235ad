#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "qmod/arith/error.hpp"
#include "qmod/arith/field.hpp"
#include "qmod/arith/polynomial.hpp"

namespace qmod {

using Exponents = std::vector<int>;

/// Monomials of fixed degree in n variables, in graded-lex order
/// (x0^d first, then x0^(d-1) x1, x0^(d-1) x2, ...).
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars == 0 || degree < 0) throw DomainError("monomial basis needs >= 1 variable and degree >= 0");
    Exponents e(nvars, 0);
    fill(0, degree, e);
    for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], i);
  }

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monos_.size(); }
  const Exponents& operator[](std::size_t i) const { return monos_[i]; }
  const std::vector<Exponents>& monomials() const { return monos_; }
  std::size_t index_of(const Exponents& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw DomainError("exponent vector not in monomial basis");
    return it->second;
  }

 private:
  void fill(std::size_t var, int remaining, Exponents& e) {
    if (var + 1 == nvars_) {
      e[var] = remaining;
      monos_.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[var] = k;
      fill(var + 1, remaining - k, e);
    }
    e[var] = 0;
  }

  std::size_t nvars_;
  int degree_;
  std::vector<Exponents> monos_;
  std::map<Exponents, std::size_t> index_;
};

/// Value of a monomial at a point.
template <class T>
T evaluate_monomial(const Exponents& e, std::span<const T> point, const T& one) {
  T acc = one;
  for (std::size_t v = 0; v < e.size(); ++v)
    for (int k = 0; k < e[v]; ++k) acc = acc * point[v];
  return acc;
}

/// Homogeneous polynomial, coefficients indexed by a shared MonomialBasis.
template <Field F>
class Form {
 public:
  using value_type = typename F::value_type;

  Form(F field, std::shared_ptr<const MonomialBasis> basis)
      : field_(std::move(field)), basis_(std::move(basis)), c_(basis_->size(), field_.zero()) {}
  Form(F field, std::shared_ptr<const MonomialBasis> basis, std::vector<value_type> coeffs)
      : field_(std::move(field)), basis_(std::move(basis)), c_(std::move(coeffs)) {
    if (c_.size() != basis_->size()) throw DomainError("form coefficient count mismatch");
  }

  const F& field() const { return field_; }
  const MonomialBasis& basis() const { return *basis_; }
  const std::shared_ptr<const MonomialBasis>& basis_ptr() const { return basis_; }
  int degree() const { return basis_->degree(); }
  const std::vector<value_type>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!field_.is_zero(c)) return false;
    return true;
  }

  value_type operator()(std::span<const value_type> point) const {
    if (point.size() != basis_->nvars()) throw DomainError("point dimension mismatch");
    value_type acc = field_.zero();
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (field_.is_zero(c_[i])) continue;
      acc = acc + c_[i] * evaluate_monomial<value_type>((*basis_)[i], point, field_.one());
    }
    return acc;
  }

  /// Product into the degree-(a+b) basis `target`.
  Form times(const Form& other, std::shared_ptr<const MonomialBasis> target) const {
    if (target->degree() != degree() + other.degree() || target->nvars() != basis_->nvars()) {
      throw DomainError("product basis has wrong degree");
    }
    Form r(field_, target);
    Exponents e(basis_->nvars());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (field_.is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < other.c_.size(); ++j) {
        if (field_.is_zero(other.c_[j])) continue;
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = (*basis_)[i][v] + other.basis()[j][v];
        auto& slot = r.c_[target->index_of(e)];
        slot = slot + c_[i] * other.c_[j];
      }
    }
    return r;
  }

 private:
  F field_;
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<value_type> c_;
};

/// Dense bivariate polynomial sum c[i][j] x^i y^j.
template <Field F>
class Bivariate {
 public:
  using value_type = typename F::value_type;

  Bivariate(F field, std::size_t deg_x, std::size_t deg_y)
      : field_(std::move(field)), dx_(deg_x), dy_(deg_y), c_((deg_x + 1) * (deg_y + 1), field_.zero()) {}

  /// f(x, y, 1) for a ternary form f in (x, y, z).
  static Bivariate dehomogenize(const Form<F>& f) {
    if (f.basis().nvars() != 3) throw DomainError("dehomogenize expects a ternary form");
    const auto d = static_cast<std::size_t>(f.degree());
    Bivariate b(f.field(), d, d);
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
      const auto& e = f.basis()[k];
      b.at(e[0], e[1]) = b.at(e[0], e[1]) + f.coeffs()[k];
    }
    return b;
  }

  const F& field() const { return field_; }
  std::size_t degree_x() const { return dx_; }
  std::size_t degree_y() const { return dy_; }
  value_type& at(std::size_t i, std::size_t j) { return c_[i * (dy_ + 1) + j]; }
  const value_type& at(std::size_t i, std::size_t j) const { return c_[i * (dy_ + 1) + j]; }

  value_type operator()(const value_type& x, const value_type& y) const { return in_y_at(x)(y); }

  /// y -> f(x0, y)
  Polynomial<F> in_y_at(const value_type& x0) const {
    std::vector<value_type> out(dy_ + 1, field_.zero());
    value_type xp = field_.one();
    for (std::size_t i = 0; i <= dx_; ++i) {
      for (std::size_t j = 0; j <= dy_; ++j) out[j] = out[j] + at(i, j) * xp;
      xp = xp * x0;
    }
    return Polynomial<F>(field_, std::move(out));
  }

  Bivariate swapped() const {
    Bivariate s(field_, dy_, dx_);
    for (std::size_t i = 0; i <= dx_; ++i)
      for (std::size_t j = 0; j <= dy_; ++j) s.at(j, i) = at(i, j);
    return s;
  }

  Bivariate partial_x() const {
    Bivariate d(field_, dx_ == 0 ? 0 : dx_ - 1, dy_);
    for (std::size_t i = 1; i <= dx_; ++i)
      for (std::size_t j = 0; j <= dy_; ++j) d.at(i - 1, j) = at(i, j) * field_.from_int(static_cast<std::int64_t>(i));
    return d;
  }
  Bivariate partial_y() const { return swapped().partial_x().swapped(); }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!field_.is_zero(c)) return false;
    return true;
  }

  /// Same polynomial with formal degrees lowered to the actual ones.
  Bivariate trimmed() const {
    std::size_t mx = 0;
    std::size_t my = 0;
    for (std::size_t i = 0; i <= dx_; ++i)
      for (std::size_t j = 0; j <= dy_; ++j)
        if (!field_.is_zero(at(i, j))) {
          mx = std::max(mx, i);
          my = std::max(my, j);
        }
    Bivariate t(field_, mx, my);
    for (std::size_t i = 0; i <= mx; ++i)
      for (std::size_t j = 0; j <= my; ++j) t.at(i, j) = at(i, j);
    return t;
  }

 private:
  F field_;
  std::size_t dx_;
  std::size_t dy_;
  std::vector<value_type> c_;
};

/// Res_y(a, b) as a polynomial in x, using the formal y-degrees of a and b.
/// Computed by evaluating the Sylvester determinant at `x_degree_bound + 1`
/// nodes 0, 1, 2, ... and interpolating; exact when the bound is valid
/// (total degrees da, db give the bound da * db).
template <Field F>
Polynomial<F> resultant_in_y(const Bivariate<F>& a, const Bivariate<F>& b, std::size_t x_degree_bound) {
  const F& field = a.field();
  if (field.characteristic() != 0 && x_degree_bound + 1 >= field.characteristic()) {
    throw ConfigurationError("too few field elements for resultant interpolation");
  }
  std::vector<typename F::value_type> xs;
  std::vector<typename F::value_type> ys;
  for (std::size_t k = 0; k <= x_degree_bound; ++k) {
    const auto x0 = field.from_int(static_cast<std::int64_t>(k));
    xs.push_back(x0);
    ys.push_back(sylvester_resultant(a.in_y_at(x0), a.degree_y(), b.in_y_at(x0), b.degree_y()));
  }
  return interpolate(field, xs, ys);
}

/// The unique polynomial of degree <= dx in x and <= dy in y agreeing with
/// f on the grid {0..dx} x {0..dy}.
template <Field F, class Fn>
Bivariate<F> interpolate_grid(const F& field, std::size_t dx, std::size_t dy, Fn&& f) {
  if (field.characteristic() != 0 && std::max(dx, dy) >= field.characteristic()) {
    throw ConfigurationError("too few field elements for grid interpolation");
  }
  using V = typename F::value_type;
  std::vector<V> xs;
  std::vector<V> ys;
  for (std::size_t i = 0; i <= dx; ++i) xs.push_back(field.from_int(static_cast<std::int64_t>(i)));
  for (std::size_t j = 0; j <= dy; ++j) ys.push_back(field.from_int(static_cast<std::int64_t>(j)));
  // rows[i] = coefficients in y of f(x_i, y)
  std::vector<Polynomial<F>> rows;
  for (std::size_t i = 0; i <= dx; ++i) {
    std::vector<V> vals;
    for (std::size_t j = 0; j <= dy; ++j) vals.push_back(f(xs[i], ys[j]));
    rows.push_back(interpolate(field, ys, vals));
  }
  Bivariate<F> out(field, dx, dy);
  for (std::size_t j = 0; j <= dy; ++j) {
    std::vector<V> vals;
    for (std::size_t i = 0; i <= dx; ++i) vals.push_back(rows[i].coeff(j));
    const auto col = interpolate(field, xs, vals);
    for (std::size_t i = 0; i <= dx; ++i) out.at(i, j) = col.coeff(i);
  }
  return out;
}

}  // namespace qmod
