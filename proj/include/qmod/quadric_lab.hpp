#pragma once

// Quadrics through parametrized rational curves, rank-bounded quadrics built
// from pencil decompositions, and random models of canonical curves of genus
// 4 and 5.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmod/arith/binary_form.hpp"
#include "qmod/arith/error.hpp"
#include "qmod/arith/field.hpp"
#include "qmod/arith/forms.hpp"
#include "qmod/arith/matrix.hpp"
#include "qmod/arith/polynomial.hpp"
#include "qmod/arith/random.hpp"

namespace qmod::quad {

/// A map P^1 -> P^r given by r+1 binary forms of a common degree d with no
/// common zero.
template <Field F>
class ParamCurve {
 public:
  using value_type = typename F::value_type;

  ParamCurve(F field, std::vector<BinaryForm<F>> components)
      : field_(std::move(field)), comps_(std::move(components)) {
    if (comps_.size() < 2) throw DomainError("a curve in P^r needs r+1 >= 2 components");
    const std::size_t d = comps_.front().degree();
    for (const auto& c : comps_)
      if (c.degree() != d) throw DomainError("curve components must share one degree");
    // base point at (0:1): every top coefficient vanishes
    bool at_infinity = true;
    for (const auto& c : comps_) at_infinity = at_infinity && field_.is_zero(c.coeff(d));
    auto common = comps_.front().dehomogenize();
    for (const auto& c : comps_) common = gcd(common, c.dehomogenize());
    if (at_infinity || common.degree() != 0) throw DomainError("curve components have a common zero");
  }

  /// (s^r, s^(r-1) t, ..., t^r)
  static ParamCurve rational_normal(const F& field, std::size_t r) {
    std::vector<BinaryForm<F>> c;
    for (std::size_t i = 0; i <= r; ++i) c.push_back(BinaryForm<F>::monomial(field, r, i));
    return ParamCurve(field, std::move(c));
  }

  const F& field() const { return field_; }
  std::size_t r() const { return comps_.size() - 1; }
  std::size_t degree() const { return comps_.front().degree(); }
  const std::vector<BinaryForm<F>>& components() const { return comps_; }

  std::vector<value_type> point(const value_type& s, const value_type& t) const {
    std::vector<value_type> out;
    for (const auto& c : comps_) out.push_back(c(s, t));
    return out;
  }
  std::vector<value_type> point(const value_type& t) const { return point(field_.one(), t); }

  bool is_rational_normal() const {
    if (degree() != r()) return false;
    for (std::size_t i = 0; i <= r(); ++i)
      if (!(comps_[i] == BinaryForm<F>::monomial(field_, r(), i))) return false;
    return true;
  }

 private:
  F field_;
  std::vector<BinaryForm<F>> comps_;
};

/// Quadric x^T Q x with Q symmetric.
template <Field F>
class SymQuadric {
 public:
  using value_type = typename F::value_type;

  explicit SymQuadric(DenseMatrix<F> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DomainError("quadric matrix must be square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = i + 1; j < m_.cols(); ++j)
        if (!(m_(i, j) == m_(j, i))) throw DomainError("quadric matrix must be symmetric");
  }

  static SymQuadric zero(const F& field, std::size_t size) { return SymQuadric(DenseMatrix<F>(field, size, size)); }

  /// Symmetric matrix of the product of linear forms a.x and b.x.
  static SymQuadric product(const F& field, const std::vector<value_type>& a, const std::vector<value_type>& b) {
    if (a.size() != b.size()) throw DomainError("linear forms of different lengths");
    const auto half = field.inv(field.from_int(2));
    DenseMatrix<F> m(field, a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = (a[i] * b[j] + a[j] * b[i]) * half;
    return SymQuadric(std::move(m));
  }

  /// From coefficients of the monomials x_i x_j, i <= j, in the order of quadric_monomials.
  static SymQuadric from_monomial_coeffs(const F& field, std::size_t size, const std::vector<value_type>& c) {
    if (c.size() != size * (size + 1) / 2) throw DomainError("wrong number of quadric coefficients");
    const auto half = field.inv(field.from_int(2));
    DenseMatrix<F> m(field, size, size);
    std::size_t k = 0;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i; j < size; ++j, ++k) {
        if (i == j) {
          m(i, i) = c[k];
        } else {
          m(i, j) = c[k] * half;
          m(j, i) = m(i, j);
        }
      }
    return SymQuadric(std::move(m));
  }

  const F& field() const { return m_.field(); }
  std::size_t size() const { return m_.rows(); }
  const DenseMatrix<F>& matrix() const { return m_; }
  std::size_t rank() const { return qmod::rank(m_); }
  bool is_zero() const {
    for (const auto& v : m_.entries())
      if (!field().is_zero(v)) return false;
    return true;
  }

  /// Coefficients of x_i x_j, i <= j (off-diagonal entries doubled).
  std::vector<value_type> monomial_coeffs() const {
    std::vector<value_type> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i; j < size(); ++j) out.push_back(i == j ? m_(i, i) : m_(i, j) + m_(i, j));
    return out;
  }

  value_type operator()(const std::vector<value_type>& x) const {
    if (x.size() != size()) throw DomainError("point dimension mismatch");
    value_type acc = field().zero();
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) acc = acc + x[i] * m_(i, j) * x[j];
    return acc;
  }

  friend SymQuadric operator+(const SymQuadric& a, const SymQuadric& b) {
    return SymQuadric(elementwise(a, b, [](const value_type& x, const value_type& y) { return x + y; }));
  }
  friend SymQuadric operator-(const SymQuadric& a, const SymQuadric& b) {
    return SymQuadric(elementwise(a, b, [](const value_type& x, const value_type& y) { return x - y; }));
  }
  SymQuadric scaled(const value_type& c) const {
    DenseMatrix<F> m = m_;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) m(i, j) = m(i, j) * c;
    return SymQuadric(std::move(m));
  }
  friend bool operator==(const SymQuadric& a, const SymQuadric& b) { return a.m_ == b.m_; }

 private:
  template <class Op>
  static DenseMatrix<F> elementwise(const SymQuadric& a, const SymQuadric& b, Op op) {
    if (a.size() != b.size()) throw DomainError("quadrics of different sizes");
    DenseMatrix<F> m = a.m_;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = op(a.m_(i, j), b.m_(i, j));
    return m;
  }

  DenseMatrix<F> m_;
};

/// Linearly independent quadrics in P^r.
template <Field F>
class QuadricSystem {
 public:
  using value_type = typename F::value_type;

  QuadricSystem(F field, std::size_t r, std::vector<SymQuadric<F>> basis)
      : field_(std::move(field)), r_(r), basis_(std::move(basis)) {
    for (const auto& q : basis_)
      if (q.size() != r_ + 1) throw DomainError("quadric size does not match ambient P^r");
    if (qmod::rank(coefficient_matrix()) != basis_.size()) throw DomainError("quadric basis is linearly dependent");
  }

  const F& field() const { return field_; }
  std::size_t r() const { return r_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<SymQuadric<F>>& basis() const { return basis_; }

  /// One row of monomial coefficients per basis quadric.
  DenseMatrix<F> coefficient_matrix() const {
    const std::size_t n = (r_ + 1) * (r_ + 2) / 2;
    DenseMatrix<F> m(field_, basis_.size(), n);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const auto c = basis_[k].monomial_coeffs();
      for (std::size_t j = 0; j < n; ++j) m(k, j) = c[j];
    }
    return m;
  }

  bool contains(const SymQuadric<F>& q) const {
    if (q.size() != r_ + 1) throw DomainError("quadric size does not match ambient P^r");
    auto m = coefficient_matrix();
    DenseMatrix<F> ext(field_, m.rows() + 1, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) ext(i, j) = m(i, j);
    const auto c = q.monomial_coeffs();
    for (std::size_t j = 0; j < m.cols(); ++j) ext(m.rows(), j) = c[j];
    return qmod::rank(ext) == basis_.size();
  }

 private:
  F field_;
  std::size_t r_;
  std::vector<SymQuadric<F>> basis_;
};

/// Rows t = 0..2d: the values of every quadric monomial x_i x_j (i <= j) at c(1, t).
template <Field F>
DenseMatrix<F> quadric_evaluation_matrix(const ParamCurve<F>& c) {
  const std::size_t npts = 2 * c.degree() + 1;
  const std::size_t n = c.r() + 1;
  DenseMatrix<F> m(c.field(), npts, n * (n + 1) / 2);
  for (std::size_t t = 0; t < npts; ++t) {
    const auto x = c.point(c.field().from_int(static_cast<std::int64_t>(t)));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(t, k++) = x[i] * x[j];
  }
  return m;
}

/// I_2 of the curve. Exact: a quadric restricts to a degree-2d binary form,
/// which vanishes once it vanishes at the 2d+1 points t = 0..2d.
template <Field F>
QuadricSystem<F> i2_basis(const ParamCurve<F>& c) {
  if (c.r() < 3) throw DomainError("i2_basis needs a curve in P^r with r >= 3");
  const auto ch = c.field().characteristic();
  if (ch != 0 && ch <= 2 * c.degree()) {
    throw ConfigurationError("field too small: need p > 2d = " + std::to_string(2 * c.degree()));
  }
  std::vector<SymQuadric<F>> basis;
  for (const auto& v : kernel_basis(quadric_evaluation_matrix(c))) {
    basis.push_back(SymQuadric<F>::from_monomial_coeffs(c.field(), c.r() + 1, v));
  }
  return QuadricSystem<F>(c.field(), c.r(), std::move(basis));
}

/// True iff the quadric vanishes identically on the curve (exact, 2d+1 evaluations).
template <Field F>
bool vanishes_on(const SymQuadric<F>& q, const ParamCurve<F>& c) {
  if (q.size() != c.r() + 1) throw DomainError("quadric size does not match curve ambient space");
  for (std::size_t t = 0; t <= 2 * c.degree(); ++t)
    if (!c.field().is_zero(q(c.point(c.field().from_int(static_cast<std::int64_t>(t)))))) return false;
  return true;
}

/// Pencils on P^1 and a fixed divisor: rank 3 uses <f, g> and h with
/// 2m + x = d; rank 4 adds a second pencil <u, v> with m + m' + x = d.
template <Field F>
struct PencilDecomposition {
  BinaryForm<F> f;
  BinaryForm<F> g;
  std::optional<BinaryForm<F>> u;
  std::optional<BinaryForm<F>> v;
  BinaryForm<F> h;

  bool is_rank4() const { return u.has_value(); }

  void validate(std::size_t d) const {
    if (f.degree() != g.degree()) throw DomainError("f and g must have equal degree");
    if (u.has_value() != v.has_value()) throw DomainError("u and v must be given together");
    if (is_rank4()) {
      if (u->degree() != v->degree()) throw DomainError("u and v must have equal degree");
      if (f.degree() + u->degree() + h.degree() != d) throw DomainError("need deg f + deg u + deg h = d");
    } else if (2 * f.degree() + h.degree() != d) {
      throw DomainError("need 2 deg f + deg h = d");
    }
  }
};

/// Linear form on P^d whose pullback along the rational normal curve is `form`.
template <Field F>
std::vector<typename F::value_type> linear_form(const BinaryForm<F>& form) {
  return form.coeffs();
}

/// l(f^2 h) l(g^2 h) - l(fgh)^2; rank <= 3, vanishes on the rational normal curve.
template <Field F>
SymQuadric<F> rank3_quadric(const F& field, const BinaryForm<F>& f, const BinaryForm<F>& g, const BinaryForm<F>& h) {
  const auto a = linear_form(f * f * h);
  const auto b = linear_form(g * g * h);
  const auto c = linear_form(f * g * h);
  return SymQuadric<F>::product(field, a, b) - SymQuadric<F>::product(field, c, c);
}

/// l(fuh) l(gvh) - l(fvh) l(guh); rank <= 4, vanishes on the rational normal curve.
template <Field F>
SymQuadric<F> rank4_quadric(const F& field, const BinaryForm<F>& f, const BinaryForm<F>& g, const BinaryForm<F>& u,
                            const BinaryForm<F>& v, const BinaryForm<F>& h) {
  return SymQuadric<F>::product(field, linear_form(f * u * h), linear_form(g * v * h)) -
         SymQuadric<F>::product(field, linear_form(f * v * h), linear_form(g * u * h));
}

template <Field F>
SymQuadric<F> rank3_from_decomposition(const PencilDecomposition<F>& pd, const ParamCurve<F>& c) {
  if (!c.is_rational_normal()) throw DomainError("decompositions are read on the rational normal curve");
  if (pd.is_rank4()) throw DomainError("rank-3 construction takes no second pencil");
  pd.validate(c.degree());
  return rank3_quadric(c.field(), pd.f, pd.g, pd.h);
}

template <Field F>
SymQuadric<F> rank4_from_decomposition(const PencilDecomposition<F>& pd, const ParamCurve<F>& c) {
  if (!c.is_rational_normal()) throw DomainError("decompositions are read on the rational normal curve");
  if (!pd.is_rank4()) throw DomainError("rank-4 construction needs a second pencil");
  pd.validate(c.degree());
  return rank4_quadric(c.field(), pd.f, pd.g, *pd.u, *pd.v, pd.h);
}

/// Degrees of the pieces of a decomposition: deg f = deg g = m, deg u = deg v = m_prime
/// (0 and unused for rank 3), deg h = x.
struct Stratum {
  int m;
  int m_prime;
  int x;
  auto operator<=>(const Stratum&) const = default;
};

inline Stratum rank3_stratum(int r, int x) {
  if (x < 0 || x > r || (r - x) % 2 != 0 || (r - x) / 2 < 1) {
    throw DomainError("no rank-3 stratum with r = " + std::to_string(r) + ", x = " + std::to_string(x));
  }
  return {(r - x) / 2, 0, x};
}

inline Stratum rank4_stratum(int r, int m, int m_prime) {
  const int x = r - m - m_prime;
  if (m < 1 || m_prime < 1 || x < 0) {
    throw DomainError("no rank-4 stratum with r = " + std::to_string(r) + ", m = " + std::to_string(m) +
                      ", m' = " + std::to_string(m_prime));
  }
  return {m, m_prime, x};
}

/// All strata for rank k in P^r, with m <= m' for rank 4 (the roles are symmetric).
inline std::vector<Stratum> strata(int r, int k) {
  std::vector<Stratum> out;
  if (k == 3) {
    for (int x = r % 2; x <= r - 2; x += 2) out.push_back(rank3_stratum(r, x));
  } else if (k == 4) {
    for (int m = 1; 2 * m <= r; ++m)
      for (int mp = m; m + mp <= r; ++mp) out.push_back(rank4_stratum(r, m, mp));
  } else {
    throw DomainError("family strata exist for k = 3 or 4");
  }
  return out;
}

namespace detail {

template <Field F>
BinaryForm<F> slice_form(const F& field, const std::vector<typename F::value_type>& params, std::size_t& pos,
                         int degree) {
  std::vector<typename F::value_type> c(params.begin() + static_cast<std::ptrdiff_t>(pos),
                                        params.begin() + static_cast<std::ptrdiff_t>(pos + degree + 1));
  pos += static_cast<std::size_t>(degree) + 1;
  return BinaryForm<F>(field, std::move(c));
}

template <Field F>
SymQuadric<F> family_member(const F& field, int k, const Stratum& s, const std::vector<typename F::value_type>& p) {
  std::size_t pos = 0;
  const auto f = slice_form(field, p, pos, s.m);
  const auto g = slice_form(field, p, pos, s.m);
  if (k == 3) {
    const auto h = slice_form(field, p, pos, s.x);
    return rank3_quadric(field, f, g, h);
  }
  const auto u = slice_form(field, p, pos, s.m_prime);
  const auto v = slice_form(field, p, pos, s.m_prime);
  const auto h = slice_form(field, p, pos, s.x);
  return rank4_quadric(field, f, g, u, v, h);
}

inline std::size_t parameter_count(int k, const Stratum& s) {
  const auto base = 2 * static_cast<std::size_t>(s.m + 1) + static_cast<std::size_t>(s.x + 1);
  return k == 3 ? base : base + 2 * static_cast<std::size_t>(s.m_prime + 1);
}

}  // namespace detail

/// Rank of the Jacobian of (decomposition coefficients) -> (quadric entries)
/// at one random point, by forward evaluation over dual numbers.
inline std::size_t family_jacobian_rank(const PrimeField& field, int r, int k, const Stratum& s, Rng& rng) {
  const DualPrimeField dual(field);
  const std::size_t np = detail::parameter_count(k, s);
  std::vector<Fp> base;
  for (std::size_t i = 0; i < np; ++i) base.push_back(field.random(rng));
  const std::size_t n = static_cast<std::size_t>(r) + 1;
  DenseMatrix<PrimeField> jac(field, n * (n + 1) / 2, np);
  for (std::size_t col = 0; col < np; ++col) {
    std::vector<Dual<Fp>> p;
    for (std::size_t i = 0; i < np; ++i) p.push_back(i == col ? dual.variable(base[i]) : dual.constant(base[i]));
    const auto q = detail::family_member(dual, k, s, p);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) jac(row++, col) = q.matrix()(i, j).eps;
  }
  return rank(jac);
}

/// Projective dimension of the family of rank-k quadrics built on a stratum,
/// on the rational normal curve of P^r; maximum over three random points.
inline int family_dimension(const PrimeField& field, int r, int k, const Stratum& s, std::uint64_t seed) {
  if (r < 3) throw DomainError("family_dimension needs r >= 3");
  if (k == 3) {
    if (s.m_prime != 0 || rank3_stratum(r, s.x).m != s.m) throw DomainError("not a rank-3 stratum for this r");
  } else if (k == 4) {
    if (!(rank4_stratum(r, s.m, s.m_prime) == s)) throw DomainError("not a rank-4 stratum for this r");
  } else {
    throw DomainError("family_dimension supports k = 3 or 4");
  }
  std::size_t best = 0;
  for (std::uint64_t attempt = 0; attempt < 3; ++attempt) {
    auto rng = make_rng(seed, 0xfa111, attempt);
    best = std::max(best, family_jacobian_rank(field, r, k, s, rng));
  }
  return static_cast<int>(best) - 1;
}

/// Largest family_dimension over all strata.
inline int best_family_dimension(const PrimeField& field, int r, int k, std::uint64_t seed) {
  int best = -1;
  for (const auto& s : strata(r, k)) best = std::max(best, family_dimension(field, r, k, s, seed));
  return best;
}

/// dim I_2(C) minus the dimension of its members containing the chord through
/// c(t1), c(t2); the chord condition is vanishing at the third point c(t1) + c(t2).
template <Field F>
std::size_t secant_condition(const ParamCurve<F>& c, const QuadricSystem<F>& i2, const typename F::value_type& t1,
                             const typename F::value_type& t2) {
  if (t1 == t2) throw DomainError("secant needs two distinct parameters");
  const auto p1 = c.point(t1);
  const auto p2 = c.point(t2);
  std::vector<typename F::value_type> p3;
  for (std::size_t i = 0; i < p1.size(); ++i) p3.push_back(p1[i] + p2[i]);
  DenseMatrix<F> row(c.field(), 1, i2.dimension());
  for (std::size_t k = 0; k < i2.dimension(); ++k) row(0, k) = i2.basis()[k](p3);
  return rank(row);
}

template <Field F>
std::size_t secant_condition(const ParamCurve<F>& c, const typename F::value_type& t1,
                             const typename F::value_type& t2) {
  return secant_condition(c, i2_basis(c), t1, t2);
}

/// Cone with vertex the span of `extra` new coordinates.
template <Field F>
SymQuadric<F> cone_quadric(const SymQuadric<F>& q, std::size_t extra) {
  const std::size_t n = q.size() + extra;
  DenseMatrix<F> m(q.field(), n, n);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) m(i, j) = q.matrix()(i, j);
  return SymQuadric<F>(std::move(m));
}

/// Inverse of cone_quadric; the last `extra` rows and columns must vanish.
template <Field F>
SymQuadric<F> project_quadric(const SymQuadric<F>& q, std::size_t extra) {
  if (extra > q.size()) throw DomainError("cannot remove more coordinates than the quadric has");
  const std::size_t n = q.size() - extra;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = n; j < q.size(); ++j)
      if (!q.field().is_zero(q.matrix()(i, j))) throw DomainError("quadric is not a cone over the removed vertex");
  DenseMatrix<F> m(q.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = q.matrix()(i, j);
  return SymQuadric<F>(std::move(m));
}

/// The curve c followed by `extra` random components of the same degree; it
/// projects onto c from the new coordinate vertex.
inline ParamCurve<PrimeField> cone_curve(const ParamCurve<PrimeField>& c, std::size_t extra, Rng& rng) {
  auto comps = c.components();
  for (std::size_t i = 0; i < extra; ++i) comps.push_back(BinaryForm<PrimeField>::random(c.field(), c.degree(), rng));
  return ParamCurve<PrimeField>(c.field(), std::move(comps));
}

template <Field F>
DenseMatrix<F> random_symmetric(const F& field, std::size_t n, Rng& rng) {
  DenseMatrix<F> m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = field.random(rng);
      m(j, i) = m(i, j);
    }
  return m;
}

/// Rank of the quadric through a random genus-4 canonical curve (a random
/// symmetric 4x4 matrix).
inline std::size_t genus4_check(const PrimeField& field, std::uint64_t seed) {
  field.require_above(12, "genus-4 check");
  auto rng = make_rng(seed, 0x4);
  return SymQuadric<PrimeField>(random_symmetric(field, 4, rng)).rank();
}

enum class NetStatus { ok, dependent, zero_discriminant };

inline const char* net_status_name(NetStatus s) {
  switch (s) {
    case NetStatus::ok: return "ok";
    case NetStatus::dependent: return "dependent";
    case NetStatus::zero_discriminant: return "zero_discriminant";
  }
  return "?";
}

struct NetAnalysis {
  NetStatus status = NetStatus::ok;
  int line_degree = -1;  // degree in t of D(a + t b) for random a, b
  bool squarefree_on_line = false;
  bool singular_scan_complete = false;  // false if the two partials share a component
  std::size_t singular_points = 0;      // F_p-points of the affine chart where D and its partials vanish
  std::size_t low_rank_points = 0;      // among them, those where the net member has rank <= 3
  bool pass() const {
    return status == NetStatus::ok && line_degree == 5 && squarefree_on_line && singular_scan_complete &&
           low_rank_points == 0;
  }
};

/// Discriminant curve det(l1 Q1 + l2 Q2 + l3 Q3) of a net of quadrics in P^4.
inline NetAnalysis analyze_net(const std::array<DenseMatrix<PrimeField>, 3>& q, Rng& rng) {
  const PrimeField& field = q[0].field();
  field.require_above(16, "genus-5 net check");
  NetAnalysis out;
  {
    std::vector<SymQuadric<PrimeField>> sys;
    for (const auto& m : q) sys.emplace_back(m);
    DenseMatrix<PrimeField> flat(field, 3, 15);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto c = sys[k].monomial_coeffs();
      for (std::size_t j = 0; j < 15; ++j) flat(k, j) = c[j];
    }
    if (rank(flat) < 3) {
      out.status = NetStatus::dependent;
      return out;
    }
  }
  const auto member = [&](const std::array<Fp, 3>& l) {
    DenseMatrix<PrimeField> m(field, 5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = l[0] * q[0](i, j) + l[1] * q[1](i, j) + l[2] * q[2](i, j);
    return m;
  };
  const auto disc = [&](const std::array<Fp, 3>& l) { return determinant(member(l)); };

  // random coordinate change l = M (x, y, 1)
  DenseMatrix<PrimeField> change(field, 3, 3);
  do {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) change(i, j) = field.random(rng);
  } while (field.is_zero(determinant(change)));
  const auto lift = [&](const Fp& x, const Fp& y) {
    return std::array<Fp, 3>{change(0, 0) * x + change(0, 1) * y + change(0, 2),
                             change(1, 0) * x + change(1, 1) * y + change(1, 2),
                             change(2, 0) * x + change(2, 1) * y + change(2, 2)};
  };
  const auto d = interpolate_grid(field, 5, 5, [&](const Fp& x, const Fp& y) { return disc(lift(x, y)); });
  if (d.is_zero()) {
    out.status = NetStatus::zero_discriminant;
    return out;
  }

  // restriction to the line through two random points
  std::array<Fp, 3> a{};
  std::array<Fp, 3> b{};
  for (auto& v : a) v = field.random(rng);
  for (auto& v : b) v = field.random(rng);
  std::vector<Fp> ts;
  std::vector<Fp> vals;
  for (int t = 0; t <= 5; ++t) {
    const auto tt = field.from_int(t);
    ts.push_back(tt);
    vals.push_back(disc({a[0] + tt * b[0], a[1] + tt * b[1], a[2] + tt * b[2]}));
  }
  const auto on_line = interpolate(field, ts, vals);
  std::vector<Fp> coeffs;
  for (std::size_t i = 0; i <= 5; ++i) coeffs.push_back(on_line.coeff(i));
  const BinaryForm<PrimeField> line_form(field, coeffs);
  out.line_degree = static_cast<int>(on_line.degree());
  out.squarefree_on_line = squarefree_test(line_form) == SquarefreeStatus::squarefree;

  // singular points: common zeros of D_x, D_y (then check D itself)
  const auto dx = d.partial_x().trimmed();
  const auto dy = d.partial_y().trimmed();
  const auto res = resultant_in_y(dx, dy, 16);
  if (res.is_zero()) return out;
  out.singular_scan_complete = true;
  for (const auto& x0 : roots(res)) {
    const auto common = gcd(dx.in_y_at(x0), dy.in_y_at(x0));
    if (common.is_zero() || common.degree() <= 0) continue;
    for (const auto& y0 : roots(common)) {
      if (!field.is_zero(d(x0, y0))) continue;
      ++out.singular_points;
      if (rank(member(lift(x0, y0))) <= 3) ++out.low_rank_points;
    }
  }
  return out;
}

struct Genus5Report {
  std::vector<std::uint64_t> attempts;  // derived seeds tried, in order
  NetAnalysis analysis;
  bool pass() const { return analysis.pass(); }
};

/// Random net of quadrics standing in for I_2 of a general canonical genus-5
/// curve; degenerate draws are redrawn up to five times.
inline Genus5Report genus5_net_check(const PrimeField& field, std::uint64_t seed) {
  Genus5Report rep;
  for (std::uint64_t attempt = 0; attempt < 5; ++attempt) {
    rep.attempts.push_back(derive_seed(seed, 0x5, attempt));
    auto rng = make_rng(seed, 0x5, attempt);
    std::array<DenseMatrix<PrimeField>, 3> q{random_symmetric(field, 5, rng), random_symmetric(field, 5, rng),
                                             random_symmetric(field, 5, rng)};
    rep.analysis = analyze_net(q, rng);
    if (rep.analysis.status == NetStatus::ok) break;
  }
  return rep;
}

}  // namespace qmod::quad
