#pragma once

// Linear systems on the blow-up of P^2 at N points, the quadrics through the
// resulting surface, and the discriminant of a pencil of quadrics.

#include <algorithm>
#include <array>
#include <map>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmod/arith/binary_form.hpp"
#include "qmod/arith/error.hpp"
#include "qmod/arith/forms.hpp"
#include "qmod/arith/matrix.hpp"
#include "qmod/arith/polynomial.hpp"
#include "qmod/arith/random.hpp"
#include "qmod/quadric_lab.hpp"

namespace qmod::surf {

/// a h - sum m_i E_i in the Neron-Severi lattice of the blow-up.
struct NSClass {
  int a = 0;
  std::vector<int> m;

  int multiplicity(std::size_t i) const { return i < m.size() ? m[i] : 0; }
  friend bool operator==(const NSClass&, const NSClass&) = default;
};

inline NSClass ns_h(std::size_t npoints) { return {1, std::vector<int>(npoints, 0)}; }
inline NSClass ns_exceptional(std::size_t i, std::size_t npoints) {
  // E_i = 0 h - (-1) E_i
  NSClass e{0, std::vector<int>(npoints, 0)};
  e.m.at(i) = -1;
  return e;
}

/// H = 7h - 2(E_1..E_7) - (E_8..E_15)
inline NSClass ns_H() {
  NSClass c{7, std::vector<int>(15, 1)};
  std::fill_n(c.m.begin(), 7, 2);
  return c;
}
/// C = 10h - 3(E_1..E_3) - 2(E_4..E_15)
inline NSClass ns_C() {
  NSClass c{10, std::vector<int>(15, 2)};
  std::fill_n(c.m.begin(), 3, 3);
  return c;
}
/// 2H - C = 4h - (E_1..E_3) - 2(E_4..E_7)
inline NSClass ns_2H_minus_C() {
  NSClass c{4, std::vector<int>(15, 0)};
  std::fill_n(c.m.begin(), 3, 1);
  std::fill_n(c.m.begin() + 3, 4, 2);
  return c;
}

inline std::int64_t ns_intersect(const NSClass& d1, const NSClass& d2) {
  std::int64_t v = std::int64_t{d1.a} * d2.a;
  for (std::size_t i = 0; i < std::max(d1.m.size(), d2.m.size()); ++i) {
    v -= std::int64_t{d1.multiplicity(i)} * d2.multiplicity(i);
  }
  return v;
}

/// Arithmetic genus by adjunction, K = -3h + sum E_i.
inline std::int64_t ns_genus(const NSClass& d) {
  std::int64_t dk = -3 * std::int64_t{d.a};
  for (int mi : d.m) dk += mi;
  return (ns_intersect(d, d) + dk) / 2 + 1;
}

/// C(a+2,2) - sum C(m_i+1,2), floored at 0.
inline std::int64_t expected_system_dim(const NSClass& c) {
  std::int64_t v = std::int64_t{c.a + 2} * (c.a + 1) / 2;
  for (int mi : c.m)
    if (mi > 0) v -= std::int64_t{mi} * (mi + 1) / 2;
  return std::max<std::int64_t>(v, 0);
}

/// Affine points (x, y, 1) of P^2: pairwise distinct, no three collinear.
class PointConfig {
 public:
  PointConfig(PrimeField field, std::vector<std::array<Fp, 2>> points, std::uint64_t seed)
      : field_(std::move(field)), pts_(std::move(points)), seed_(seed) {
    if (const auto why = defect(field_, pts_)) throw DomainError(*why);
  }

  /// Uniform random points; redraws (a new derived stream) until general.
  static PointConfig random(const PrimeField& field, std::size_t n, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      auto rng = make_rng(seed, 0x9017, attempt);
      std::vector<std::array<Fp, 2>> pts;
      for (std::size_t i = 0; i < n; ++i) pts.push_back({field.random(rng), field.random(rng)});
      if (!defect(field, pts)) return PointConfig(field, std::move(pts), seed);
      if (attempt >= 100) throw ConfigurationError("could not draw points in general position");
    }
  }

  const PrimeField& field() const { return field_; }
  std::size_t size() const { return pts_.size(); }
  const std::array<Fp, 2>& operator[](std::size_t i) const { return pts_.at(i); }
  const std::vector<std::array<Fp, 2>>& points() const { return pts_; }
  std::uint64_t seed() const { return seed_; }

  static std::optional<std::string> defect(const PrimeField& field, const std::vector<std::array<Fp, 2>>& p) {
    const auto one = field.one();
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (p[i] == p[j]) return "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
        for (std::size_t k = j + 1; k < p.size(); ++k) {
          const auto m = DenseMatrix<PrimeField>::from_rows(
              field, 3, {{p[i][0], p[i][1], one}, {p[j][0], p[j][1], one}, {p[k][0], p[k][1], one}});
          if (field.is_zero(determinant(m))) {
            return "points " + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) +
                   " are collinear";
          }
        }
      }
    return std::nullopt;
  }

 private:
  PrimeField field_;
  std::vector<std::array<Fp, 2>> pts_;
  std::uint64_t seed_;
};

/// Degree-a plane forms with multiplicity >= m_i at point i.
struct PlaneSystem {
  NSClass cls;
  std::shared_ptr<const MonomialBasis> monomials;
  std::vector<Form<PrimeField>> basis;

  std::size_t dimension() const { return basis.size(); }
  std::int64_t expected_dimension() const { return expected_system_dim(cls); }
};

/// Value at (px, py, 1) of d^i/dx^i d^j/dy^j of x^e0 y^e1 z^e2.
inline Fp monomial_derivative(const PrimeField& field, const Exponents& e, int i, int j, const Fp& px,
                              const Fp& py) {
  if (e[0] < i || e[1] < j) return field.zero();
  Fp v = field.one();
  for (int k = 0; k < i; ++k) v = v * field.from_int(e[0] - k);
  for (int k = 0; k < j; ++k) v = v * field.from_int(e[1] - k);
  return v * px.pow(static_cast<std::uint64_t>(e[0] - i)) * py.pow(static_cast<std::uint64_t>(e[1] - j));
}

/// One row per condition d^i_x d^j_y F(p) = 0 with i + j < m, for every point,
/// followed by one vanishing row per extra point.
inline DenseMatrix<PrimeField> interpolation_conditions(const PointConfig& cfg, const NSClass& cls,
                                                        const MonomialBasis& mons,
                                                        const std::vector<std::array<Fp, 2>>& extra = {}) {
  const auto& field = cfg.field();
  std::vector<std::vector<Fp>> rows;
  const auto add_point = [&](const std::array<Fp, 2>& p, int mult) {
    for (int order = 0; order < mult; ++order)
      for (int i = order; i >= 0; --i) {
        std::vector<Fp> row;
        for (const auto& e : mons.monomials()) row.push_back(monomial_derivative(field, e, i, order - i, p[0], p[1]));
        rows.push_back(std::move(row));
      }
  };
  for (std::size_t k = 0; k < cfg.size(); ++k) add_point(cfg[k], cls.multiplicity(k));
  for (const auto& p : extra) add_point(p, 1);
  if (rows.empty()) return DenseMatrix<PrimeField>(field, 0, mons.size());
  return DenseMatrix<PrimeField>::from_rows(field, mons.size(), rows);
}

inline PlaneSystem interpolation_basis(const PointConfig& cfg, const NSClass& cls,
                                       const std::vector<std::array<Fp, 2>>& extra = {}) {
  if (cls.a < 0) throw DomainError("plane systems need degree >= 0");
  if (cls.m.size() > cfg.size()) throw DomainError("class has more multiplicities than points");
  for (int mi : cls.m)
    if (mi < 0) throw DomainError("plane systems need nonnegative multiplicities");
  cfg.field().require_above(static_cast<std::uint64_t>(cls.a), "plane interpolation");
  auto mons = std::make_shared<const MonomialBasis>(3, cls.a);
  PlaneSystem sys{cls, mons, {}};
  for (auto& v : kernel_basis(interpolation_conditions(cfg, cls, *mons, extra))) {
    sys.basis.emplace_back(cfg.field(), mons, std::move(v));
  }
  return sys;
}

/// The pairs (i, j), i <= j, in the order used for quadric monomial coefficients.
inline std::vector<std::pair<std::size_t, std::size_t>> quadric_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.emplace_back(i, j);
  return out;
}

/// Quadrics in the coordinates B_0..B_k of the system vanishing on its image:
/// the left kernel of the matrix of products B_i B_j. Exact, since it works
/// with full coefficient vectors.
inline quad::QuadricSystem<PrimeField> system_i2(const PlaneSystem& sys) {
  const auto& field = sys.basis.at(0).field();
  const std::size_t n = sys.dimension();
  if (n < 2) throw DomainError("need at least two sections");
  auto target = std::make_shared<const MonomialBasis>(3, 2 * sys.cls.a);
  const auto pairs = quadric_pairs(n);
  DenseMatrix<PrimeField> prod(field, pairs.size(), target->size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto p = sys.basis[pairs[k].first].times(sys.basis[pairs[k].second], target);
    for (std::size_t c = 0; c < target->size(); ++c) prod(k, c) = p.coeffs()[c];
  }
  std::vector<quad::SymQuadric<PrimeField>> qs;
  for (const auto& v : kernel_basis(prod.transpose())) {
    qs.push_back(quad::SymQuadric<PrimeField>::from_monomial_coeffs(field, n, v));
  }
  return quad::QuadricSystem<PrimeField>(field, n - 1, std::move(qs));
}

/// Values of the sections at the affine point (x, y).
inline std::vector<Fp> section_values(const PlaneSystem& sys, const Fp& x, const Fp& y) {
  const std::array<Fp, 3> pt{x, y, sys.basis.at(0).field().one()};
  std::vector<Fp> out;
  for (const auto& b : sys.basis) out.push_back(b(pt));
  return out;
}

struct PencilReport {
  BinaryForm<PrimeField> discriminant;  // det(s Q1 + t Q2)
  long degree;                          // degree of the affine part det(Q1 + t Q2)
  bool proportional;                    // Q1, Q2 linearly dependent
  SquarefreeStatus status;
  bool nondegenerate() const { return status == SquarefreeStatus::squarefree; }
};

/// Discriminant of the pencil s Q1 + t Q2 by interpolation at t = 0..n.
inline PencilReport pencil_nondegeneracy(const quad::SymQuadric<PrimeField>& q1,
                                         const quad::SymQuadric<PrimeField>& q2) {
  const auto& field = q1.field();
  const std::size_t n = q1.size();
  if (q2.size() != n) throw DomainError("pencil members of different sizes");
  field.require_above(n, "pencil discriminant");
  std::vector<Fp> ts;
  std::vector<Fp> vals;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto t = field.from_int(static_cast<std::int64_t>(k));
    ts.push_back(t);
    vals.push_back(determinant((q1 + q2.scaled(t)).matrix()));
  }
  const auto affine = interpolate(field, ts, vals);
  std::vector<Fp> coeffs;
  for (std::size_t i = 0; i <= n; ++i) coeffs.push_back(affine.coeff(i));
  BinaryForm<PrimeField> disc(field, std::move(coeffs));
  DenseMatrix<PrimeField> flat(field, 2, n * (n + 1) / 2);
  const auto c1 = q1.monomial_coeffs();
  const auto c2 = q2.monomial_coeffs();
  for (std::size_t j = 0; j < c1.size(); ++j) {
    flat(0, j) = c1[j];
    flat(1, j) = c2[j];
  }
  const auto status = squarefree_test(disc);
  return {std::move(disc), affine.degree(), rank(flat) < 2, status};
}

inline PencilReport pencil_nondegeneracy(const quad::QuadricSystem<PrimeField>& sys) {
  if (sys.dimension() != 2) throw DomainError("pencil needs a system of exactly two quadrics");
  return pencil_nondegeneracy(sys.basis()[0], sys.basis()[1]);
}

struct BaseLocusReport {
  std::vector<std::size_t> drops;  // per trial: dimension drop from imposing one point of a random member
  bool points_pass = true;         // every drop is 1
  bool no_common_component = false;
  bool assigned_multiplicities = false;  // resultant order at each assigned coordinate is m_i^2
  bool moving_residual = false;          // residual intersections of two pairs share no root
  bool pass() const { return points_pass && no_common_component && assigned_multiplicities && moving_residual; }
};

namespace detail {

inline Form<PrimeField> random_member(const PlaneSystem& sys, Rng& rng) {
  const auto& field = sys.basis.at(0).field();
  std::vector<Fp> c(sys.monomials->size(), field.zero());
  for (const auto& b : sys.basis) {
    const auto w = field.random(rng);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = c[k] + w * b.coeffs()[k];
  }
  return Form<PrimeField>(field, sys.monomials, std::move(c));
}

/// Res_y of two members (y-degree taken as a; the y^a coefficient is constant).
inline Polynomial<PrimeField> member_resultant(const Bivariate<PrimeField>& f, const Bivariate<PrimeField>& g,
                                               int a) {
  return resultant_in_y(f, g, static_cast<std::size_t>(a) * static_cast<std::size_t>(a));
}

/// Splits off (x - x_i)^(m_i^2) for every assigned point; nullopt if some
/// order differs from m_i^2.
inline std::optional<Polynomial<PrimeField>> strip_assigned(Polynomial<PrimeField> r, const PointConfig& cfg,
                                                            const NSClass& cls, int coord) {
  const auto& field = cfg.field();
  std::map<std::uint64_t, std::pair<Fp, std::size_t>> expected;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const int mi = cls.multiplicity(i);
    if (mi <= 0) continue;
    auto& slot = expected.try_emplace(cfg[i][static_cast<std::size_t>(coord)].value(),
                                      cfg[i][static_cast<std::size_t>(coord)], 0)
                     .first->second;
    slot.second += static_cast<std::size_t>(mi) * static_cast<std::size_t>(mi);
  }
  for (const auto& [key, entry] : expected) {
    const auto& [x0, mult] = entry;
    if (root_multiplicity(r, x0) != mult) return std::nullopt;
    for (std::size_t k = 0; k < mult; ++k) r = r / Polynomial<PrimeField>::linear_root(field, x0);
  }
  return r;
}

}  // namespace detail

/// Evidence that |cls| has no base points beyond the assigned ones:
///  (i) a point on a random member imposes one condition;
///  (ii) two random members share no component;
///  (iii) in each variable, the resultant of two members vanishes to order
///      exactly m_i^2 at the assigned coordinates, and the remaining
///      intersections move between two independent pairs.
inline BaseLocusReport base_locus_evidence(const PointConfig& cfg, const NSClass& cls, std::size_t trials,
                                           std::uint64_t seed) {
  const auto& field = cfg.field();
  field.require_above(static_cast<std::uint64_t>(cls.a) * static_cast<std::uint64_t>(cls.a) + 1, "base locus check");
  BaseLocusReport rep;
  const auto sys = interpolation_basis(cfg, cls);
  auto rng = make_rng(seed, 0xba5e);
  if (sys.dimension() == 0) {
    rep.points_pass = trials == 0;
    return rep;
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const auto f = Bivariate<PrimeField>::dehomogenize(detail::random_member(sys, rng));
    std::optional<std::array<Fp, 2>> q;
    for (int tries = 0; tries < 200 && !q; ++tries) {
      const auto x0 = field.random(rng);
      const auto line = f.in_y_at(x0);
      if (line.is_zero()) {
        q = std::array<Fp, 2>{x0, field.random(rng)};
      } else if (line.degree() > 0) {
        const auto rs = roots(line);
        if (!rs.empty()) q = std::array<Fp, 2>{x0, rs[uniform_below(rng, rs.size())]};
      }
    }
    if (!q) {
      rep.drops.push_back(0);
      continue;
    }
    rep.drops.push_back(sys.dimension() - interpolation_basis(cfg, cls, {*q}).dimension());
  }
  rep.points_pass = std::all_of(rep.drops.begin(), rep.drops.end(), [](std::size_t d) { return d == 1; });

  if (sys.dimension() < 2) return rep;
  std::array<Bivariate<PrimeField>, 4> members{
      Bivariate<PrimeField>::dehomogenize(detail::random_member(sys, rng)),
      Bivariate<PrimeField>::dehomogenize(detail::random_member(sys, rng)),
      Bivariate<PrimeField>::dehomogenize(detail::random_member(sys, rng)),
      Bivariate<PrimeField>::dehomogenize(detail::random_member(sys, rng))};
  rep.no_common_component = true;
  rep.assigned_multiplicities = true;
  rep.moving_residual = true;
  for (int coord = 0; coord < 2; ++coord) {
    // Res_y eliminates y, leaving x; swapping eliminates x
    const auto view = [&](std::size_t k) { return coord == 0 ? members[k] : members[k].swapped(); };
    const auto r1 = detail::member_resultant(view(0), view(1), cls.a);
    const auto r2 = detail::member_resultant(view(2), view(3), cls.a);
    if (r1.is_zero() || r2.is_zero()) {
      rep.no_common_component = false;
      rep.assigned_multiplicities = false;
      rep.moving_residual = false;
      return rep;
    }
    const auto s1 = detail::strip_assigned(r1, cfg, cls, coord);
    const auto s2 = detail::strip_assigned(r2, cfg, cls, coord);
    if (!s1 || !s2) {
      rep.assigned_multiplicities = false;
      rep.moving_residual = false;
      continue;
    }
    if (gcd(*s1, *s2).degree() > 0) rep.moving_residual = false;
  }
  return rep;
}

struct BlowupReport {
  std::vector<std::uint64_t> attempts;  // point-configuration seeds tried
  std::size_t h0_H = 0;
  std::size_t h0_C = 0;
  std::size_t h0_2H_minus_C = 0;
  std::size_t i2_dimension = 0;
  std::vector<std::size_t> i2_ranks;
  bool i2_annihilates_samples = false;
  std::optional<PencilReport> pencil;
  std::int64_t c_dot_h = 0;
  std::int64_t genus_c = 0;
  std::int64_t h_squared = 0;
  std::optional<BaseLocusReport> base_locus;

  bool dims_ok() const { return h0_H == 7 && h0_C == 12 && h0_2H_minus_C == 0 && i2_dimension == 2; }
  bool ns_ok() const { return c_dot_h == 20 && genus_c == 15 && h_squared == 13; }
  bool pass() const {
    return dims_ok() && ns_ok() && i2_annihilates_samples && pencil && pencil->nondegenerate() &&
           pencil->degree == 7 && (!base_locus || base_locus->pass());
  }
};

/// The surface construction on 15 random points: h^0 of H, C, 2H - C, the
/// quadrics through the image of the H-embedding in P^6, and the discriminant
/// of that pencil. A configuration failing any dimension count is redrawn,
/// up to five times.
inline BlowupReport blowup_run(const PrimeField& field, std::uint64_t seed, std::size_t base_locus_trials = 0,
                               bool check_base_locus = false) {
  field.require_above(check_base_locus ? 101 : 14, "surface run");
  BlowupReport rep;
  rep.c_dot_h = ns_intersect(ns_C(), ns_H());
  rep.genus_c = ns_genus(ns_C());
  rep.h_squared = ns_intersect(ns_H(), ns_H());
  for (std::uint64_t attempt = 0; attempt < 5; ++attempt) {
    const std::uint64_t cfg_seed = derive_seed(seed, 0x15, attempt);
    rep.attempts.push_back(cfg_seed);
    const auto cfg = PointConfig::random(field, 15, cfg_seed);
    const auto h = interpolation_basis(cfg, ns_H());
    rep.h0_H = h.dimension();
    rep.h0_C = interpolation_basis(cfg, ns_C()).dimension();
    rep.h0_2H_minus_C = interpolation_basis(cfg, ns_2H_minus_C()).dimension();
    if (rep.h0_H < 2) continue;
    const auto i2 = system_i2(h);
    rep.i2_dimension = i2.dimension();
    if (!rep.dims_ok()) continue;
    rep.i2_ranks.clear();
    for (const auto& q : i2.basis()) rep.i2_ranks.push_back(q.rank());
    auto rng = make_rng(cfg_seed, 0xe7a1);
    rep.i2_annihilates_samples = true;
    for (int k = 0; k < 50; ++k) {
      const auto v = section_values(h, field.random(rng), field.random(rng));
      for (const auto& q : i2.basis()) rep.i2_annihilates_samples = rep.i2_annihilates_samples && field.is_zero(q(v));
    }
    rep.pencil = pencil_nondegeneracy(i2);
    if (check_base_locus) rep.base_locus = base_locus_evidence(cfg, ns_C(), base_locus_trials, cfg_seed);
    if (rep.pass()) break;
  }
  return rep;
}

}  // namespace qmod::surf
