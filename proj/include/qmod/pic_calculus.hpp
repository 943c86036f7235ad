#pragma once

// Divisor classes on the moduli space of stable n-pointed genus-g curves in
// the basis lambda, psi_1..psi_n, delta_irr, delta_{i:S}. Boundary
// coefficients are stored with the sign convention  class = ... - b * delta,
// and may be exact or only known from below.

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmod/arith/error.hpp"
#include "qmod/arith/matrix.hpp"
#include "qmod/arith/rational.hpp"
#include "qmod/bn_invariants.hpp"

namespace qmod::pic {

enum class Kind { exact, at_least };

inline const char* kind_name(Kind k) { return k == Kind::exact ? "exact" : "at_least"; }

/// A coefficient that is either known exactly or bounded below.
struct Coefficient {
  Kind kind = Kind::exact;
  Rational value = 0;

  static Coefficient exact(Rational v) { return {Kind::exact, std::move(v)}; }
  static Coefficient at_least(Rational v) { return {Kind::at_least, std::move(v)}; }

  bool is_exact() const { return kind == Kind::exact; }

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    return {a.is_exact() && b.is_exact() ? Kind::exact : Kind::at_least, a.value + b.value};
  }
  /// Scaling a lower bound by a negative number would turn it into an upper
  /// bound, which this type cannot represent.
  Coefficient scaled(const Rational& c) const {
    if (c == 0) return exact(0);
    if (c < 0 && !is_exact()) throw ConsistencyError("negative multiple of a lower-bound coefficient");
    return {kind, value * c};
  }
  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

/// (i, s): the divisors delta_{i:S} with |S| = s, genus i on the side holding S.
struct BoundarySlot {
  int i;
  int s;
  auto operator<=>(const BoundarySlot&) const = default;
};

/// True iff delta_{i:S} with |S| = s is a boundary divisor of M_{g,n}-bar.
inline bool is_boundary_divisor(int g, int n, int i, int s) {
  if (i < 0 || i > g || s < 0 || s > n) return false;
  if (i == 0 && s < 2) return false;
  if (g - i == 0 && n - s < 2) return false;
  return true;
}

/// Representative of {(i, s), (g-i, n-s)}: smaller genus first, ties by smaller s.
inline BoundarySlot canonical_slot(int g, int n, int i, int s) {
  if (!is_boundary_divisor(g, n, i, s)) {
    throw DomainError("(" + std::to_string(i) + ", " + std::to_string(s) + ") is not a boundary divisor of M_{" +
                      std::to_string(g) + "," + std::to_string(n) + "}");
  }
  const BoundarySlot a{i, s};
  const BoundarySlot b{g - i, n - s};
  return std::min(a, b);
}

inline std::vector<BoundarySlot> boundary_slots(int g, int n) {
  std::vector<BoundarySlot> out;
  for (int i = 0; i <= g; ++i)
    for (int s = 0; s <= n; ++s)
      if (is_boundary_divisor(g, n, i, s) && canonical_slot(g, n, i, s) == BoundarySlot{i, s}) out.push_back({i, s});
  return out;
}

/// S_n-symmetric in the boundary: one coefficient per (i, s) slot. The psi
/// coefficients are kept individually.
class DivisorClass {
 public:
  DivisorClass(int g, int n) : g_(g), n_(n), psi_(static_cast<std::size_t>(n)) {
    if (g < 1 || n < 0) throw DomainError("moduli parameters need g >= 1, n >= 0");
    for (const auto& slot : boundary_slots(g, n)) b_.emplace(slot, Coefficient{});
  }

  int g() const { return g_; }
  int n() const { return n_; }

  const Coefficient& lambda() const { return lambda_; }
  const std::vector<Coefficient>& psi() const { return psi_; }
  const Coefficient& psi(int j) const { return psi_.at(static_cast<std::size_t>(j - 1)); }
  const Coefficient& b_irr() const { return b_irr_; }
  const std::map<BoundarySlot, Coefficient>& boundary() const { return b_; }
  /// Coefficient of any delta_{i:S} with |S| = s, in either labelling.
  const Coefficient& b(int i, int s) const { return b_.at(canonical_slot(g_, n_, i, s)); }

  DivisorClass& set_lambda(Coefficient c) {
    require_exact(c, "lambda");
    lambda_ = std::move(c);
    return *this;
  }
  DivisorClass& set_psi(int j, Coefficient c) {
    require_exact(c, "psi");
    psi_.at(static_cast<std::size_t>(j - 1)) = std::move(c);
    return *this;
  }
  DivisorClass& set_all_psi(const Coefficient& c) {
    for (int j = 1; j <= n_; ++j) set_psi(j, c);
    return *this;
  }
  DivisorClass& set_b_irr(Coefficient c) {
    b_irr_ = std::move(c);
    return *this;
  }
  DivisorClass& set_b(int i, int s, Coefficient c) {
    b_.at(canonical_slot(g_, n_, i, s)) = std::move(c);
    return *this;
  }
  DivisorClass& set_all_boundary(const Coefficient& c) {
    for (auto& [slot, coeff] : b_) coeff = c;
    return *this;
  }

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    a.require_same_space(b);
    DivisorClass r = a;
    r.lambda_ = a.lambda_ + b.lambda_;
    for (std::size_t j = 0; j < r.psi_.size(); ++j) r.psi_[j] = a.psi_[j] + b.psi_[j];
    r.b_irr_ = a.b_irr_ + b.b_irr_;
    for (auto& [slot, coeff] : r.b_) coeff = a.b_.at(slot) + b.b_.at(slot);
    return r;
  }
  DivisorClass scaled(const Rational& c) const {
    DivisorClass r = *this;
    r.lambda_ = lambda_.scaled(c);
    for (auto& p : r.psi_) p = p.scaled(c);
    r.b_irr_ = b_irr_.scaled(c);
    for (auto& [slot, coeff] : r.b_) coeff = coeff.scaled(c);
    return r;
  }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + b.scaled(-1); }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  static void require_exact(const Coefficient& c, const char* what) {
    if (!c.is_exact()) throw DomainError(std::string(what) + " coefficient must be exact");
  }
  void require_same_space(const DivisorClass& o) const {
    if (g_ != o.g_ || n_ != o.n_) throw DomainError("classes live on different moduli spaces");
  }

  int g_;
  int n_;
  Coefficient lambda_;
  std::vector<Coefficient> psi_;
  Coefficient b_irr_;
  std::map<BoundarySlot, Coefficient> b_;
};

/// A boundary divisor delta_{i:S}, with S a bitmask over labels 1..n (bit j-1).
struct BoundaryDivisor {
  int i;
  std::uint32_t mask;
  auto operator<=>(const BoundaryDivisor&) const = default;
};

/// Divisor class with one coefficient per individual boundary divisor; the
/// form taken by pullbacks along a single forgetful map.
class ExpandedClass {
 public:
  ExpandedClass(int g, int n) : g_(g), n_(n), psi_(static_cast<std::size_t>(n)) {
    if (g < 1 || n < 0 || n > 20) throw DomainError("expanded classes need g >= 1 and 0 <= n <= 20");
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (int i = 0; i <= g; ++i)
      for (std::uint32_t m = 0; m <= full; ++m)
        if (is_boundary_divisor(g, n, i, std::popcount(m)) && canonical(i, m) == BoundaryDivisor{i, m})
          b_.emplace(BoundaryDivisor{i, m}, Coefficient{});
  }

  static ExpandedClass expand(const DivisorClass& c) {
    ExpandedClass e(c.g(), c.n());
    e.lambda = c.lambda();
    e.psi_ = c.psi();
    e.b_irr = c.b_irr();
    for (auto& [d, coeff] : e.b_) coeff = c.b(d.i, std::popcount(d.mask));
    return e;
  }

  int g() const { return g_; }
  int n() const { return n_; }

  BoundaryDivisor canonical(int i, std::uint32_t mask) const {
    const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
    const BoundaryDivisor a{i, mask};
    const BoundaryDivisor b{g_ - i, full & ~mask};
    if (a.i != b.i) return a.i < b.i ? a : b;
    const int pa = std::popcount(a.mask);
    const int pb = std::popcount(b.mask);
    if (pa != pb) return pa < pb ? a : b;
    return a.mask < b.mask ? a : b;
  }

  Coefficient& psi(int j) { return psi_.at(static_cast<std::size_t>(j - 1)); }
  const Coefficient& psi(int j) const { return psi_.at(static_cast<std::size_t>(j - 1)); }
  Coefficient& b(int i, std::uint32_t mask) {
    if (!is_boundary_divisor(g_, n_, i, std::popcount(mask))) throw DomainError("not a boundary divisor");
    return b_.at(canonical(i, mask));
  }
  const Coefficient& b(int i, std::uint32_t mask) const { return const_cast<ExpandedClass&>(*this).b(i, mask); }
  const std::map<BoundaryDivisor, Coefficient>& boundary() const { return b_; }

  friend ExpandedClass operator+(const ExpandedClass& a, const ExpandedClass& b) {
    if (a.g_ != b.g_ || a.n_ != b.n_) throw DomainError("classes live on different moduli spaces");
    ExpandedClass r = a;
    r.lambda = a.lambda + b.lambda;
    for (std::size_t j = 0; j < r.psi_.size(); ++j) r.psi_[j] = a.psi_[j] + b.psi_[j];
    r.b_irr = a.b_irr + b.b_irr;
    for (auto& [d, coeff] : r.b_) coeff = a.b_.at(d) + b.b_.at(d);
    return r;
  }
  ExpandedClass scaled(const Rational& c) const {
    ExpandedClass r = *this;
    r.lambda = lambda.scaled(c);
    for (auto& p : r.psi_) p = p.scaled(c);
    r.b_irr = b_irr.scaled(c);
    for (auto& [d, coeff] : r.b_) coeff = coeff.scaled(c);
    return r;
  }
  friend bool operator==(const ExpandedClass&, const ExpandedClass&) = default;

  /// Back to the (i, s) form; nullopt unless every psi agrees and every
  /// boundary coefficient depends only on (i, |S|).
  std::optional<DivisorClass> symmetrize() const {
    DivisorClass c(g_, n_);
    c.set_lambda(lambda);
    for (int j = 1; j <= n_; ++j) {
      if (!(psi_[static_cast<std::size_t>(j - 1)] == psi_[0])) return std::nullopt;
      c.set_psi(j, psi_[static_cast<std::size_t>(j - 1)]);
    }
    c.set_b_irr(b_irr);
    std::map<BoundarySlot, std::optional<Coefficient>> seen;
    for (const auto& [d, coeff] : b_) {
      auto& slot = seen[canonical_slot(g_, n_, d.i, std::popcount(d.mask))];
      if (slot && !(*slot == coeff)) return std::nullopt;
      slot = coeff;
    }
    for (const auto& [slot, coeff] : seen) c.set_b(slot.i, slot.s, *coeff);
    return c;
  }

  Coefficient lambda;
  Coefficient b_irr;

 private:
  int g_;
  int n_;
  std::vector<Coefficient> psi_;
  std::map<BoundaryDivisor, Coefficient> b_;
};

/// Pullback along the map M_{g,n+1} -> M_{g,n} forgetting the point labelled
/// `forgotten` (1..n+1); the remaining labels keep their relative order.
///   lambda -> lambda, psi_a -> psi_a - delta_{0:{a, forgotten}},
///   delta_irr -> delta_irr, delta_{i:S} -> delta_{i:S} + delta_{i:S+forgotten}.
inline ExpandedClass pullback_forgetting(const ExpandedClass& c, int forgotten) {
  const int n = c.n();
  if (forgotten < 1 || forgotten > n + 1) throw DomainError("forgotten label out of range");
  ExpandedClass r(c.g(), n + 1);
  const auto relabel = [&](int a) { return a < forgotten ? a : a + 1; };
  const std::uint32_t new_bit = std::uint32_t{1} << (forgotten - 1);
  const auto relabel_mask = [&](std::uint32_t m) {
    std::uint32_t out = 0;
    for (int a = 1; a <= n; ++a)
      if (m & (std::uint32_t{1} << (a - 1))) out |= std::uint32_t{1} << (relabel(a) - 1);
    return out;
  };
  r.lambda = c.lambda;
  r.b_irr = c.b_irr;
  r.psi(forgotten) = Coefficient::exact(0);
  for (int a = 1; a <= n; ++a) {
    const int ta = relabel(a);
    r.psi(ta) = c.psi(a);
    // + c psi_a pulls back to + c psi_a - c delta_{0:{a,f}}, i.e. b += c
    auto& slot = r.b(0, (std::uint32_t{1} << (ta - 1)) | new_bit);
    slot = slot + c.psi(a);
  }
  for (const auto& [d, coeff] : c.boundary()) {
    const std::uint32_t m = relabel_mask(d.mask);
    auto& without = r.b(d.i, m);
    without = without + coeff;
    auto& with = r.b(d.i, m | new_bit);
    with = with + coeff;
  }
  return r;
}

/// Pullback forgetting the last point.
inline ExpandedClass pullback_forgetful(const ExpandedClass& c) { return pullback_forgetting(c, c.n() + 1); }
inline ExpandedClass pullback_forgetful(const DivisorClass& c) {
  return pullback_forgetful(ExpandedClass::expand(c));
}

/// First Chern classes and ranks of E = pi_* L(-sum delta_{0:{j,n+1}}) and
/// F = pi_* L^2(-2 sum delta_{0:{j,n+1}}), the bundles whose multiplication
/// map Sym^2 E -> F defines the quadric loci.
struct ChernPair {
  DivisorClass c1E;
  DivisorClass c1F;
  std::int64_t e;
  std::int64_t f;
};

inline ChernPair chern_pair(int g, int n) {
  if (g <= n) throw DomainError("chern_pair needs g > n");
  DivisorClass c1E(g, n);
  c1E.set_lambda(Coefficient::exact(1)).set_all_psi(Coefficient::exact(-1));
  DivisorClass c1F(g, n);
  // -delta: every boundary divisor, delta_irr included, with coefficient 1
  c1F.set_lambda(Coefficient::exact(13))
      .set_all_psi(Coefficient::exact(-5))
      .set_b_irr(Coefficient::exact(1))
      .set_all_boundary(Coefficient::exact(1));
  return {std::move(c1E), std::move(c1F), g - n, 3 * std::int64_t{g} - 3 - 2 * std::int64_t{n}};
}

/// Virtual class of the locus where Sym^2 E -> F has a kernel element of rank <= k:
/// A^k_e * (c1(F) - 2f/e * c1(E)). Requires f = C(e+1,2) - C(e-k+1,2).
inline DivisorClass fr_sigma_class(const ChernPair& cp, std::int64_t k) {
  const BigInt expected_f = binomial(cp.e + 1, 2) - binomial(cp.e - k + 1, 2);
  if (expected_f != cp.f) {
    throw DomainError("rank-" + std::to_string(k) + " calibration fails: f = " + std::to_string(cp.f) +
                      " but C(e+1,2) - C(e-k+1,2) = " + expected_f.str());
  }
  const Rational degree(bn::harris_tu_degree(cp.e, k));
  return (cp.c1F - cp.c1E.scaled(Rational(2 * cp.f, cp.e))).scaled(degree);
}

/// Virtual class of the degenerate-pencil locus when F has rank C(e+1,2) - 2:
/// (e-1) * (e c1(F) - (e^2+e-4) c1(E)).
inline DivisorClass fr_dp_class(const ChernPair& cp) {
  const BigInt expected_f = binomial(cp.e + 1, 2) - 2;
  if (expected_f != cp.f) {
    throw DomainError("pencil calibration fails: f = " + std::to_string(cp.f) + " but C(e+1,2) - 2 = " +
                      expected_f.str());
  }
  const std::int64_t e = cp.e;
  return (cp.c1F.scaled(e) - cp.c1E.scaled(e * e + e - 4)).scaled(e - 1);
}

/// Boundary coefficient of the twisted virtual class at delta_{i:S}, |S| = s,
/// valid for i < s.
inline Rational tilde_b_quad(std::int64_t g, std::int64_t n, std::int64_t i, std::int64_t s) {
  const Rational num = -i * i * (g - 2 * n + 3) + i * (2 * g - 2 * s * n + 6 * s - 3 * n + 3) +
                       s * ((g - 3) * s + n - 3);
  return num / Rational(g - n);
}

/// Exact b_{0:s} in the rank-4 case.
inline Rational b0s_rank4(std::int64_t g, std::int64_t n, std::int64_t s) {
  return Rational(s * (g * s - 3 * s + n - 3), g - n);
}

/// Twisted boundary coefficient of the degenerate-pencil class on M_{15,8}, i < s.
inline Rational tilde_b_dp(std::int64_t i, std::int64_t s) {
  return Rational(-2 * i * i + i * (9 - 10 * s) + s * (12 * s + 5));
}

inline bool in_quad_family(std::int64_t g, std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 4 || k > g - n) return false;
  return bn::expected_dim_q(g, g - n - 1, 2 * g - 2 - n, k) == -1;
}

/// Closure of the locus of pointed curves whose quadric ideal under
/// K_C - p_1 - ... - p_n contains a nonzero quadric of rank <= k.
///   lambda: alpha a, psi: alpha c, delta_irr: exactly alpha;
///   delta_{i:S} with i < s (either labelling): at least alpha * tilde_b,
///   exact for i = 0 when k = 4; all other slots at least alpha.
inline DivisorClass quad_class(int g, int n, int k) {
  if (!in_quad_family(g, n, k)) {
    throw DomainError("(" + std::to_string(g) + ", " + std::to_string(n) + ", " + std::to_string(k) +
                      ") is outside the calibrated quadric family");
  }
  const Rational alpha(bn::harris_tu_degree(g - n, k));
  DivisorClass c(g, n);
  c.set_lambda(Coefficient::exact(alpha * Rational(7 * g - 9 * n + 6, g - n)));
  c.set_all_psi(Coefficient::exact(alpha * Rational(g + n - 6, g - n)));
  c.set_b_irr(Coefficient::exact(alpha));
  for (const auto& slot : boundary_slots(g, n)) {
    std::optional<std::pair<int, int>> twisted;
    if (slot.i < slot.s) twisted = std::pair{slot.i, slot.s};
    else if (g - slot.i < n - slot.s) twisted = std::pair{g - slot.i, n - slot.s};
    if (!twisted) {
      c.set_b(slot.i, slot.s, Coefficient::at_least(alpha));
      continue;
    }
    const auto [i, s] = *twisted;
    if (k == 4 && i == 0) c.set_b(slot.i, slot.s, Coefficient::exact(alpha * b0s_rank4(g, n, s)));
    else c.set_b(slot.i, slot.s, Coefficient::at_least(alpha * tilde_b_quad(g, n, i, s)));
  }
  return c;
}

/// The degenerate-pencil divisor on M_{15,8}: the virtual class with every
/// delta_{i:S} coefficient weakened to a lower bound (>= 6 * 7).
inline DivisorClass d_class_15_8() {
  const DivisorClass exact = fr_dp_class(chern_pair(15, 8));
  DivisorClass c = exact;
  for (const auto& [slot, coeff] : exact.boundary()) c.set_b(slot.i, slot.s, Coefficient::at_least(coeff.value));
  return c;
}

/// Sum over the nine forgetful maps M_{15,9} -> M_{15,8} of the pulled-back
/// degenerate-pencil divisor, divided by 6 (this normalization gives
/// lambda = 351, psi = 136).
inline DivisorClass z_class_15_9() {
  const auto d = ExpandedClass::expand(d_class_15_8());
  ExpandedClass sum(15, 9);
  for (int j = 1; j <= 9; ++j) sum = sum + pullback_forgetting(d, j);
  auto symmetric = sum.scaled(Rational(1, 6)).symmetrize();
  if (!symmetric) throw ConsistencyError("averaged pullback is not symmetric");
  return *symmetric;
}

/// 13 lambda - 2 delta_irr + sum psi - 2 sum delta_{0:S} - 3 sum delta_{1:S} - 2 sum_{i>=2} delta_{i:S}.
inline DivisorClass canonical_class(int g, int n) {
  DivisorClass c(g, n);
  c.set_lambda(Coefficient::exact(13)).set_all_psi(Coefficient::exact(1)).set_b_irr(Coefficient::exact(2));
  for (const auto& slot : boundary_slots(g, n)) {
    c.set_b(slot.i, slot.s, Coefficient::exact(slot.i == 1 ? 3 : 2));
  }
  return c;
}

/// Pullback of the Brill-Noether divisor of M_15 to M_{15,9}: 54 lambda - 8 delta_irr - ...,
/// the undisplayed boundary terms only known to be >= 0.
inline DivisorClass bn_class_15() {
  DivisorClass c(15, 9);
  c.set_lambda(Coefficient::exact(54)).set_b_irr(Coefficient::exact(8));
  c.set_all_boundary(Coefficient::at_least(0));
  return c;
}

struct SlotReport {
  BoundarySlot slot;
  Coefficient slack;                       // coefficient of delta_{i:S} in the remainder E
  bool verified;                           // slack known to be >= 0
  Rational z_bound;                        // lower bound on Z's coefficient used
  std::optional<Rational> required_z_bound;  // smallest Z coefficient making the slack >= 0
};

struct CertificateReport {
  Rational x;
  Rational y;
  Rational z;
  Rational lambda_residual;
  std::vector<Rational> psi_residuals;
  Coefficient e_irr;
  std::vector<SlotReport> boundary;
  bool pass = false;
};

/// Checks K = x sum psi + y Z + z BN + E with E supported on the boundary:
/// the lambda and psi parts of E must vanish, and E's delta_irr coefficient
/// must be nonnegative. Boundary slots are reported, not required.
inline CertificateReport certify(const DivisorClass& canonical, const DivisorClass& zc, const DivisorClass& bnc,
                                 const Rational& x, const Rational& y, const Rational& z) {
  if (x < 0 || y < 0 || z < 0) throw DomainError("certificate multipliers must be nonnegative");
  if (canonical.g() != zc.g() || canonical.n() != zc.n() || canonical.g() != bnc.g() || canonical.n() != bnc.n()) {
    throw DomainError("certificate classes live on different moduli spaces");
  }
  CertificateReport rep{x, y, z, 0, {}, {}, {}, false};
  rep.lambda_residual = canonical.lambda().value - y * zc.lambda().value - z * bnc.lambda().value;
  bool psi_ok = true;
  for (int j = 1; j <= canonical.n(); ++j) {
    rep.psi_residuals.push_back(canonical.psi(j).value - x - y * zc.psi(j).value - z * bnc.psi(j).value);
    psi_ok = psi_ok && rep.psi_residuals.back() == 0;
  }
  // E = K - y Z - z BN; in "-b delta" terms E's delta coefficient is -b_K + y b_Z + z b_BN
  const auto slack = [&](const Coefficient& k, const Coefficient& zb, const Coefficient& bb) {
    return Coefficient::exact(-k.value) + zb.scaled(y) + bb.scaled(z);
  };
  rep.e_irr = slack(canonical.b_irr(), zc.b_irr(), bnc.b_irr());
  for (const auto& [slot, kb] : canonical.boundary()) {
    const auto& zb = zc.boundary().at(slot);
    const auto& bb = bnc.boundary().at(slot);
    SlotReport sr{slot, slack(kb, zb, bb), false, zb.value, std::nullopt};
    sr.verified = sr.slack.value >= 0;
    if (!sr.verified && y > 0) sr.required_z_bound = (kb.value - z * bb.value) / y;
    rep.boundary.push_back(std::move(sr));
  }
  rep.pass = rep.lambda_residual == 0 && psi_ok && rep.e_irr.value >= 0;
  return rep;
}

inline CertificateReport general_type_certificate(const Rational& x, const Rational& y, const Rational& z) {
  return certify(canonical_class(15, 9), z_class_15_9(), bn_class_15(), x, y, z);
}

/// For fixed z, the unique (x, y) zeroing the lambda and psi residuals.
inline std::pair<Rational, Rational> solve_certificate_multipliers(const DivisorClass& canonical,
                                                                   const DivisorClass& zc,
                                                                   const DivisorClass& bnc, const Rational& z) {
  const RationalField q;
  // unknowns (x, y):  y Z.lambda = K.lambda - z BN.lambda ;  x + y Z.psi = K.psi - z BN.psi
  const auto a = DenseMatrix<RationalField>::from_rows(
      q, 2, {{Rational(0), zc.lambda().value}, {Rational(1), zc.psi(1).value}});
  if (rank(a) != 2) throw DomainError("certificate system is singular");
  const std::vector<Rational> rhs{canonical.lambda().value - z * bnc.lambda().value,
                                  canonical.psi(1).value - z * bnc.psi(1).value};
  const auto sol = solve(a, std::span<const Rational>(rhs));
  return {(*sol)[0], (*sol)[1]};
}

inline std::pair<Rational, Rational> solve_certificate_multipliers(const Rational& z) {
  return solve_certificate_multipliers(canonical_class(15, 9), z_class_15_9(), bn_class_15(), z);
}

}  // namespace qmod::pic
