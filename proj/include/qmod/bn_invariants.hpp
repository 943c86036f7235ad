#pragma once

// Closed-form Brill-Noether style invariants: expected dimensions of rank-k
// quadric loci, (adjusted) Brill-Noether numbers, Harris-Tu degrees of
// symmetric determinantal loci, and the divisorial (g, n, k) family.

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "qmod/arith/error.hpp"
#include "qmod/arith/rational.hpp"

namespace qmod::bn {

namespace detail {

inline std::int64_t narrow(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("invariant does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

inline void require_nonnegative(std::int64_t v, const char* name) {
  if (v < 0) throw DomainError(std::string(name) + " must be nonnegative");
}

inline BigInt q_formula(std::int64_t g, std::int64_t r, std::int64_t d, std::int64_t k) {
  return binomial(r + 2, 2) - binomial(r - k + 2, 2) - 2 * BigInt(d) + g - 2;
}

}  // namespace detail

/// Nondecreasing vanishing-order excesses alpha_0 <= ... <= alpha_r at a point.
class RamificationSequence {
 public:
  explicit RamificationSequence(std::vector<std::int64_t> alpha) : alpha_(std::move(alpha)) {
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
      if (alpha_[i] < 0) throw DomainError("ramification entries must be nonnegative");
      if (i > 0 && alpha_[i] < alpha_[i - 1]) throw DomainError("ramification sequence must be nondecreasing");
    }
  }
  const std::vector<std::int64_t>& values() const { return alpha_; }
  std::size_t size() const { return alpha_.size(); }
  std::int64_t sum() const {
    std::int64_t s = 0;
    for (auto a : alpha_) s += a;
    return s;
  }

 private:
  std::vector<std::int64_t> alpha_;
};

/// Expected dimension of the rank <= k quadrics containing a curve embedded by a g^r_d:
/// C(r+2,2) - C(r-k+2,2) - 2d + g - 2.
inline std::int64_t expected_dim_q(std::int64_t g, std::int64_t r, std::int64_t d, std::int64_t k) {
  detail::require_nonnegative(g, "g");
  detail::require_nonnegative(r, "r");
  detail::require_nonnegative(d, "d");
  detail::require_nonnegative(k, "k");
  if (k > r + 1) throw DomainError("quadric rank bound k exceeds r + 1");
  return detail::narrow(detail::q_formula(g, r, d, k));
}

inline std::int64_t brill_noether_rho(std::int64_t g, std::int64_t r, std::int64_t d) {
  return detail::narrow(BigInt(g) - BigInt(r + 1) * (g - d + r));
}

inline std::int64_t adjusted_rho(std::int64_t g, std::int64_t r, std::int64_t d,
                                 const RamificationSequence& alpha) {
  if (alpha.size() != static_cast<std::size_t>(r + 1)) {
    throw DomainError("ramification sequence length must be r + 1");
  }
  return brill_noether_rho(g, r, d) - alpha.sum();
}

/// Degree of the locus of quadrics of rank <= k in P^(e-1):
/// prod_{t=0}^{e-k-1} C(e+t, e-k-t) / C(2t+1, t).
inline BigInt harris_tu_degree(std::int64_t e, std::int64_t k) {
  if (k < 3 || k > e) throw DomainError("Harris-Tu degree needs 3 <= k <= e");
  Rational product = 1;
  for (std::int64_t t = 0; t <= e - k - 1; ++t) {
    product *= Rational(binomial(e + t, e - k - t), binomial(2 * t + 1, t));
  }
  if (!is_integer(product) || product <= 0) {
    throw ConsistencyError("Harris-Tu product is not a positive integer for e=" + std::to_string(e) +
                           ", k=" + std::to_string(k));
  }
  return boost::multiprecision::numerator(product);
}

struct QuadCase {
  std::int64_t g;
  std::int64_t n;
  std::int64_t k;
  auto operator<=>(const QuadCase&) const = default;
};

/// All (g, n, k) with g <= g_max, n >= 1, 4 <= k <= g - n and
/// q(g, g-n-1, 2g-2-n, k) = -1, in lexicographic order.
inline std::vector<QuadCase> enumerate_quad_cases(std::int64_t g_max) {
  std::vector<QuadCase> out;
  for (std::int64_t g = 1; g <= g_max; ++g)
    for (std::int64_t n = 1; n <= g - 4; ++n)
      for (std::int64_t k = 4; k <= g - n; ++k) {
        if (expected_dim_q(g, g - n - 1, 2 * g - 2 - n, k) == -1) out.push_back({g, n, k});
      }
  return out;
}

/// C(g+1,2) - C(g+1-k,2) - 3g + 2 == q(g, g-1, 2g-2, k); a regression check on
/// the canonical-curve fiber count.
inline bool fiber_dim_identity(std::int64_t g, std::int64_t k) {
  detail::require_nonnegative(g, "g");
  detail::require_nonnegative(k, "k");
  if (k > g + 1) throw DomainError("fiber identity needs k <= g + 1");
  const BigInt fiber = binomial(g + 1, 2) - binomial(g + 1 - k, 2) - 3 * BigInt(g) + 2;
  return fiber == detail::q_formula(g, g - 1, 2 * g - 2, k);
}

}  // namespace qmod::bn
