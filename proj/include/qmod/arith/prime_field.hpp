#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <string>

#include "qmod/arith/error.hpp"

namespace qmod {

/// 2^61 - 1.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

namespace detail {

__extension__ using u128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases are exact below 3.3e24.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : bases) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Residue modulo a prime. The modulus travels with the value so that
/// arithmetic between different fields is caught instead of silently wrapping.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    check_same(a, b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(s, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    check_same(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.p_ - (b.v_ - a.v_), a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check_same(a, b);
    return raw(detail::mulmod(a.v_, b.v_, a.p_), a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }
  Fp& operator/=(const Fp& b) { return *this = *this / b; }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  Fp pow(std::uint64_t e) const { return raw(detail::powmod(v_, e, p_), p_); }
  Fp inv() const {
    if (v_ == 0) throw DomainError("inverse of zero in F_p");
    return pow(p_ - 2);
  }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  static void check_same(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_) {
      throw DomainError("mixed-field arithmetic: F_" + std::to_string(a.p_) + " and F_" +
                        std::to_string(b.p_));
    }
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 1;
};

/// Uniform integer in [0, bound) from a 64-bit engine by masked rejection, so
/// draws are reproducible across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below: empty range");
  const int width = std::bit_width(bound - 1);
  const std::uint64_t mask = width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  for (;;) {
    const std::uint64_t x = rng() & mask;
    if (x < bound) return x;
  }
}

class PrimeField {
 public:
  using value_type = Fp;

  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
    if (p_ < 3 || !is_prime_u64(p_)) {
      throw ConfigurationError("modulus " + std::to_string(p_) + " is not an odd prime");
    }
    if (p_ >= (std::uint64_t{1} << 63)) {
      throw ConfigurationError("modulus must be below 2^63");
    }
  }

  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(std::int64_t n) const {
    if (n >= 0) return Fp(static_cast<std::uint64_t>(n), p_);
    return -Fp(static_cast<std::uint64_t>(-(n + 1)) + 1, p_);
  }
  bool is_zero(const Fp& a) const { return a.value() == 0; }
  bool contains(const Fp& a) const { return a.modulus() == p_; }
  Fp inv(const Fp& a) const { return a.inv(); }
  Fp random(std::mt19937_64& rng) const { return Fp(uniform_below(rng, p_), p_); }
  Fp random_nonzero(std::mt19937_64& rng) const { return Fp(1 + uniform_below(rng, p_ - 1), p_); }

  /// Throws unless p > bound; `what` names the computation needing it.
  void require_above(std::uint64_t bound, const std::string& what) const {
    if (p_ <= bound) {
      throw ConfigurationError(what + " needs a prime above " + std::to_string(bound) +
                               ", got " + std::to_string(p_));
    }
  }

  std::string name() const { return "F_" + std::to_string(p_); }
  std::string to_string(const Fp& a) const { return std::to_string(a.value()); }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

}  // namespace qmod
