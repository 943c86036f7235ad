#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "qmod/arith/error.hpp"

namespace qmod {

// Expression templates off: `auto` must always hold a value, never a lazy expression.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// "num/den" in lowest terms, denominator positive; integers keep the "/1".
inline std::string to_fraction_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

/// Accepts "a/b" or a bare integer "a".
inline Rational parse_fraction(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw DomainError("empty integer in fraction '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw DomainError("malformed fraction '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw DomainError("malformed fraction '" + std::string(text) + "'");
    }
    return BigInt(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

inline bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

/// C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// The field of rationals. Elements are Boost rationals, always normalized.
struct RationalField {
  using value_type = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t n) const { return Rational(n); }
  bool is_zero(const Rational& a) const { return a == 0; }
  bool contains(const Rational&) const { return true; }
  Rational inv(const Rational& a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return 1 / a;
  }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  std::string to_string(const Rational& a) const { return to_fraction_string(a); }
  bool operator==(const RationalField&) const = default;
};

}  // namespace qmod
