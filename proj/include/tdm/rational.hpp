#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "tdm/errors.hpp"

namespace tdm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den; throws on a zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PoleError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Canonical a/b from machine integers.
inline Rational ratio(long num, long den) { return make_rational(Integer(num), Integer(den)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

inline bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses "a" or "a/b" (decimal, optional sign on a).
inline Integer parse_integer(std::string_view text) {
  if (!detail::is_decimal_integer(text)) {
    throw Error("malformed integer '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

/// Gamma(a)/Gamma(b) for positive integers a, b as an exact rational.
inline Rational gamma_ratio(long a, long b) {
  if (a <= 0 || b <= 0) throw PoleError("Gamma argument non-positive");
  Integer prod = 1;
  if (a >= b) {
    for (long i = b; i < a; ++i) prod *= i;
    return Rational(prod);
  }
  for (long i = a; i < b; ++i) prod *= i;
  return make_rational(1, prod);
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace tdm
