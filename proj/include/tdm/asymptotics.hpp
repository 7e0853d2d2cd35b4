#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdm/bigfloat.hpp"
#include "tdm/coeffs.hpp"
#include "tdm/genfun.hpp"

namespace tdm {

enum class AsympKind { A, B };

struct AsympConstant {
  AsympKind kind;
  int index;
  std::optional<Rational> exact;
  BigFloat numeric;
  int digits;
};

/// B_k = P_k(w) / prod_{j=0}^{k-2} (1 - j^2 w) with w = (k-1)^-2.
inline Rational b_constant(int k) {
  if (k <= 1) throw Error("degenerate index");
  Rational w = ratio(1, static_cast<long>(k - 1) * (k - 1));
  Rational den = 1;
  for (int j = 1; j <= k - 2; ++j) den *= 1 - Rational(static_cast<long>(j) * j) * w;
  return p_polynomial(k)(w) / den;
}

/// Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi).
inline BigFloat gamma_half_integer(int n, mpfr_prec_t bits) {
  Integer four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
  Rational q = make_rational(factorial(2 * n), four_n * factorial(n));
  return BigFloat(q, bits) * sqrt(BigFloat::pi(bits));
}

/// A_g = (sqrt(32) r)^((1-6g)/2) R_{2g}(r) / Gamma((6g-1)/2), r = 3 - sqrt(8).
inline BigFloat a_constant_value(const Poly& r2g, int g, int digits) {
  if (g < 1) throw Error("A_g needs g >= 1");
  if (digits < 1) throw Error("digits must be positive");
  mpfr_prec_t bits = BigFloat::bits_for_digits(digits);
  BigFloat r = SpectralCurve::lower_edge().to_bigfloat(bits);
  BigFloat base = sqrt(BigFloat(32L, bits)) * r;
  BigFloat rv(bits);
  for (int j = r2g.degree(); j >= 0; --j) rv = rv * r + BigFloat(r2g.coeff(j), bits);
  BigFloat scale = sqrt(pow(base, 1 - 6 * g));
  return scale * rv / gamma_half_integer(3 * g - 1, bits);
}

inline BigFloat a_constant(int g, int digits = 50) {
  if (g < 1) throw Error("A_g needs g >= 1");
  return a_constant_value(r_polynomial(2 * g, 2).poly, g, digits);
}

inline AsympConstant asymp_a(int g, int digits = 50) { return {AsympKind::A, g, std::nullopt, a_constant(g, digits), digits}; }

inline AsympConstant asymp_b(int k, int digits = 50) {
  Rational b = b_constant(k);
  return {AsympKind::B, k, b, BigFloat(b, BigFloat::bits_for_digits(digits)), digits};
}

enum class Direction { k_to_inf, g_to_inf };

struct RatioPoint {
  int index;
  std::optional<Rational> exact;
  BigFloat value;
};

struct RatioReport {
  Direction direction;
  int fixed_index;
  std::vector<RatioPoint> points;
  bool monotone_toward_one = true;  // |ratio - 1| non-increasing along the range
};

/// g_to_inf: tau_{k,2g} / (B_k (k-1)^(2g)) for g in [lo, hi], k fixed (exact).
/// k_to_inf: tau_{k,2g} / (A_g k^((6g-3)/2) r^-k) for k in [lo, hi], g fixed.
inline RatioReport ratio_diagnostics(Direction dir, int fixed, int lo, int hi, int digits = 50) {
  if (lo > hi || lo < 0) throw Error("empty or negative diagnostic range");
  RatioReport rep{dir, fixed, {}, true};
  mpfr_prec_t bits = BigFloat::bits_for_digits(digits);
  if (dir == Direction::g_to_inf) {
    Rational b = b_constant(fixed);
    CoeffTable t = coeff_table_beta2(fixed, 2 * hi);
    Integer base = fixed - 1;
    for (int g = lo; g <= hi; ++g) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(2 * g));
      Rational q = t.at(fixed, 2 * g) / (b * p);
      rep.points.push_back({g, q, BigFloat(q, bits)});
    }
  } else {
    if (fixed < 1) throw Error("A_g needs g >= 1");
    CoeffTable t = coeff_table_beta2(hi, 2 * fixed);
    Poly r2g = t.k_max() >= 4 * fixed - 2 ? r_polynomial(t, 2 * fixed, 0).poly : r_polynomial(2 * fixed, 0).poly;
    BigFloat a = a_constant_value(r2g, fixed, digits);
    BigFloat r = SpectralCurve::lower_edge().to_bigfloat(bits);
    for (int k = lo; k <= hi; ++k) {
      BigFloat kk(static_cast<long>(k), bits);
      BigFloat pred = a * sqrt(pow(kk, 6 * fixed - 3)) * pow(r, -static_cast<long>(k));
      rep.points.push_back({k, std::nullopt, BigFloat(t.at(k, 2 * fixed), bits) / pred});
    }
  }
  BigFloat one(1L, bits);
  for (std::size_t i = 1; i < rep.points.size(); ++i) {
    if (abs(rep.points[i].value - one) > abs(rep.points[i - 1].value - one)) rep.monotone_toward_one = false;
  }
  return rep;
}

}  // namespace tdm
