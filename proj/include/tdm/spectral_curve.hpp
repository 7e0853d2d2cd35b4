#pragma once

#include "tdm/bigfloat.hpp"
#include "tdm/poly.hpp"
#include "tdm/series.hpp"

namespace tdm {

/// a + b*sqrt(2), exact.
struct QuadSurd {
  Rational a;
  Rational b;

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) { return {x.a + y.a, x.b + y.b}; }
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return {x.a - y.a, x.b - y.b}; }
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QuadSurd& x, const QuadSurd& y) { return x.a == y.a && x.b == y.b; }
  bool is_zero() const { return a == 0 && b == 0; }

  BigFloat to_bigfloat(mpfr_prec_t bits) const {
    return BigFloat(a, bits) + BigFloat(b, bits) * sqrt(BigFloat(2L, bits));
  }
};

/// y(z) = z^2 - 6z + 1, vanishing at the band edges 3 -/+ 2 sqrt(2).
struct SpectralCurve {
  static Poly y() { return Poly({1, -6, 1}, Var::z); }
  static Poly y_prime() { return Poly({-6, 2}, Var::z); }

  static QuadSurd lower_edge() { return {3, -2}; }
  static QuadSurd upper_edge() { return {3, 2}; }

  static QuadSurd evaluate(const QuadSurd& x) {
    return x * x - QuadSurd{6, 0} * x + QuadSurd{1, 0};
  }

  static TruncSeries y_series(int order) { return TruncSeries::from_poly(y(), order); }
  static TruncSeries sqrt_y_series(int order) { return series_sqrt(y_series(order)); }
  /// y^(e/2) as a series, e any integer.
  static TruncSeries y_half_power(int e, int order) { return series_pow(y_series(order), ratio(e, 2)); }
};

}  // namespace tdm
