#pragma once

#include <algorithm>
#include <utility>

#include "tdm/spectral_curve.hpp"

namespace tdm {

/// a(z) + b(z) sqrt(y(z)) with sqrt(y(0)) = +1, both parts truncated series.
class AlgebraicSeries {
 public:
  AlgebraicSeries() = default;
  AlgebraicSeries(TruncSeries a, TruncSeries b) : a_(std::move(a)), b_(std::move(b)) {}

  /// Plain series viewed as a + 0*sqrt(y).
  static AlgebraicSeries plain(const TruncSeries& s) {
    return AlgebraicSeries(s, TruncSeries::constant(0, s.order()));
  }

  const TruncSeries& rational_part() const { return a_; }
  const TruncSeries& radical_part() const { return b_; }
  int order() const { return std::min(a_.order(), b_.order()); }

  /// a + b*sqrt(y) expanded as one series.
  TruncSeries expand() const {
    int n = order();
    return a_.truncated(n) + b_.truncated(n) * SpectralCurve::sqrt_y_series(n);
  }

  friend AlgebraicSeries operator+(const AlgebraicSeries& x, const AlgebraicSeries& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend AlgebraicSeries operator-(const AlgebraicSeries& x, const AlgebraicSeries& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend AlgebraicSeries operator*(const AlgebraicSeries& x, const AlgebraicSeries& w) {
    int n = std::min(x.order(), w.order());
    TruncSeries yy = SpectralCurve::y_series(n);
    return {x.a_ * w.a_ + x.b_ * w.b_ * yy, x.a_ * w.b_ + x.b_ * w.a_};
  }
  friend AlgebraicSeries operator*(const AlgebraicSeries& x, const Rational& c) { return {x.a_ * c, x.b_ * c}; }
  friend AlgebraicSeries operator*(const AlgebraicSeries& x, const Poly& p) { return {x.a_ * p, x.b_ * p}; }
  friend AlgebraicSeries operator*(const Poly& p, const AlgebraicSeries& x) { return x * p; }

  /// Multiplication by y^(e/2).
  AlgebraicSeries times_y_half_power(int e) const {
    int n = order();
    int whole = e >= 0 ? e / 2 : -((-e + 1) / 2);
    TruncSeries f = SpectralCurve::y_half_power(2 * whole, n);
    TruncSeries a = a_.truncated(n) * f;
    TruncSeries b = b_.truncated(n) * f;
    if (e - 2 * whole == 0) return {a, b};
    // sqrt(y) * (a + b sqrt(y)) = b y + a sqrt(y)
    return {b * SpectralCurve::y_series(n), a};
  }

  /// (a + b s)' = a' + (b' + b y'/(2y)) s with s = sqrt(y).
  AlgebraicSeries derivative() const {
    int n = order();
    TruncSeries b = b_.truncated(n);
    TruncSeries inv_y = series_inverse(SpectralCurve::y_series(n));
    TruncSeries extra = b * SpectralCurve::y_prime() * inv_y * ratio(1, 2);
    return {a_.derivative(), b.derivative() + extra};
  }

  /// Antiderivative vanishing at 0, returned in plain form (radical part zero).
  AlgebraicSeries integrate() const { return plain(series_integrate(expand())); }

 private:
  TruncSeries a_;
  TruncSeries b_;
};

}  // namespace tdm
