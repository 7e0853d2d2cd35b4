#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tdm/poly.hpp"
#include "tdm/rational.hpp"

namespace tdm {

/// Power series known exactly through z^order; higher coefficients are unknown.
/// order() == -1 means no coefficient is known.
class TruncSeries {
 public:
  explicit TruncSeries(int order = -1, Var v = Var::z)
      : coeffs_(static_cast<std::size_t>(std::max(order, -1) + 1)), var_(v) {}
  TruncSeries(std::vector<Rational> coeffs, Var v) : coeffs_(std::move(coeffs)), var_(v) {}

  /// Polynomial viewed as a series, truncated at `order`.
  static TruncSeries from_poly(const Poly& p, int order) {
    TruncSeries s(order, p.var());
    for (int i = 0; i <= order; ++i) s.coeffs_[static_cast<std::size_t>(i)] = p.coeff(i);
    return s;
  }
  static TruncSeries constant(const Rational& c, int order, Var v = Var::z) {
    TruncSeries s(order, v);
    if (order >= 0) s.coeffs_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Var var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  const Rational& operator[](int i) const {
    if (i < 0 || i > order()) throw std::out_of_range("coefficient beyond truncation order");
    return coeffs_[static_cast<std::size_t>(i)];
  }
  Rational& operator[](int i) {
    if (i < 0 || i > order()) throw std::out_of_range("coefficient beyond truncation order");
    return coeffs_[static_cast<std::size_t>(i)];
  }

  /// Same series with fewer known coefficients.
  TruncSeries truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (order + 1)), var_);
  }

  /// Multiplication by z^m for m >= 0; division by z^m for m < 0 (low terms must vanish).
  TruncSeries shifted(int m) const {
    if (order() < 0) return TruncSeries(order() + m < -1 ? -1 : order() + m, var_);
    if (m >= 0) {
      std::vector<Rational> out(static_cast<std::size_t>(m));
      out.insert(out.end(), coeffs_.begin(), coeffs_.end());
      return TruncSeries(std::move(out), var_);
    }
    int drop = -m;
    for (int i = 0; i < std::min(drop, order() + 1); ++i) {
      if (coeffs_[static_cast<std::size_t>(i)] != 0) throw std::domain_error("series not divisible by z^m");
    }
    if (drop > order()) return TruncSeries(-1, var_);
    return TruncSeries(std::vector<Rational>(coeffs_.begin() + drop, coeffs_.end()), var_);
  }

  TruncSeries derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
    return TruncSeries(std::move(out), var_);
  }

  TruncSeries& operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }
  friend TruncSeries operator*(TruncSeries s, const Rational& c) { return s *= c; }
  friend TruncSeries operator*(const Rational& c, TruncSeries s) { return s *= c; }
  friend TruncSeries operator-(TruncSeries s) { return s *= Rational(-1); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncSeries out(n, a.var_);
    for (int i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncSeries out(n, a.var_);
    for (int i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncSeries out(n, a.var_);
    for (int i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  /// A polynomial factor p with valuation v extends the known range by v.
  friend TruncSeries operator*(const TruncSeries& a, const Poly& p) {
    if (p.is_zero()) return TruncSeries(a.order(), a.var_);
    int v = p.valuation();
    int n = a.order() + v;
    TruncSeries out(n, a.var_);
    for (int i = v; i <= p.degree(); ++i) {
      const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      for (int j = 0; i + j <= n; ++j) out.coeffs_[i + j] += c * a.coeffs_[j];
    }
    return out;
  }
  friend TruncSeries operator*(const Poly& p, const TruncSeries& a) { return a * p; }

  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  /// Equal coefficients on the common known range.
  bool agrees_with(const TruncSeries& o) const {
    int n = std::min(order(), o.order());
    for (int i = 0; i <= n; ++i) {
      if (coeffs_[i] != o.coeffs_[i]) return false;
    }
    return true;
  }
  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
  Var var_;
};

/// Multiplicative inverse; the constant term must be nonzero.
inline TruncSeries series_inverse(const TruncSeries& f) {
  if (f.order() < 0) return f;
  if (f[0] == 0) throw PoleError("series inverse: zero constant term");
  int n = f.order();
  TruncSeries g(n, f.var());
  Rational inv0 = 1 / f[0];
  g[0] = inv0;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int j = 1; j <= m; ++j) acc += f[j] * g[m - j];
    g[m] = -acc * inv0;
  }
  return g;
}

inline TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return a * series_inverse(b); }

/// f^a for rational a and f(0) = 1, branch with value 1 at the origin.
inline TruncSeries series_pow(const TruncSeries& f, const Rational& a) {
  if (f.order() < 0) return f;
  if (f[0] != 1) throw Error("branch undefined");
  int n = f.order();
  TruncSeries g(n, f.var());
  g[0] = 1;
  // n g_n = sum_{j=1}^n ((a+1) j - n) f_j g_{n-j}, from f g' = a f' g.
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int j = 1; j <= m; ++j) {
      if (f[j] == 0) continue;
      acc += ((a + 1) * j - m) * f[j] * g[m - j];
    }
    g[m] = acc / m;
  }
  return g;
}

/// Square root with g(0) = +1.
inline TruncSeries series_sqrt(const TruncSeries& f) {
  if (f.order() < 0) return f;
  if (f[0] != 1) throw Error("branch undefined");
  int n = f.order();
  TruncSeries g(n, f.var());
  g[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = f[m];
    for (int j = 1; j < m; ++j) acc -= g[j] * g[m - j];
    g[m] = acc / 2;
  }
  return g;
}

/// Antiderivative vanishing at 0; order grows by one.
inline TruncSeries series_integrate(const TruncSeries& f) {
  TruncSeries out(f.order() + 1, f.var());
  for (int i = 0; i <= f.order(); ++i) out[i + 1] = f[i] / (i + 1);
  return out;
}

}  // namespace tdm
