#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tdm/poly.hpp"
#include "tdm/series.hpp"

namespace tdm {

/// Reduced ratio num/den of polynomials in one indeterminate; den is monic.
class RatFunc {
 public:
  explicit RatFunc(Var v = Var::N) : num_(v), den_(Poly::constant(1, v)) {}
  RatFunc(const Poly& p) : num_(p), den_(Poly::constant(1, p.var())) {}  // NOLINT: implicit by design of the field embedding
  RatFunc(const Rational& c, Var v) : num_(Poly::constant(c, v)), den_(Poly::constant(1, v)) {}

  /// Builds the canonical reduced form of num/den.
  static RatFunc reduce(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw PoleError("zero denominator");
    RatFunc r(den.var());
    if (num.is_zero()) return r;
    Poly g = gcd(num, den);
    Poly n = divmod(num, g).first;
    Poly d = divmod(den, g).first;
    Rational lead = d.leading();
    r.num_ = n / lead;
    r.den_ = d / lead;
    return r;
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  Var var() const { return num_.is_zero() ? den_.var() : num_.var(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Exact value at x; a vanishing denominator raises PoleError.
  Rational evaluate(const Rational& x) const {
    Rational d = den_(x);
    if (d == 0) {
      throw PoleError("pole at " + std::string(var_name(var())) + " = " + x.get_str());
    }
    return num_(x) / d;
  }
  Rational operator()(const Rational& x) const { return evaluate(x); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return reduce(a.num_ + b.num_, a.den_);
    return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return reduce(a.num_ - b.num_, a.den_);
    return reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return reduce(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw PoleError("zero denominator");
    return reduce(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

 private:
  Poly num_;
  Poly den_;
};

inline RatFunc ratfunc_reduce(const Poly& num, const Poly& den) { return RatFunc::reduce(num, den); }

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline bool is_zero(const Rational& q) { return q == 0; }

/// Coefficients c_0..c_{g_max} of r(N) = sum_g c_g N^-g + O(N^-(g_max+1)).
/// Requires deg num <= deg den.
inline std::vector<Rational> expand_in_invN(const RatFunc& r, int g_max) {
  if (r.den().is_zero()) throw PoleError("zero denominator");
  std::vector<Rational> out(static_cast<std::size_t>(g_max) + 1);
  if (r.is_zero() || g_max < 0) return out;
  int shift = r.den().degree() - r.num().degree();
  if (shift < 0) throw Error("expansion in 1/N starts at a positive power of N");
  if (shift > g_max) return out;
  int n = g_max - shift;
  TruncSeries num = TruncSeries::from_poly(r.num().reversed(), n);
  TruncSeries den = TruncSeries::from_poly(r.den().reversed(), n);
  TruncSeries q = num / den;
  for (int g = shift; g <= g_max; ++g) out[static_cast<std::size_t>(g)] = q[g - shift];
  return out;
}

}  // namespace tdm
