#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdm/rational.hpp"

namespace tdm {

enum class Var { N, z, zeta, s, x };

inline std::string_view var_name(Var v) {
  switch (v) {
    case Var::N: return "N";
    case Var::z: return "z";
    case Var::zeta: return "zeta";
    case Var::s: return "s";
    case Var::x: return "x";
  }
  return "?";
}

inline Var parse_var(std::string_view name) {
  for (Var v : {Var::N, Var::z, Var::zeta, Var::s, Var::x}) {
    if (var_name(v) == name) return v;
  }
  throw Error("unknown indeterminate '" + std::string(name) + "'");
}

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The highest stored coefficient is nonzero unless the polynomial is zero.
class Poly {
 public:
  explicit Poly(Var v = Var::N) : var_(v) {}
  Poly(std::vector<Rational> coeffs, Var v) : coeffs_(std::move(coeffs)), var_(v) { trim(); }
  Poly(std::initializer_list<long> coeffs, Var v) : var_(v) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Poly constant(const Rational& c, Var v) { return Poly(std::vector<Rational>{c}, v); }
  static Poly monomial(const Rational& c, int degree, Var v) {
    std::vector<Rational> cs(static_cast<std::size_t>(degree) + 1);
    cs.back() = c;
    return Poly(std::move(cs), v);
  }
  static Poly identity(Var v) { return monomial(1, 1, v); }

  Var var() const { return var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Rational& leading() const { return coeffs_.back(); }

  /// Lowest power carrying a nonzero coefficient (-1 for the zero polynomial).
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return static_cast<int>(i);
    }
    return -1;
  }

  template <class T>
  T evaluate(const T& x) const {
    T acc = T(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }
  Rational operator()(const Rational& x) const { return evaluate(x); }

  Poly derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
    return Poly(std::move(out), var_);
  }

  /// p(t) -> p(t^m).
  Poly stretch(int m) const {
    if (is_zero()) return *this;
    std::vector<Rational> out(static_cast<std::size_t>(degree() * m) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(m)] = coeffs_[i];
    return Poly(std::move(out), var_);
  }

  /// Reversed coefficient list t^deg p(1/t).
  Poly reversed() const {
    std::vector<Rational> out(coeffs_.rbegin(), coeffs_.rend());
    return Poly(std::move(out), var_);
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this / leading();
  }

  Poly& operator+=(const Poly& o) {
    check_var(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_var(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }
  Poly& operator/=(const Rational& c) {
    if (c == 0) throw PoleError("zero denominator");
    for (auto& a : coeffs_) a /= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a /= c; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_var(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.var_);
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out), a.var_);
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      bool unit = (mag == 1) && i > 0;
      if (!unit) os << mag.get_str();
      if (i > 0) {
        if (!unit) os << "*";
        os << var_name(var_);
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  void check_var(const Poly& o) const {
    if (var_ != o.var_ && !is_zero() && !o.is_zero()) {
      throw std::invalid_argument("polynomials in different indeterminates");
    }
  }

  std::vector<Rational> coeffs_;
  Var var_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PoleError("zero denominator");
  Var v = a.is_zero() ? b.var() : a.var();
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly(v), a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db) + 1);
  Rational lead_inv = 1 / b.leading();
  for (int i = da - db; i >= 0; --i) {
    Rational q = rem[static_cast<std::size_t>(i + db)] * lead_inv;
    quo[static_cast<std::size_t>(i)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo), v), Poly(std::move(rem), v)};
}

/// Monic greatest common divisor (zero only if both inputs are zero).
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace tdm
