#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "tdm/rational.hpp"

namespace tdm {

/// Minimal RAII handle on an MPFR real. Results take the larger operand precision.
class BigFloat {
 public:
  static mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
  }

  explicit BigFloat(mpfr_prec_t bits = 256) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(const Rational& q, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(long n, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept : BigFloat(mpfr_prec_t{MPFR_PREC_MIN}) { mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  static BigFloat pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  friend BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow(const BigFloat& a, long n) {
    BigFloat r(a.precision());
    mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat log(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

#define TDM_BIGFLOAT_BINOP(op, fn)                                       \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {    \
    BigFloat r(std::max(a.precision(), b.precision()));                  \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                     \
    return r;                                                            \
  }
  TDM_BIGFLOAT_BINOP(+, mpfr_add)
  TDM_BIGFLOAT_BINOP(-, mpfr_sub)
  TDM_BIGFLOAT_BINOP(*, mpfr_mul)
  TDM_BIGFLOAT_BINOP(/, mpfr_div)
#undef TDM_BIGFLOAT_BINOP

  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const {
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace tdm
