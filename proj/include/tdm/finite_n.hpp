#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tdm/ratfunc.hpp"
#include "tdm/series.hpp"
#include "tdm/symmetry.hpp"

namespace tdm {

/// tau_k (or the auxiliary b_k) as an exact rational function of N.
struct MomentRatFunc {
  SymmetryClass beta;
  int k;
  RatFunc value;
};

namespace detail {

inline RatFunc n_poly(std::initializer_list<long> coeffs) { return RatFunc(Poly(coeffs, Var::N)); }
inline RatFunc n_const(const Rational& c) { return RatFunc(c, Var::N); }

}  // namespace detail

/// tau_0..tau_{k_max} for beta = 2 from the three-term recursion
/// (N^2-k^2)(k+1) tau_{k+1} = 3N^2(2k-1) tau_k - N^2(k-2) tau_{k-1}.
inline std::vector<MomentRatFunc> tau_beta2_symbolic(int k_max) {
  using detail::n_const;
  using detail::n_poly;
  const auto beta = SymmetryClass::unitary();
  std::vector<MomentRatFunc> out;
  if (k_max < 0) return out;
  out.push_back({beta, 0, n_const(1)});
  if (k_max >= 1) out.push_back({beta, 1, n_const(1)});
  const RatFunc n2 = n_poly({0, 0, 1});
  for (int k = 1; k < k_max; ++k) {
    RatFunc rhs = n2 * n_const(3 * (2 * k - 1)) * out[k].value - n2 * n_const(k - 2) * out[k - 1].value;
    RatFunc coef = n_poly({-static_cast<long>(k) * k, 0, 1}) * n_const(k + 1);
    out.push_back({beta, k + 1, rhs / coef});
  }
  return out;
}

struct Beta1Moments {
  std::vector<MomentRatFunc> taus;
  std::vector<MomentRatFunc> bs;
};

/// tau_0..tau_{k_max} for beta = 1 together with the auxiliary b_0..b_{k_max}.
inline Beta1Moments tau_beta1_symbolic(int k_max) {
  using detail::n_const;
  using detail::n_poly;
  const auto beta = SymmetryClass::orthogonal();
  Beta1Moments out;
  if (k_max < 0) return out;
  const RatFunc n2 = n_poly({0, 0, 1});

  out.bs.push_back({beta, 0, ratfunc_reduce(Poly({-1, 1}, Var::N), Poly({0, 1}, Var::N))});
  if (k_max >= 1) out.bs.push_back({beta, 1, ratfunc_reduce(Poly({-1, 1}, Var::N), Poly({1, 1}, Var::N))});
  for (int k = 1; k < k_max; ++k) {
    // ((N+1)^2 - k^2)(k+1) b_{k+1} = (3N-1)(2k-1) N b_k - (k-2) N^2 b_{k-1}
    RatFunc rhs = n_poly({0, -1, 3}) * n_const(2 * k - 1) * out.bs[k].value -
                  n2 * n_const(k - 2) * out.bs[k - 1].value;
    RatFunc coef = n_poly({1 - static_cast<long>(k) * k, 2, 1}) * n_const(k + 1);
    out.bs.push_back({beta, k + 1, rhs / coef});
  }

  out.taus.push_back({beta, 0, n_const(1)});
  if (k_max >= 1) out.taus.push_back({beta, 1, n_const(1)});
  for (int k = 1; k < k_max; ++k) {
    // (4k(k+1)+1-(N+1)^2) tau_{k+1} = 3/(k+1) ((k+3N) N b_k - N^2 b_{k-1}) - 6N^2 tau_k + N^2 tau_{k-1}
    RatFunc inhom = n_const(ratio(3, k + 1)) *
                    (n_poly({0, k, 3}) * out.bs[k].value - n2 * out.bs[k - 1].value);
    RatFunc rhs = inhom - n2 * n_const(6) * out.taus[k].value + n2 * out.taus[k - 1].value;
    RatFunc coef = n_poly({4L * k * (k + 1), -2, -1});
    out.taus.push_back({beta, k + 1, rhs / coef});
  }
  return out;
}

namespace detail {

inline void require_closed_form_range(long k, long n) {
  if (k < 1) throw Error("moment index must be positive");
  if (n < 1 || n < k) throw PoleError("moment diverges or Gamma argument non-positive");
}

}  // namespace detail

/// Positive-term N-sum for tau_k^(2) at integer N; all Gamma ratios are integer products.
inline Rational tau_exact_sum_ms(long k, long n) {
  detail::require_closed_form_range(k, n);
  Rational sum = 0;
  for (long j = 0; j <= n - 1; ++j) {
    Integer binoms = binomial(static_cast<unsigned long>(k + j - 1), static_cast<unsigned long>(k - 1)) *
                     binomial(static_cast<unsigned long>(k + j), static_cast<unsigned long>(k - 1));
    sum += Rational(binoms) * gamma_ratio(2 * n - k - j, n - j);
  }
  Integer npow;
  mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k - 1));
  return sum * gamma_ratio(n + 1, 2 * n) * Rational(npow) / Rational(k);
}

/// Alternating k-term sum for tau_k^(2) at integer N.
inline Rational tau_exact_sum_nov(long k, long n) {
  detail::require_closed_form_range(k, n);
  Rational sum = 0;
  for (long j = 0; j <= k - 1; ++j) {
    Rational term = Rational(binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(j))) *
                    gamma_ratio(n - j + k, n - j) * gamma_ratio(n + j + 1 - k, n + j + 1);
    if (j % 2 == 0) sum += term;
    else sum -= term;
  }
  Integer npow;
  mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k - 1));
  return sum * Rational(npow) / Rational(factorial(static_cast<unsigned long>(k)));
}

// ---------------------------------------------------------------------------
// Wishart moments D_N(k, alpha) = E[Tr W^k], k any integer.

struct WishartMomentQuery {
  SymmetryClass beta;
  long k;
  Rational alpha;
  long n;
};

namespace detail {

inline Rational field_const(long c, const Rational&) { return Rational(c); }
inline RatFunc field_const(long c, const RatFunc& like) { return RatFunc(Rational(c), like.var()); }

/// Values of a moment sequence on the integer window [lo, hi].
template <class F>
class MomentWindow {
 public:
  MomentWindow(long lo, long hi, const F& fill) : lo_(lo), values_(static_cast<std::size_t>(hi - lo + 1), fill) {}
  F& operator[](long k) { return values_.at(static_cast<std::size_t>(k - lo_)); }
  const F& operator[](long k) const { return values_.at(static_cast<std::size_t>(k - lo_)); }

 private:
  long lo_;
  std::vector<F> values_;
};

template <class F>
void require_nonsingular(const F& coef, long k) {
  if (is_zero(coef)) {
    throw PoleError("singular recursion coefficient at k = " + std::to_string(k));
  }
}

/// Complex Wishart moments on [lo, hi] (lo <= 0, hi >= 1).
template <class F>
MomentWindow<F> beta2_window(const F& n, const F& alpha, long lo, long hi) {
  auto c = [&](long v) -> F { return field_const(v, n); };
  MomentWindow<F> d(lo, hi, c(0));
  d[0] = n;
  d[1] = n * (n + alpha);
  const F a2n = alpha + c(2) * n;
  for (long k = 1; k < hi; ++k) {
    // (k+2) D(k+1) = (2k+1)(alpha+2N) D(k) + (k-1)(k^2-alpha^2) D(k-1)
    d[k + 1] = (c(2 * k + 1) * a2n * d[k] + c(k - 1) * (c(k * k) - alpha * alpha) * d[k - 1]) / c(k + 2);
  }
  for (long k = 0; k > lo; --k) {
    F coef = c(k - 1) * (c(k * k) - alpha * alpha);
    require_nonsingular(coef, k);
    d[k - 1] = (c(k + 2) * d[k + 1] - c(2 * k + 1) * a2n * d[k]) / coef;
  }
  return d;
}

/// Real Wishart moments on [lo, hi]; `complex_prev` holds D^(2)_{N-1} on a window covering [lo, hi].
template <class F>
MomentWindow<F> beta1_window(const F& n, const F& alpha, long lo, long hi, const MomentWindow<F>& complex_prev) {
  auto c = [&](long v) -> F { return field_const(v, n); };
  MomentWindow<F> d(lo, hi, c(0));
  d[0] = n;
  d[1] = n * (n + alpha);
  if (hi >= 2) d[2] = n * (n + alpha) * (c(2) * n + alpha + c(1));
  const F lin = c(2) * (alpha - c(1)) + c(4) * n;
  auto inhom = [&](long k) -> F {
    // 3/(k-1) ((alpha+2N-k-1) D2(k) - D2(k+1))
    return (c(3) / c(k - 1)) * ((alpha + c(2) * n - c(k + 1)) * complex_prev[k] - complex_prev[k + 1]);
  };
  auto quad = [&](long k) -> F { return c(1) - alpha * alpha + c(4 * k * (k - 1)); };
  for (long k = 2; k < hi; ++k) {
    d[k + 1] = lin * d[k] + quad(k) * d[k - 1] + inhom(k);
  }
  for (long k = 0; k > lo; --k) {
    F coef = quad(k);
    require_nonsingular(coef, k);
    d[k - 1] = (d[k + 1] - lin * d[k] - inhom(k)) / coef;
  }
  return d;
}

}  // namespace detail

/// D_N^(beta)(k, alpha) in any field holding N and alpha (Rational, or RatFunc in N).
/// For beta = 1 with N - 1 == 0 the complex size-0 ensemble is taken as identically zero.
template <class F>
F wishart_moment_generic(SymmetryClass beta, long k, const F& n, const F& alpha) {
  long lo = std::min(k, 0L);
  long hi = std::max(k, 1L);
  if (beta.beta() == 2) return detail::beta2_window(n, alpha, lo, hi)[k];
  const F one = detail::field_const(1, n);
  const F n_prev = n - one;
  long hi2 = hi + 1;
  detail::MomentWindow<F> prev(lo, hi2, detail::field_const(0, n));
  if (!is_zero(n_prev)) prev = detail::beta2_window(n_prev, alpha, lo, hi2);
  return detail::beta1_window(n, alpha, lo, hi, prev)[k];
}

inline bool wishart_uses_empty_complex_ensemble(const WishartMomentQuery& q) {
  return q.beta.beta() == 1 && q.n == 1;
}

/// Exact D_N^(beta)(k, alpha) at integer N and rational alpha.
inline Rational wishart_moment(const WishartMomentQuery& q) {
  if (q.n < 1) throw Error("matrix size N must be positive");
  if (q.k < 0 && q.alpha <= 0) {
    throw PoleError("negative moments require alpha > 0 (moment diverges)");
  }
  return wishart_moment_generic(q.beta, q.k, Rational(q.n), q.alpha);
}

/// Series in s of M_N^(2)(s) = N(alpha+N) 2F1(1-alpha-N, 1-N; 2; s^2) (1-s)^-(alpha+2N).
inline TruncSeries wishart_mgf_series(const Rational& alpha, long n, int order) {
  if (n < 1) throw Error("matrix size N must be positive");
  TruncSeries hyper(order, Var::s);
  const Rational a = 1 - alpha - n;
  const Rational b = 1 - n;
  Rational term = 1;
  for (long m = 0; 2 * m <= order && m <= n - 1; ++m) {
    hyper[static_cast<int>(2 * m)] = term;
    term *= (a + m) * (b + m) / ((2 + m) * Rational(m + 1));
  }
  TruncSeries binom(order, Var::s);
  const Rational c = alpha + 2 * n;
  Rational coef = 1;
  for (int m = 0; m <= order; ++m) {
    binom[m] = coef;
    coef *= (c + m) / Rational(m + 1);
  }
  return hyper * binom * (Rational(n) * (alpha + n));
}

/// D(1..k_max) read off the MGF series: D(k) = (k-1)! [s^(k-1)] M(s).
inline std::vector<Rational> wishart_positive_moments_from_mgf(const Rational& alpha, long n, int k_max) {
  TruncSeries m = wishart_mgf_series(alpha, n, k_max - 1);
  std::vector<Rational> out;
  for (int k = 1; k <= k_max; ++k) out.push_back(m[k - 1] * Rational(factorial(static_cast<unsigned long>(k - 1))));
  return out;
}

/// Left side of the second-order ODE for M_N^(2) applied to the series; zero when consistent.
inline TruncSeries wishart_mgf_ode_residual(const Rational& alpha, long n, int order) {
  TruncSeries m = wishart_mgf_series(alpha, n, order);
  const Rational c = alpha + 2 * n;
  Poly p2(std::vector<Rational>{0, 1, 0, -1}, Var::s);           // s(1-s^2)
  Poly p1(std::vector<Rational>{3, -2 * c, -5}, Var::s);          // 3 - 2c s - 5 s^2
  Poly p0(std::vector<Rational>{-3 * c, alpha * alpha - 4}, Var::s);  // -(3c + (4-alpha^2) s)
  TruncSeries d1 = m.derivative();
  TruncSeries d2 = d1.derivative();
  return d2 * p2 + d1 * p1 + m * p0;
}

}  // namespace tdm
