#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tdm/algebraic_series.hpp"
#include "tdm/coeffs.hpp"
#include "tdm/gf_seeds.hpp"
#include "tdm/ratfunc.hpp"

namespace tdm {

enum class FamilyKind { P, R };

/// P_k(zeta) or R_g(z). For R, coefficients are a_{g,0..2g-2}.
struct PolyFamily {
  FamilyKind kind;
  int index;
  Poly poly;

  std::vector<Rational> coefficients() const {
    int top = kind == FamilyKind::R ? 2 * index - 2 : poly.degree();
    std::vector<Rational> out;
    for (int j = 0; j <= top; ++j) out.push_back(poly.coeff(j));
    return out;
  }
};

// ---------------------------------------------------------------------------
// J_k^(2)(zeta) = P_k(zeta^2) / prod_{j<k} (1 - j^2 zeta^2)

/// P_0..P_{k_max} from k P_k = 3(2k-3) P_{k-1} - (k-3)(1-(k-2)^2 zeta) P_{k-2}.
inline std::vector<Poly> p_polynomials(int k_max) {
  std::vector<Poly> out;
  for (int k = 0; k <= k_max; ++k) {
    if (k <= 1) {
      out.push_back(Poly::constant(1, Var::zeta));
      continue;
    }
    Poly factor(std::vector<Rational>{Rational(k - 3), Rational(-static_cast<long>(k - 3) * (k - 2) * (k - 2))},
                Var::zeta);
    Poly next = out[k - 1] * Rational(3 * (2 * k - 3)) - factor * out[k - 2];
    out.push_back(next / Rational(k));
  }
  return out;
}

inline Poly p_polynomial(int k) {
  if (k < 0) throw Error("negative polynomial index");
  return p_polynomials(k).back();
}

inline Rational j_eval(int k, const Rational& zeta0) {
  if (k < 0) throw Error("negative moment index");
  if (k <= 1) return 1;
  Rational w = zeta0 * zeta0;
  Rational den = 1;
  for (int j = 0; j < k; ++j) {
    Rational f = 1 - Rational(static_cast<long>(j) * j) * w;
    if (f == 0) throw PoleError("J_" + std::to_string(k) + " has a pole from the factor j = " + std::to_string(j));
    den *= f;
  }
  return p_polynomial(k)(w) / den;
}

/// J_k^(2) as a rational function of zeta.
inline RatFunc j_ratfunc(int k) {
  if (k <= 1) return RatFunc(Rational(1), Var::zeta);
  Poly den = Poly::constant(1, Var::zeta);
  for (int j = 1; j < k; ++j) den *= Poly(std::vector<Rational>{1, 0, Rational(-static_cast<long>(j) * j)}, Var::zeta);
  return ratfunc_reduce(p_polynomial(k).stretch(2), den);
}

// ---------------------------------------------------------------------------
// F_g^(2) = R_g / y^((3g-1)/2)

/// R_g from the truncated product F_g * y^((3g-1)/2), with the tail
/// z^(2g-1) .. z^(2g-2+check_depth) and the z^0, z^1 terms verified to vanish.
inline PolyFamily r_polynomial(const CoeffTable& table, int g, int check_depth) {
  if (table.beta().beta() != 2) throw Error("R_g needs the beta = 2 table");
  if (g < 2 || g % 2 != 0) throw Error("R_g is defined for even g >= 2");
  if (check_depth < 0) throw Error("negative check depth");
  const int n = 2 * g - 2 + check_depth;
  if (table.k_max() < n || table.g_max() < g) throw Error("coefficient table too small for R_g");
  TruncSeries f(n, Var::z);
  for (int k = 0; k <= n; ++k) f[k] = table.at(k, g);
  TruncSeries prod = f * SpectralCurve::y_half_power(3 * g - 1, n);
  auto violated = [&](int j) {
    return Error("functional form violated: R_" + std::to_string(g) + " coefficient of z^" + std::to_string(j) +
                 " is " + prod[j].get_str());
  };
  for (int j : {0, 1}) {
    if (prod[j] != 0) throw violated(j);
  }
  for (int j = 2 * g - 1; j <= n; ++j) {
    if (prod[j] != 0) throw violated(j);
  }
  std::vector<Rational> a(prod.coeffs().begin(), prod.coeffs().begin() + (2 * g - 1));
  return {FamilyKind::R, g, Poly(std::move(a), Var::z)};
}

inline PolyFamily r_polynomial(int g, int check_depth) {
  if (g < 2 || g % 2 != 0) throw Error("R_g is defined for even g >= 2");
  return r_polynomial(coeff_table_beta2(2 * g - 2 + std::max(check_depth, 0), g), g, check_depth);
}

/// Series of F_g^(2): closed form at g = 0, zero for odd g, R_g y^-(3g-1)/2 otherwise.
inline TruncSeries f_beta2_series(int g, int order) {
  if (g < 0) throw Error("negative order index g");
  if (g == 0) return seeds::planar(order).expand();
  if (g % 2 != 0) return TruncSeries::constant(0, order);
  Poly r = r_polynomial(g, 2).poly;
  return SpectralCurve::y_half_power(-(3 * g - 1), order) * r;
}

/// Series of F_g^(2) from F_{h+2} = sqrt(y) int_0^z y^(-3/2) (x^2 F_h''' + x F_h'') dx.
inline TruncSeries f_beta2_series_integral(int g, int order) {
  if (g < 0) throw Error("negative order index g");
  if (g % 2 != 0) return TruncSeries::constant(0, order);
  TruncSeries f = seeds::planar(order).expand();
  const Poly x = Poly::identity(Var::z);
  const Poly x2 = Poly::monomial(1, 2, Var::z);
  for (int h = 0; h < g; h += 2) {
    TruncSeries d2 = f.derivative().derivative();
    TruncSeries integrand = d2.derivative() * x2 + d2 * x;
    integrand = integrand * SpectralCurve::y_half_power(-3, integrand.order());
    TruncSeries integral = series_integrate(integrand);
    f = integral * SpectralCurve::sqrt_y_series(integral.order());
  }
  return f;
}

// ---------------------------------------------------------------------------
// beta = 1: F_g^(1) coupled to the auxiliary f_g

struct Beta1GeneratingFunctions {
  std::vector<AlgebraicSeries> F;
  std::vector<AlgebraicSeries> f;
};

inline Beta1GeneratingFunctions f_beta1_family(int g_max, int order) {
  if (g_max < 0) throw Error("negative order index g");
  Beta1GeneratingFunctions out;
  out.F.push_back(seeds::planar(order));
  out.f.push_back(seeds::planar(order));
  if (g_max >= 1) {
    out.F.push_back(seeds::beta1_first_correction(order));
    out.f.push_back(seeds::beta1_auxiliary_first(order));
  }
  const Poly x = Poly::identity(Var::z);
  const Poly x2 = Poly::monomial(1, 2, Var::z);
  const Poly x_plus_1({1, 1}, Var::z);
  const Poly x_minus_3({-3, 1}, Var::z);
  for (int g = 1; g < g_max; ++g) {
    const AlgebraicSeries& fg = out.f[g];
    const AlgebraicSeries& fm = out.f[g - 1];
    AlgebraicSeries dfg = fg.derivative();
    AlgebraicSeries dfm = fm.derivative();
    AlgebraicSeries d2fm = dfm.derivative();
    AlgebraicSeries d3fm = d2fm.derivative();
    // f_{g+1} = sqrt(y) int y^(-3/2) { f_g - 2(x+1) f_g' + x^2 f_{g-1}''' + x f_{g-1}'' - f_{g-1}' }
    AlgebraicSeries inner = fg - x_plus_1 * dfg * Rational(2) + x2 * d3fm + x * d2fm - dfm;
    AlgebraicSeries f_next = inner.times_y_half_power(-3).integrate().times_y_half_power(1);

    const AlgebraicSeries& Fg = out.F[g];
    const AlgebraicSeries& Fm = out.F[g - 1];
    AlgebraicSeries d2Fm = Fm.derivative().derivative();
    AlgebraicSeries d3Fm = d2Fm.derivative();
    // F_{g+1} = (1/y) int { 4x^2 F_{g-1}''' + 8x F_{g-1}'' - 2 F_g' + 3(x-3) f_{g+1} - 3x f_g' }
    AlgebraicSeries integrand = x2 * d3Fm * Rational(4) + x * d2Fm * Rational(8) - Fg.derivative() * Rational(2) +
                                x_minus_3 * f_next * Rational(3) - x * dfg * Rational(3);
    AlgebraicSeries F_next = integrand.integrate().times_y_half_power(-2);
    if (F_next.expand()[0] != 0) throw Error("F_g^(1)(0) must vanish for g >= 1");
    out.f.push_back(f_next);
    out.F.push_back(F_next);
  }
  return out;
}

inline std::pair<AlgebraicSeries, AlgebraicSeries> f_beta1_pair(int g, int order) {
  Beta1GeneratingFunctions fam = f_beta1_family(g, order);
  return {fam.F[g], fam.f[g]};
}

enum class GfKind { F, f };

/// A partial generating function with its symmetry class and index.
struct PartialGF {
  SymmetryClass beta;
  GfKind kind;
  int g;
  AlgebraicSeries value;
};

inline PartialGF partial_gf(SymmetryClass beta, GfKind kind, int g, int order) {
  if (beta.beta() == 2) {
    if (kind == GfKind::f) throw UnsupportedError("the auxiliary f_g exists only for beta = 1");
    return {beta, kind, g, AlgebraicSeries::plain(f_beta2_series(g, order))};
  }
  auto [F, f] = f_beta1_pair(g, order);
  return {beta, kind, g, kind == GfKind::F ? F : f};
}

// ---------------------------------------------------------------------------
// Residual of z^2 zeta^2 phi_zzz + z zeta^2 phi_zz - y phi_z + (y'/2) phi + 4 for beta = 2

/// Entry g is the z-series multiplying zeta^g, known through z^order_z.
inline std::vector<TruncSeries> phi_ode_residual(const CoeffTable& table, int order_z, int order_zeta) {
  if (table.k_max() < order_z + 1 || table.g_max() < order_zeta) {
    throw Error("coefficient table too small for the residual");
  }
  const int n = order_z + 1;
  std::vector<TruncSeries> slices;
  for (int g = 0; g <= order_zeta; ++g) {
    TruncSeries s(n, Var::z);
    for (int k = 0; k <= n; ++k) s[k] = table.at(k, g);
    slices.push_back(std::move(s));
  }
  const Poly x = Poly::identity(Var::z);
  const Poly x2 = Poly::monomial(1, 2, Var::z);
  const Poly y = SpectralCurve::y();
  const Poly half_y_prime({-3, 1}, Var::z);
  std::vector<TruncSeries> out;
  for (int g = 0; g <= order_zeta; ++g) {
    TruncSeries res = slices[g].derivative() * y * Rational(-1) + slices[g] * half_y_prime;
    if (g >= 2) {
      TruncSeries d2 = slices[g - 2].derivative().derivative();
      res += d2.derivative() * x2 + d2 * x;
    }
    if (g == 0) res[0] += 4;
    out.push_back(res.truncated(order_z));
  }
  return out;
}

inline std::vector<TruncSeries> phi_ode_residual(int order_z, int order_zeta) {
  return phi_ode_residual(coeff_table_beta2(order_z + 1, order_zeta), order_z, order_zeta);
}

}  // namespace tdm
