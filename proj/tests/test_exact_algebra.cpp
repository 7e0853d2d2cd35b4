#include <gtest/gtest.h>

#include <random>

#include "tdm/algebraic_series.hpp"
#include "tdm/ratfunc.hpp"

using namespace tdm;

namespace {

Poly np(std::initializer_list<long> c) { return Poly(c, Var::N); }
TruncSeries zs(std::initializer_list<long> c) { return TruncSeries::from_poly(Poly(c, Var::z), static_cast<int>(c.size()) - 1); }

Poly random_poly(std::mt19937& rng, int max_degree, Var v) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return Poly(std::move(c), v);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational q = ratio(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(parse_rational("-10/4"), ratio(-5, 2));
  EXPECT_THROW(parse_rational("1/0"), PoleError);
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational("3/-2"), Error);
}

TEST(Poly, TrimDivisionAndGcd) {
  Poly p(std::vector<Rational>{1, 2, 0, 0}, Var::z);
  EXPECT_EQ(p.degree(), 1);
  auto [q, r] = divmod(np({-1, 0, 1}), np({-1, 1}));
  EXPECT_EQ(q, np({1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(np({-1, 0, 1}), np({1, 2, 1})), np({1, 1}));
}

TEST(RatFuncReduce, KnownValues) {
  EXPECT_EQ(ratfunc_reduce(np({-1, 0, 1}), np({-1, 1})), RatFunc(np({1, 1})));
  RatFunc r = ratfunc_reduce(np({0, 0, 2}), np({-1, 0, 1}));
  EXPECT_EQ(r.num(), np({0, 0, 2}));
  EXPECT_EQ(r.den(), np({-1, 0, 1}));
  RatFunc z = ratfunc_reduce(np({0}), np({3, 1}));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.den(), np({1}));
}

TEST(RatFuncReduce, ZeroDenominator) {
  try {
    ratfunc_reduce(np({1}), Poly(std::vector<Rational>{}, Var::N));
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "zero denominator");
  }
}

TEST(RatFuncReduce, MonicDenominatorAndCoprime) {
  RatFunc r = ratfunc_reduce(np({2, 4}), np({6, 2}));
  EXPECT_EQ(r.den().leading(), 1);
  EXPECT_EQ(gcd(r.num(), r.den()).degree(), 0);
  EXPECT_EQ(r(Rational(1)), ratio(6, 8));
}

TEST(RatFuncReduce, CommonFactorPropertyRandom) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = random_poly(rng, 4, Var::N);
    Poly b = random_poly(rng, 4, Var::N);
    Poly c = random_poly(rng, 3, Var::N);
    if (c.is_zero()) continue;
    EXPECT_EQ(ratfunc_reduce(a * c, b * c), ratfunc_reduce(a, b)) << "trial " << trial;
  }
}

TEST(RatFunc, EvaluationAtPoleThrows) {
  RatFunc r = ratfunc_reduce(np({0, 0, 2}), np({-1, 0, 1}));
  EXPECT_THROW(r(Rational(1)), PoleError);
  EXPECT_EQ(r(Rational(2)), ratio(8, 3));
}

TEST(SeriesSqrt, KnownValues) {
  TruncSeries y = zs({1, -6, 1, 0});
  TruncSeries g = series_sqrt(y);
  EXPECT_EQ(g, zs({1, -3, -4, -12}));
  EXPECT_EQ(g * g, y);
  EXPECT_EQ(series_sqrt(TruncSeries::constant(1, 0)), TruncSeries::constant(1, 0));
  EXPECT_EQ(series_sqrt(zs({1, 2, 1})), zs({1, 1, 0}));
}

TEST(SeriesSqrt, BranchUndefined) {
  try {
    series_sqrt(zs({4, 1}));
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "branch undefined");
  }
}

TEST(SeriesSqrt, SquaresBackRandom) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> coef(-20, 20);
  std::uniform_int_distribution<int> order(0, 12);
  for (int trial = 0; trial < 100; ++trial) {
    TruncSeries f(order(rng), Var::z);
    f[0] = 1;
    for (int i = 1; i <= f.order(); ++i) f[i] = ratio(coef(rng), 1 + (coef(rng) + 20) % 5);
    TruncSeries g = series_sqrt(f);
    EXPECT_EQ(g * g, f);
    EXPECT_EQ(g[0], 1);
  }
}

TEST(SeriesIntegrate, KnownValues) {
  EXPECT_EQ(series_integrate(zs({1, 2})), zs({0, 1, 1}));
  TruncSeries zero = TruncSeries::constant(0, 0);
  EXPECT_TRUE(series_integrate(zero).is_zero());
  EXPECT_EQ(series_integrate(zero).order(), 1);
  EXPECT_EQ(series_integrate(zs({0, 0, 3})), zs({0, 0, 0, 1}));
}

TEST(TruncSeries, OrderBookkeeping) {
  TruncSeries a = zs({1, 1, 1, 1});
  TruncSeries b = zs({1, 2, 3, 4, 5, 6});
  EXPECT_EQ((a + b).order(), 3);
  EXPECT_EQ((a * b).order(), 3);
  EXPECT_THROW(a[4], std::out_of_range);
  EXPECT_THROW(a.truncated(5), std::invalid_argument);
  EXPECT_EQ(series_pow(zs({1, -6, 1, 0, 0}), ratio(1, 2)), series_sqrt(zs({1, -6, 1, 0, 0})));
  TruncSeries inv = series_inverse(zs({1, -6, 1, 0, 0, 0}));
  EXPECT_EQ(inv, zs({1, 6, 35, 204, 1189, 6930}));
}

TEST(ExpandInInvN, KnownValues) {
  RatFunc t2 = ratfunc_reduce(np({0, 0, 2}), np({-1, 0, 1}));
  EXPECT_EQ(expand_in_invN(t2, 4), (std::vector<Rational>{2, 0, 2, 0, 2}));
  EXPECT_EQ(expand_in_invN(RatFunc(Rational(1), Var::N), 3), (std::vector<Rational>{1, 0, 0, 0}));
  RatFunc b2 = ratfunc_reduce(np({0, -2, 2}), np({1, 1}) * np({2, 1}));
  EXPECT_EQ(expand_in_invN(b2, 2), (std::vector<Rational>{2, -8, 20}));
}

TEST(ExpandInInvN, ResummationAtLargeN) {
  RatFunc b2 = ratfunc_reduce(np({0, -2, 2}), np({1, 1}) * np({2, 1}));
  const int g_max = 5;
  auto c = expand_in_invN(b2, g_max + 1);
  Rational big(1000000);
  Rational partial = 0;
  for (int g = 0; g <= g_max; ++g) {
    Rational p = 1;
    for (int i = 0; i < g; ++i) p /= big;
    partial += c[g] * p;
  }
  Rational next = abs(c[g_max + 1]);
  for (int i = 0; i <= g_max; ++i) next /= big;
  EXPECT_LE(abs(b2(big) - partial), 2 * next);
}

TEST(SpectralCurve, EdgesAndValue) {
  EXPECT_EQ(SpectralCurve::y()(Rational(0)), 1);
  EXPECT_TRUE(SpectralCurve::evaluate(SpectralCurve::lower_edge()).is_zero());
  EXPECT_TRUE(SpectralCurve::evaluate(SpectralCurve::upper_edge()).is_zero());
  mpfr_prec_t bits = BigFloat::bits_for_digits(40);
  for (const QuadSurd& e : {SpectralCurve::lower_edge(), SpectralCurve::upper_edge()}) {
    BigFloat x = e.to_bigfloat(bits);
    BigFloat v = x * x - BigFloat(6L, bits) * x + BigFloat(1L, bits);
    EXPECT_LT(abs(v), BigFloat(ratio(1, 1), bits) / pow(BigFloat(10L, bits), 30L));
  }
}

TEST(AlgebraicSeries, ExpansionAndCalculus) {
  const int n = 10;
  AlgebraicSeries f(TruncSeries::from_poly(Poly({1, 2}, Var::z), n), TruncSeries::from_poly(Poly({3, -1, 1}, Var::z), n));
  TruncSeries sq = SpectralCurve::sqrt_y_series(n);
  EXPECT_EQ(f.expand(), f.rational_part() + f.radical_part() * sq);
  EXPECT_EQ(f.derivative().expand(), f.expand().derivative());
  EXPECT_EQ(f.times_y_half_power(1).times_y_half_power(-1).expand(), f.expand());
  EXPECT_EQ(f.times_y_half_power(-3).expand(), f.expand() * SpectralCurve::y_half_power(-3, n));
  EXPECT_EQ((f * f).expand(), f.expand() * f.expand());
  EXPECT_EQ(f.integrate().expand(), series_integrate(f.expand()));
}
