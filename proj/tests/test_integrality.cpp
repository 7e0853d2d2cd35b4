#include <gtest/gtest.h>

#include "tdm/integrality.hpp"

using namespace tdm;

TEST(LegendreAtThree, Values) {
  EXPECT_EQ(legendre_at_3(0), 1);
  EXPECT_EQ(legendre_at_3(1), 3);
  EXPECT_EQ(legendre_at_3(3), 63);
}

TEST(LegendreAtThree, IsInverseSqrtSeries) {
  TruncSeries s = SpectralCurve::y_half_power(-1, 50);
  for (int l = 0; l <= 50; ++l) EXPECT_EQ(s[l], Rational(legendre_at_3(l))) << l;
}

TEST(CSequence, Examples) {
  auto inv_y = c_sequence(2, 4);
  EXPECT_EQ(inv_y[0], 1);
  EXPECT_EQ(inv_y[1], 6);
  EXPECT_EQ(inv_y[2], 35);
  for (int l = 2; l <= 4; ++l) EXPECT_EQ(inv_y[l], 6 * inv_y[l - 1] - inv_y[l - 2]);
  EXPECT_EQ(c_sequence(5, 0)[0], 1);
  auto half = c_sequence(1, 2);
  EXPECT_EQ(half, (std::vector<Integer>{1, 3, 13}));
}

TEST(CSequence, PowerAndConvolutionRoutesAgree) {
  for (int g = 2; g <= 10; g += 2) {
    EXPECT_EQ(c_sequence(3 * g - 1, 30), c_sequence_convolution(3 * g - 1, 30)) << g;
  }
}

TEST(CSequence, BoundChain) {
  CoeffTable t = coeff_table_beta2(60, 10);
  for (int g = 2; g <= 10; g += 2) EXPECT_TRUE(bound_chain_holds(t, g, 60)) << g;
  t.at(30, 4) += 1;
  EXPECT_FALSE(bound_chain_holds(t, 4, 60));
}

TEST(VerifyPk, SmallRangePasses) {
  auto r = verify_pk(9);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(VerifyPk, DeskScalePasses) {
  auto r = verify_pk(2000);
  EXPECT_TRUE(r.pass);
  EXPECT_GT(r.wall_seconds, 0.0);
}

TEST(VerifyPk, IndependentOfWorkerCount) {
  auto a = verify_pk(600, PkOptions{1, {}});
  auto b = verify_pk(600, PkOptions{3, {}});
  EXPECT_EQ(a.pass, b.pass);
  EXPECT_TRUE(a.pass);
}

TEST(VerifyPk, NegatedCoefficientGivesWitness) {
  PkOptions opt;
  opt.tamper = [](int k, std::vector<Integer>& p) {
    if (k == 5) p[1] = -p[1];
  };
  auto r = verify_pk(20, opt);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->primary, 5);
  EXPECT_EQ(r.witness->secondary, 1);
  EXPECT_EQ(r.witness->value, "-30");
}

TEST(VerifyPk, NonIntegerStepGivesWitness) {
  PkOptions opt;
  opt.tamper = [](int k, std::vector<Integer>& p) {
    if (k == 6) p[0] += 1;
  };
  auto r = verify_pk(20, opt);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_GT(r.witness->primary, 6);
  EXPECT_EQ(r.witness->reason, "non-integer coefficient");
}

TEST(VerifyRg, LowRangeAndSums) {
  auto r = verify_rg(10);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.rg_records.size(), 5u);
  EXPECT_EQ(r.rg_records[1].g, 4);
  EXPECT_EQ(r.rg_records[1].coefficient_sum, 60);
  EXPECT_TRUE(r.zero_sum_g.empty());
}

TEST(VerifyRg, DeskScalePasses) {
  auto r = verify_rg(40, RgOptions{2, 2, {}});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.rg_records.size(), 20u);
}

TEST(VerifyRg, TamperedPolynomialFails) {
  RgOptions opt;
  opt.tamper = [](int g, Poly& r) {
    if (g == 6) r = r + Poly::monomial(ratio(1, 2), 3, Var::z);
  };
  auto r = verify_rg(10, opt);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->primary, 6);
  EXPECT_EQ(r.witness->secondary, 3);
}

TEST(VerifyRg, ZeroSumIsSeparateOutcome) {
  RgOptions opt;
  opt.tamper = [](int g, Poly& r) {
    if (g == 4) r = r - Poly::monomial(60, 0, Var::z);
  };
  auto r = verify_rg(6, opt);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.zero_sum_g, std::vector<int>{4});
}

TEST(VerifyTable, GoldenBlocksAndLarger) {
  EXPECT_TRUE(verify_table(SymmetryClass::orthogonal(), 8, 6).pass);
  EXPECT_TRUE(verify_table(SymmetryClass::unitary(), 8, 6).pass);
  EXPECT_TRUE(verify_table(SymmetryClass::orthogonal(), 20, 20).pass);
}

TEST(VerifyTable, CorruptedEntryWitness) {
  CoeffTable t = coeff_table_beta1(8, 6);
  t.at(5, 3) = ratio(1, 2);
  auto r = verify_table(t);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->primary, 5);
  EXPECT_EQ(r.witness->secondary, 3);
}
