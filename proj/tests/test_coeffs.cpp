#include <gtest/gtest.h>

#include "tdm/coeffs.hpp"
#include "tdm/finite_n.hpp"

using namespace tdm;

TEST(Schroeder, Values) {
  EXPECT_EQ(schroeder(0), 1);
  EXPECT_EQ(schroeder(4), 22);
  EXPECT_EQ(schroeder(8), 8558);
  const long known[] = {1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446, 27297738};
  for (int k = 0; k < 14; ++k) EXPECT_EQ(schroeder(k), known[k]) << k;
  EXPECT_THROW(schroeder(-1), Error);
}

TEST(CoeffTableBeta2, KnownValues) {
  CoeffTable t = coeff_table_beta2(8, 6);
  EXPECT_EQ(t.at(3, 2), 30);
  EXPECT_EQ(t.at(4, 4), 3262);
  EXPECT_EQ(t.at(2, 6), 2);
  EXPECT_FALSE(t.has_aux());
}

TEST(CoeffTableBeta1, KnownValues) {
  CoeffTable t = coeff_table_beta1(8, 6);
  EXPECT_EQ(t.at(3, 1), 18);
  EXPECT_EQ(t.at(6, 3), 1092460);
  EXPECT_EQ(t.aux_at(2, 1), -8);
}

TEST(CoeffTable, StructuralInvariants) {
  for (int beta : {1, 2}) {
    CoeffTable t = coeff_table(SymmetryClass::from_int(beta), 30, 12);
    for (int k = 0; k <= 30; ++k) EXPECT_EQ(t.at(k, 0), schroeder(k));
    for (int g = 0; g <= 12; ++g) {
      EXPECT_EQ(t.at(0, g), g == 0 ? 1 : 0);
      EXPECT_EQ(t.at(1, g), g == 0 ? 1 : 0);
    }
    if (beta == 2) {
      for (int k = 0; k <= 30; ++k)
        for (int g = 1; g <= 12; g += 2) EXPECT_EQ(t.at(k, g), 0) << k << " " << g;
    } else {
      for (int g = 0; g <= 12; ++g) {
        EXPECT_EQ(t.aux_at(0, g), (g == 0 ? 1 : 0) - (g == 1 ? 1 : 0));
        EXPECT_EQ(t.aux_at(1, g), (g % 2 == 0 ? 1 : -1) * (2 - (g == 0 ? 1 : 0)));
      }
    }
  }
}

TEST(CoeffTableBeta1, AuxiliaryFirstRowFromExpansion) {
  // b_{k,1}: the z^k coefficients of f_1, pinned independently by the 1/N expansion of b_k(N)
  CoeffTable t = coeff_table_beta1(7, 1);
  const long expected[] = {-1, -2, -8, -38, -192, -1002, -5336, -28814};
  for (int k = 0; k <= 7; ++k) EXPECT_EQ(t.aux_at(k, 1), expected[k]) << k;
  auto bs = tau_beta1_symbolic(7).bs;
  for (int k = 0; k <= 7; ++k) EXPECT_EQ(expand_in_invN(bs[k].value, 1)[1], expected[k]) << k;
}

TEST(CoeffTable, ExpansionMatchesFiniteN) {
  const int k_max = 10, g_max = 12;
  auto t2 = tau_beta2_symbolic(k_max);
  auto m1 = tau_beta1_symbolic(k_max);
  CoeffTable c2 = coeff_table_beta2(k_max, g_max);
  CoeffTable c1 = coeff_table_beta1(k_max, g_max);
  for (int k = 0; k <= k_max; ++k) {
    EXPECT_EQ(expand_in_invN(t2[k].value, g_max), c2.column(k)) << "beta 2, k " << k;
    EXPECT_EQ(expand_in_invN(m1.taus[k].value, g_max), c1.column(k)) << "beta 1, k " << k;
    EXPECT_EQ(expand_in_invN(m1.bs[k].value, g_max), c1.aux_column(k)) << "b, k " << k;
  }
}

TEST(CoeffTable, IndexOutOfRange) {
  CoeffTable t = coeff_table_beta2(3, 2);
  EXPECT_THROW(t.at(4, 0), std::out_of_range);
  EXPECT_THROW(t.at(0, 3), std::out_of_range);
  EXPECT_THROW(t.aux_at(0, 0), std::out_of_range);
  EXPECT_THROW(coeff_table_beta2(-1, 2), Error);
}
