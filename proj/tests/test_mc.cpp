#include <gtest/gtest.h>

#include <random>

#include "tdm/finite_n.hpp"
#include "tdm/mc/sampler.hpp"

using namespace tdm;
using namespace tdm::mc;

TEST(Jacobi, Identity) {
  DenseMatrix<double> m(5);
  for (int i = 0; i < 5; ++i) m(i, i) = 1;
  EXPECT_EQ(eigvals_symmetric(m), std::vector<double>(5, 1.0));
}

TEST(Jacobi, Swap) {
  DenseMatrix<double> m(2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  auto ev = eigvals_symmetric(m);
  EXPECT_NEAR(ev[0], -1, 1e-14);
  EXPECT_NEAR(ev[1], 1, 1e-14);
}

TEST(Jacobi, RandomSymmetricTrace) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  DenseMatrix<double> m(20);
  double tr = 0, fro = 0;
  for (int i = 0; i < 20; ++i)
    for (int j = i; j < 20; ++j) {
      m(i, j) = m(j, i) = nd(rng);
    }
  for (int i = 0; i < 20; ++i) tr += m(i, i);
  for (double v : m.data) fro += v * v;
  auto ev = eigvals_symmetric(m);
  double s = 0, s2 = 0;
  for (double e : ev) {
    s += e;
    s2 += e * e;
  }
  EXPECT_NEAR(s, tr, 1e-10 * std::max(1.0, std::abs(tr)));
  EXPECT_NEAR(s2, fro, 1e-10 * fro);
}

TEST(Jacobi, NegativePivotsKnownSpectrum) {
  // tridiag(-1, 2, -1) has eigenvalues 2 - sqrt2, 2, 2 + sqrt2
  DenseMatrix<double> m(3);
  for (int i = 0; i < 3; ++i) m(i, i) = 2;
  m(0, 1) = m(1, 0) = m(1, 2) = m(2, 1) = -1;
  auto ev = eigvals_symmetric(m);
  EXPECT_NEAR(ev[0], 2 - std::sqrt(2.0), 1e-13);
  EXPECT_NEAR(ev[1], 2, 1e-13);
  EXPECT_NEAR(ev[2], 2 + std::sqrt(2.0), 1e-13);
}

TEST(Jacobi, RandomSymmetricCubicTrace) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  const int n = 12;
  DenseMatrix<double> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = nd(rng);
  double tr3 = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) tr3 += m(i, j) * m(j, k) * m(k, i);
  double s3 = 0;
  for (double e : eigvals_symmetric(m)) s3 += e * e * e;
  EXPECT_NEAR(s3, tr3, 1e-9 * std::max(1.0, std::abs(tr3)));
}

TEST(Jacobi, RealWishartIsPositive) {
  std::mt19937_64 rng(20260101);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 2000; ++trial) {
    auto ev = sample_wishart_eigenvalues(1, 9, 19, rng, nd);
    ASSERT_GT(ev.front(), 0) << trial;
  }
}

TEST(Jacobi, HermitianKnownSpectrum) {
  // [[2, i], [-i, 2]] has eigenvalues 1 and 3
  DenseMatrix<std::complex<double>> m(2);
  m(0, 0) = 2;
  m(1, 1) = 2;
  m(0, 1) = {0, 1};
  m(1, 0) = {0, -1};
  auto ev = eigvals_symmetric(m);
  EXPECT_NEAR(ev[0], 1, 1e-13);
  EXPECT_NEAR(ev[1], 3, 1e-13);
}

TEST(Jacobi, RejectsAsymmetric) {
  DenseMatrix<double> m(2);
  m(0, 1) = 1;
  EXPECT_THROW(eigvals_symmetric(m), Error);
}

TEST(Sampler, DivergentMomentRejected) {
  try {
    sample_delay_moment(SymmetryClass::unitary(), 3, 3, 10, 1);
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("divergent moment"), std::string::npos);
  }
  EXPECT_THROW(sample_delay_moment(SymmetryClass::orthogonal(), 4, 2, 10, 1), Error);
}

TEST(Sampler, ShardCountDoesNotChangeResult) {
  auto a = sample_delay_moment(SymmetryClass::unitary(), 6, 2, 2000, 99, 1);
  auto b = sample_delay_moment(SymmetryClass::unitary(), 6, 2, 2000, 99, 4);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.stderr_, b.stderr_);
  auto c = sample_delay_moment(SymmetryClass::unitary(), 6, 2, 2000, 100, 1);
  EXPECT_NE(a.mean, c.mean);
}

TEST(Sampler, JointMomentsAtTen) {
  auto exact = tau_beta2_symbolic(3);
  auto est = sample_delay_moments(SymmetryClass::unitary(), 10, {1, 2, 3}, 20000, 2024, 2);
  for (const auto& e : est) {
    double x = exact[e.k].value(Rational(10)).get_d();
    EXPECT_LT(std::abs(e.mean - x), 4 * e.stderr_) << "k=" << e.k << " mean=" << e.mean << " exact=" << x;
  }
}

TEST(Sampler, MeanInverseEigenvalueNormalisation) {
  // N^0 E[Tr W^-1] = tau_1 = 1 for both classes
  for (int beta : {1, 2}) {
    auto e = sample_delay_moment(SymmetryClass::from_int(beta), 7, 1, 5000, 11);
    EXPECT_LT(std::abs(e.mean - 1), 4 * e.stderr_) << beta;
  }
}

TEST(Sampler, RealSecondMomentSeed) {
  // D^(1)(2) = N (N + alpha)(2N + alpha + 1)
  for (auto [n, alpha] : {std::pair{4, 3}, std::pair{5, 2}}) {
    Moments m = sample_wishart_trace(SymmetryClass::orthogonal(), n, alpha, 2, 40000, 7, 2);
    Rational exact = wishart_moment({SymmetryClass::orthogonal(), 2, Rational(alpha), n});
    EXPECT_EQ(exact, Rational(n * (n + alpha) * (2 * n + alpha + 1)));
    EXPECT_LT(std::abs(m.mean - exact.get_d()), 4 * m.stderr_of_mean()) << n << " " << alpha << " " << m.mean;
  }
}
