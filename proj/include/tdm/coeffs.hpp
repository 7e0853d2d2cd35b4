#pragma once

#include <vector>

#include "tdm/gf_seeds.hpp"
#include "tdm/rational.hpp"
#include "tdm/symmetry.hpp"

namespace tdm {

/// Large Schroeder number S_k = 2F1(1-k, k; 2; -1), summed as a terminating series.
inline Integer schroeder(int k) {
  if (k < 0) throw Error("negative Schroeder index");
  Rational sum = 0;
  Rational term = 1;
  for (int n = 0; term != 0; ++n) {
    sum += term;
    // ratio of consecutive terms: (1-k+n)(k+n) / ((2+n)(1+n)) * (-1)
    term *= ratio((1 - k + n) * static_cast<long>(k + n), (2 + n) * static_cast<long>(1 + n));
    term = -term;
  }
  if (!is_integer(sum)) throw Error("Schroeder sum is not an integer");
  return sum.get_num();
}

/// tau_{k,g} for 0 <= k <= k_max, 0 <= g <= g_max, plus b_{k,g} when beta = 1.
class CoeffTable {
 public:
  CoeffTable(SymmetryClass beta, int k_max, int g_max)
      : beta_(beta),
        k_max_(k_max),
        g_max_(g_max),
        entries_(size(), Rational(0)),
        aux_(beta.beta() == 1 ? size() : 0, Rational(0)) {}

  SymmetryClass beta() const { return beta_; }
  int k_max() const { return k_max_; }
  int g_max() const { return g_max_; }
  bool has_aux() const { return !aux_.empty(); }

  const Rational& at(int k, int g) const { return entries_.at(index(k, g)); }
  Rational& at(int k, int g) { return entries_.at(index(k, g)); }
  const Rational& aux_at(int k, int g) const { return aux_.at(index(k, g)); }
  Rational& aux_at(int k, int g) { return aux_.at(index(k, g)); }

  /// tau_{k,0..g_max}
  std::vector<Rational> column(int k) const {
    std::vector<Rational> out;
    for (int g = 0; g <= g_max_; ++g) out.push_back(at(k, g));
    return out;
  }
  std::vector<Rational> aux_column(int k) const {
    std::vector<Rational> out;
    for (int g = 0; g <= g_max_; ++g) out.push_back(aux_at(k, g));
    return out;
  }
  /// tau_{0..k_max,g}
  std::vector<Rational> row(int g) const {
    std::vector<Rational> out;
    for (int k = 0; k <= k_max_; ++k) out.push_back(at(k, g));
    return out;
  }

 private:
  std::size_t size() const {
    if (k_max_ < 0 || g_max_ < 0) throw Error("table ranges must be nonnegative");
    return static_cast<std::size_t>(k_max_ + 1) * static_cast<std::size_t>(g_max_ + 1);
  }
  std::size_t index(int k, int g) const {
    if (k < 0 || k > k_max_ || g < 0 || g > g_max_) throw std::out_of_range("coefficient table index");
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(g_max_ + 1) + static_cast<std::size_t>(g);
  }

  SymmetryClass beta_;
  int k_max_;
  int g_max_;
  std::vector<Rational> entries_;
  std::vector<Rational> aux_;
};

/// beta = 2 table from the homogeneous double recursion
/// (k+1) t[k+1][g+2] = 3(2k-1) t[k][g+2] - (k-2) t[k-1][g+2] + k^2(k+1) t[k+1][g].
inline CoeffTable coeff_table_beta2(int k_max, int g_max) {
  CoeffTable t(SymmetryClass::unitary(), k_max, g_max);
  for (int k = 0; k <= k_max; ++k) t.at(k, 0) = schroeder(k);
  for (int g = 0; g + 2 <= g_max; ++g) {
    for (int k = 1; k < k_max; ++k) {
      Rational v = 3 * (2 * k - 1) * t.at(k, g + 2) - (k - 2) * t.at(k - 1, g + 2) +
                   Rational(static_cast<long>(k) * k * (k + 1)) * t.at(k + 1, g);
      t.at(k + 1, g + 2) = v / (k + 1);
    }
  }
  return t;
}

/// beta = 1 table. Each new layer fills b first, then tau; layer -1 is zero.
inline CoeffTable coeff_table_beta1(int k_max, int g_max) {
  CoeffTable t(SymmetryClass::orthogonal(), k_max, g_max);
  for (int k = 0; k <= k_max; ++k) {
    t.at(k, 0) = schroeder(k);
    t.aux_at(k, 0) = t.at(k, 0);
  }
  if (g_max >= 1) {
    TruncSeries tau1 = seeds::beta1_first_correction(k_max).expand();
    TruncSeries b1 = seeds::beta1_auxiliary_first(k_max).expand();
    for (int k = 0; k <= k_max; ++k) {
      t.at(k, 1) = tau1[k];
      t.aux_at(k, 1) = b1[k];
    }
  }
  auto tau = [&](int k, int g) -> Rational { return g < 0 ? Rational(0) : t.at(k, g); };
  auto b = [&](int k, int g) -> Rational { return g < 0 ? Rational(0) : t.aux_at(k, g); };

  for (int g = 1; g + 1 <= g_max; ++g) {
    const int layer = g + 1;
    t.at(0, layer) = 0;
    t.aux_at(0, layer) = 0;
    if (k_max >= 1) {
      t.at(1, layer) = 0;
      t.aux_at(1, layer) = (layer % 2 == 0) ? 2 : -2;
    }
    for (int k = 1; k < k_max; ++k) {
      Rational r1 = ratio(2 * k - 1, k + 1);
      Rational r2 = ratio(k - 2, k + 1);
      t.aux_at(k + 1, layer) = 3 * r1 * b(k, layer) - r2 * b(k - 1, layer) - 2 * b(k + 1, g) - r1 * b(k, g) -
                               Rational(1 - static_cast<long>(k) * k) * b(k + 1, g - 1);
    }
    for (int k = 1; k < k_max; ++k) {
      Rational inhom = ratio(3, k + 1) * (b(k - 1, layer) - 3 * b(k, layer) - k * b(k, g));
      t.at(k + 1, layer) = 6 * tau(k, layer) - tau(k - 1, layer) - 2 * tau(k + 1, g) +
                           Rational(4L * k * (k + 1)) * tau(k + 1, g - 1) + inhom;
    }
  }
  return t;
}

inline CoeffTable coeff_table(SymmetryClass beta, int k_max, int g_max) {
  return beta.beta() == 2 ? coeff_table_beta2(k_max, g_max) : coeff_table_beta1(k_max, g_max);
}

}  // namespace tdm
