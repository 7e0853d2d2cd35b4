#pragma once

#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "tdm/coeffs.hpp"
#include "tdm/genfun.hpp"

namespace tdm {

/// p_l(3) = sum_p C(l,p)^2 2^p, the Legendre polynomial at 3.
inline Integer legendre_at_3(int l) {
  if (l < 0) throw Error("negative Legendre degree");
  Integer sum = 0;
  Integer pow2 = 1;
  for (int p = 0; p <= l; ++p) {
    Integer c = binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(p));
    sum += c * c * pow2;
    pow2 *= 2;
  }
  return sum;
}

namespace detail {

inline std::vector<Integer> integer_coeffs(const TruncSeries& s) {
  std::vector<Integer> out;
  for (const Rational& c : s.coeffs()) {
    if (!is_integer(c)) throw Error("non-integer coefficient " + c.get_str());
    out.push_back(c.get_num());
  }
  return out;
}

inline void require_monotone(const std::vector<Integer>& c) {
  for (std::size_t l = 1; l < c.size(); ++l) {
    if (c[l] < c[l - 1]) {
      throw Error("monotonicity C_{l+1} >= C_l fails at l = " + std::to_string(l - 1));
    }
  }
}

}  // namespace detail

/// C_0..C_{l_max}: coefficients of y(z)^(-e/2), computed by exact series powering.
inline std::vector<Integer> c_sequence(int e, int l_max) {
  if (e < 1) throw Error("exponent numerator must be positive");
  if (l_max < 0) throw Error("negative sequence length");
  auto c = detail::integer_coeffs(SpectralCurve::y_half_power(-e, l_max));
  detail::require_monotone(c);
  return c;
}

/// Same sequence as the e-fold self-convolution of p_l(3).
inline std::vector<Integer> c_sequence_convolution(int e, int l_max) {
  if (e < 1) throw Error("exponent numerator must be positive");
  std::vector<Integer> base;
  for (int l = 0; l <= l_max; ++l) base.push_back(legendre_at_3(l));
  std::vector<Integer> acc = base;
  for (int i = 1; i < e; ++i) {
    std::vector<Integer> next(acc.size(), Integer(0));
    for (int a = 0; a <= l_max; ++a) {
      for (int b = 0; a + b <= l_max; ++b) next[a + b] += acc[a] * base[b];
    }
    acc = std::move(next);
  }
  return acc;
}

// ---------------------------------------------------------------------------

enum class VerifyTarget { Pk, Rg, table };

inline std::string target_name(VerifyTarget t) {
  switch (t) {
    case VerifyTarget::Pk: return "Pk";
    case VerifyTarget::Rg: return "Rg";
    case VerifyTarget::table: return "table";
  }
  return "?";
}

/// First failing location. For Pk: (k, coefficient j). For Rg: (g, coefficient j or -1 for the sum).
/// For table: (k, g).
struct Witness {
  int primary;
  int secondary;
  std::string value;
  std::string reason;
};

struct RgRecord {
  int g;
  bool all_integer;
  Rational coefficient_sum;
};

struct VerificationReport {
  VerifyTarget target;
  std::string range;
  bool pass = true;
  std::optional<Witness> witness;
  std::vector<RgRecord> rg_records;
  std::vector<int> zero_sum_g;  // g with sum_j a_{g,j} = 0, reported apart from pass/fail
  double wall_seconds = 0;

  VerificationReport(VerifyTarget t, std::string r) : target(t), range(std::move(r)) {}
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Runs body(i) for i in [0, count) on up to `workers` threads, stripe by stripe.
inline void parallel_for(int count, int workers, const std::function<void(int)>& body) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

struct PkOptions {
  int workers = 1;
  /// Called on each freshly computed P_k before it is checked; used for mutation tests.
  std::function<void(int, std::vector<Integer>&)> tamper;
};

/// Checks every P_k, k <= k_star, has nonnegative integer coefficients. Streams the
/// recursion in integers, so a coefficient of k P_k not divisible by k is a witness.
inline VerificationReport verify_pk(int k_star, const PkOptions& opt = {}) {
  detail::Stopwatch clock;
  VerificationReport rep{VerifyTarget::Pk, "k <= " + std::to_string(k_star)};
  if (k_star < 0) throw Error("k_star must be nonnegative");
  std::vector<Integer> prev2{1}, prev1{1};
  auto check = [&](int k, const std::vector<Integer>& p) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] < 0) {
        rep.witness = Witness{k, static_cast<int>(j), p[j].get_str(), "negative coefficient"};
        return false;
      }
    }
    return true;
  };
  for (int k = 0; k <= std::min(k_star, 1); ++k) {
    std::vector<Integer> p{1};
    if (opt.tamper) opt.tamper(k, p);
    if (!check(k, p)) {
      rep.pass = false;
      rep.wall_seconds = clock.seconds();
      return rep;
    }
    (k == 0 ? prev2 : prev1) = p;
  }
  for (int k = 2; k <= k_star; ++k) {
    const long a = 3L * (2 * k - 3);
    const long b = k - 3;
    const Integer c = Integer(k - 3) * (k - 2) * (k - 2);
    std::size_t len = std::max(prev1.size(), prev2.size() + 1);
    std::vector<Integer> next(len);
    std::optional<Witness> bad;
    std::mutex bad_mutex;
    auto fill = [&](std::size_t j) {
      Integer v = 0;
      if (j < prev1.size()) v += a * prev1[j];
      if (j < prev2.size()) v -= b * prev2[j];
      if (j >= 1 && j - 1 < prev2.size()) v += c * prev2[j - 1];
      if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(k))) {
        std::lock_guard<std::mutex> lock(bad_mutex);
        if (!bad || bad->secondary > static_cast<int>(j)) {
          bad = Witness{k, static_cast<int>(j), v.get_str() + "/" + std::to_string(k), "non-integer coefficient"};
        }
        return;
      }
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k));
      next[j] = std::move(v);
    };
    const int chunks = len > 256 ? opt.workers : 1;
    detail::parallel_for(chunks, chunks, [&](int w) {
      for (std::size_t j = static_cast<std::size_t>(w); j < len; j += static_cast<std::size_t>(chunks)) fill(j);
    });
    if (bad) {
      rep.pass = false;
      rep.witness = bad;
      break;
    }
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    if (opt.tamper) opt.tamper(k, next);
    if (!check(k, next)) {
      rep.pass = false;
      break;
    }
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  rep.wall_seconds = clock.seconds();
  return rep;
}

struct RgOptions {
  int check_depth = 2;
  int workers = 1;
  /// Called on each R_g before it is checked; used for mutation tests.
  std::function<void(int, Poly&)> tamper;
};

/// For even 2 <= g <= g_star: (i) every a_{g,j} is an integer, (ii) sum_j a_{g,j} >= 0.
inline VerificationReport verify_rg(int g_star, const RgOptions& opt = {}) {
  detail::Stopwatch clock;
  VerificationReport rep{VerifyTarget::Rg, "even g <= " + std::to_string(g_star)};
  if (g_star < 2) {
    rep.wall_seconds = clock.seconds();
    return rep;
  }
  const int g_top = g_star - g_star % 2;
  CoeffTable table = coeff_table_beta2(2 * g_top - 2 + opt.check_depth, g_top);
  const int count = g_top / 2;
  std::vector<std::optional<RgRecord>> records(static_cast<std::size_t>(count));
  std::vector<std::optional<Witness>> failures(static_cast<std::size_t>(count));
  detail::parallel_for(count, opt.workers, [&](int i) {
    const int g = 2 * (i + 1);
    Poly r;
    try {
      r = r_polynomial(table, g, opt.check_depth).poly;
    } catch (const Error& e) {
      failures[i] = Witness{g, -1, "", e.what()};
      return;
    }
    if (opt.tamper) opt.tamper(g, r);
    RgRecord rec{g, true, 0};
    for (int j = 0; j <= std::max(r.degree(), 0); ++j) {
      Rational a = r.coeff(j);
      rec.coefficient_sum += a;
      if (!is_integer(a) && rec.all_integer) {
        rec.all_integer = false;
        failures[i] = Witness{g, j, a.get_str(), "non-integer coefficient"};
      }
    }
    if (rec.coefficient_sum < 0 && !failures[i]) {
      failures[i] = Witness{g, -1, rec.coefficient_sum.get_str(), "negative coefficient sum"};
    }
    records[i] = rec;
  });
  for (int i = 0; i < count; ++i) {
    if (records[i]) {
      rep.rg_records.push_back(*records[i]);
      if (records[i]->coefficient_sum == 0) rep.zero_sum_g.push_back(records[i]->g);
    }
    if (failures[i] && rep.pass) {
      rep.pass = false;
      rep.witness = failures[i];
    }
  }
  rep.wall_seconds = clock.seconds();
  return rep;
}

/// Every tau_{k,g} in the given table is a nonnegative integer.
inline VerificationReport verify_table(const CoeffTable& table, int workers = 1) {
  detail::Stopwatch clock;
  VerificationReport rep{VerifyTarget::table, "beta = " + std::to_string(table.beta().beta()) +
                                                  ", k <= " + std::to_string(table.k_max()) +
                                                  ", g <= " + std::to_string(table.g_max())};
  const int cols = table.k_max() + 1;
  std::vector<std::optional<Witness>> failures(static_cast<std::size_t>(cols));
  detail::parallel_for(cols, workers, [&](int k) {
    for (int g = 0; g <= table.g_max(); ++g) {
      const Rational& v = table.at(k, g);
      if (!is_integer(v)) {
        failures[k] = Witness{k, g, v.get_str(), "non-integer entry"};
        return;
      }
      if (v < 0) {
        failures[k] = Witness{k, g, v.get_str(), "negative entry"};
        return;
      }
    }
  });
  for (auto& f : failures) {
    if (f) {
      rep.pass = false;
      rep.witness = f;
      break;
    }
  }
  rep.wall_seconds = clock.seconds();
  return rep;
}

inline VerificationReport verify_table(SymmetryClass beta, int k_max, int g_max, int workers = 1) {
  detail::Stopwatch clock;
  VerificationReport rep = verify_table(coeff_table(beta, k_max, g_max), workers);
  rep.wall_seconds = clock.seconds();
  return rep;
}

/// tau_{k,g} = sum_j a_{g,j} C_{k-j} for k <= k_max, and C_{k-(2g-2)} sum_j a_{g,j} <= tau_{k,g}.
inline bool bound_chain_holds(const CoeffTable& table, int g, int k_max) {
  Poly r = r_polynomial(table, g, 0).poly;
  std::vector<Integer> c = c_sequence(3 * g - 1, k_max);
  Rational sum = 0;
  for (const Rational& a : r.coeffs()) sum += a;
  for (int k = 0; k <= k_max; ++k) {
    Rational conv = 0;
    for (int j = 0; j <= std::min(k, r.degree()); ++j) conv += r.coeff(j) * Rational(c[k - j]);
    if (conv != table.at(k, g)) return false;
    if (k >= 2 * g - 2 && Rational(c[k - (2 * g - 2)]) * sum > table.at(k, g)) return false;
  }
  return true;
}

}  // namespace tdm
