#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "tdm/coeffs.hpp"
#include "tdm/finite_n.hpp"
#include "tdm/genfun.hpp"
#include "tdm/io/golden.hpp"

namespace tdm::io {

enum class ReproduceTarget { appendixA, tableI, appendixB };

inline ReproduceTarget parse_reproduce_target(const std::string& s) {
  if (s == "appendixA") return ReproduceTarget::appendixA;
  if (s == "tableI") return ReproduceTarget::tableI;
  if (s == "appendixB") return ReproduceTarget::appendixB;
  throw Error("unknown reproduce target '" + s + "'");
}

inline std::string target_name(ReproduceTarget t) {
  switch (t) {
    case ReproduceTarget::appendixA: return "appendixA";
    case ReproduceTarget::tableI: return "tableI";
    case ReproduceTarget::appendixB: return "appendixB";
  }
  return "?";
}

struct Mismatch {
  std::string location;
  std::string expected;
  std::string got;
};

struct ReproduceReport {
  ReproduceTarget target;
  int checked = 0;
  std::vector<Mismatch> mismatches;
  double wall_seconds = 0;

  bool pass() const { return mismatches.empty(); }
};

namespace detail {

inline void compare(ReproduceReport& rep, const std::string& where, const std::string& expected,
                    const std::string& got) {
  ++rep.checked;
  if (expected != got) rep.mismatches.push_back({where, expected, got});
}

inline std::string poly_string(const std::vector<long>& c, Var v) {
  std::vector<Rational> r(c.begin(), c.end());
  return Poly(std::move(r), v).to_string();
}

inline void appendix_a(ReproduceReport& rep, const GoldenStore& gold) {
  auto t2 = tau_beta2_symbolic(6);
  auto t1 = tau_beta1_symbolic(6).taus;
  for (const auto& m : gold.appendix_a) {
    const RatFunc& got = (m.beta == 2 ? t2 : t1).at(static_cast<std::size_t>(m.k)).value;
    RatFunc expected = m.value();
    ++rep.checked;
    if (!(expected == got)) {
      rep.mismatches.push_back({"tau_" + std::to_string(m.k) + "^(" + std::to_string(m.beta) + ")",
                                expected.to_string(), got.to_string()});
    }
  }
}

inline void table_i(ReproduceReport& rep, const GoldenStore& gold) {
  for (int beta : {2, 1}) {
    CoeffTable t = coeff_table(SymmetryClass::from_int(beta), 8, 6);
    const TableBlock& block = beta == 2 ? gold.table_beta2 : gold.table_beta1;
    for (int k = 0; k <= 8; ++k) {
      for (int g = 0; g <= 6; ++g) {
        compare(rep,
                "tau_{" + std::to_string(k) + "," + std::to_string(g) + "}^(" + std::to_string(beta) + ")",
                std::to_string(block[k][g]), t.at(k, g).get_str());
      }
    }
  }
}

inline void appendix_b(ReproduceReport& rep, const GoldenStore& gold) {
  CoeffTable t = coeff_table_beta2(20, 10);
  for (const auto& r : gold.r_polys) {
    compare(rep, "R_" + std::to_string(r.index), poly_string(r.coeffs, Var::z),
            r_polynomial(t, r.index, 2).poly.to_string());
  }
  auto ps = p_polynomials(9);
  for (const auto& p : gold.p_polys) {
    compare(rep, "P_" + std::to_string(p.index), poly_string(p.coeffs, Var::zeta), ps.at(p.index).to_string());
  }
  auto fam = f_beta1_family(6, 12);
  for (const auto& f : gold.f_beta1) {
    TruncSeries s = fam.F.at(static_cast<std::size_t>(f.g)).expand();
    std::string expected, got;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
      expected += (i ? "," : "") + std::to_string(f.coeffs[i]);
      got += (i ? "," : "") + s[static_cast<int>(i)].get_str();
    }
    compare(rep, "F_" + std::to_string(f.g) + "^(1) series to z^12", expected, got);
  }
}

}  // namespace detail

/// Recomputes a target from the recursions and diffs it against the golden store.
inline ReproduceReport reproduce_report(ReproduceTarget target, const GoldenStore& gold = golden_store()) {
  auto start = std::chrono::steady_clock::now();
  ReproduceReport rep;
  rep.target = target;
  switch (target) {
    case ReproduceTarget::appendixA: detail::appendix_a(rep, gold); break;
    case ReproduceTarget::tableI: detail::table_i(rep, gold); break;
    case ReproduceTarget::appendixB: detail::appendix_b(rep, gold); break;
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace tdm::io
