#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "tdm/tdm.hpp"

using namespace tdm;
using namespace tdm::mc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << " s";
  return o.str();
}

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

Outcome reproduce(io::ReproduceTarget target, double limit) {
  auto rep = io::reproduce_report(target);
  std::string d = std::to_string(rep.checked) + " checks, " + std::to_string(rep.mismatches.size()) +
                  " mismatches, " + fmt(rep.wall_seconds);
  if (!rep.mismatches.empty()) d += ", first at " + rep.mismatches.front().location;
  return {rep.pass() && rep.wall_seconds < limit, d};
}

Outcome triple_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  auto t = tau_beta2_symbolic(8);
  int cases = 0, bad = 0;
  for (int k = 1; k <= 8; ++k) {
    for (int n = k + 1; n <= 25; ++n) {
      Rational rec = t[k].value(Rational(n));
      if (tau_exact_sum_ms(k, n) != rec || tau_exact_sum_nov(k, n) != rec) ++bad;
      ++cases;
    }
  }
  double s = seconds_since(t0);
  return {bad == 0 && s < 10, std::to_string(cases) + " cases, " + std::to_string(bad) + " disagreements, " + fmt(s)};
}

Outcome expansion() {
  const int k_max = 10, g_max = 12;
  auto t2 = tau_beta2_symbolic(k_max);
  auto m1 = tau_beta1_symbolic(k_max);
  CoeffTable c2 = coeff_table_beta2(k_max, g_max);
  CoeffTable c1 = coeff_table_beta1(k_max, g_max);
  int bad = 0;
  for (int k = 0; k <= k_max; ++k) {
    if (expand_in_invN(t2[k].value, g_max) != c2.column(k)) ++bad;
    if (expand_in_invN(m1.taus[k].value, g_max) != c1.column(k)) ++bad;
    if (expand_in_invN(m1.bs[k].value, g_max) != c1.aux_column(k)) ++bad;
  }
  return {bad == 0, "33 columns (tau beta 2, tau beta 1, b), " + std::to_string(bad) + " mismatched"};
}

Outcome ode_residual() {
  CoeffTable t = coeff_table_beta2(11, 8);
  auto zero = [](const std::vector<TruncSeries>& r) {
    for (const auto& s : r)
      if (!s.is_zero()) return false;
    return true;
  };
  bool clean = zero(phi_ode_residual(t, 10, 8));
  t.at(4, 2) += 1;
  bool mutated = zero(phi_ode_residual(t, 10, 8));
  return {clean && !mutated, std::string("residual ") + (clean ? "zero" : "NONZERO") + ", mutated tau_{4,2} " +
                                 (mutated ? "went unnoticed" : "detected")};
}

Outcome functional_form() {
  CoeffTable t = coeff_table_beta2(48, 20);
  int checked = 0;
  for (int g = 2; g <= 20; g += 2) {
    try {
      r_polynomial(t, g, 10);
      ++checked;
    } catch (const Error& e) {
      return {false, e.what()};
    }
  }
  return {true, std::to_string(checked) + " polynomials R_2..R_20 with tail depth 10"};
}

Outcome integrality(bool full_scale) {
  auto t0 = std::chrono::steady_clock::now();
  std::string d;
  bool ok = true;
  auto note = [&](const VerificationReport& r, const std::string& label) {
    ok = ok && r.pass;
    d += label + (r.pass ? " PASS" : " FAIL") + " (" + fmt(r.wall_seconds) + "); ";
    if (r.witness) d += "witness " + r.witness->reason + "; ";
  };
  note(verify_pk(2000, {workers(), {}}), "Pk 2000");
  RgOptions ro;
  ro.workers = workers();
  note(verify_rg(40, ro), "Rg 40");
  note(verify_table(SymmetryClass::unitary(), 50, 30, workers()), "table beta 2");
  note(verify_table(SymmetryClass::orthogonal(), 50, 30, workers()), "table beta 1");
  if (full_scale) {
    note(verify_pk(10000, {workers(), {}}), "Pk 10000");
    note(verify_rg(80, ro), "Rg 80");
  }
  d += "total " + fmt(seconds_since(t0));
  return {ok, d};
}

Outcome asymptotics() {
  auto k3 = ratio_diagnostics(Direction::g_to_inf, 3, 1, 9);
  bool exact = *k3.points[0].exact == ratio(30, 32) && *k3.points[1].exact == ratio(126, 128) &&
               *k3.points[2].exact == ratio(510, 512);
  bool close = *k3.points.back().exact > 1 - ratio(1, 100000);
  auto a1 = ratio_diagnostics(Direction::k_to_inf, 1, 200, 400, 30);
  BigFloat one(1L, BigFloat::bits_for_digits(30));
  BigFloat d200 = abs(a1.points.front().value - one);
  BigFloat d400 = abs(a1.points.back().value - one);
  bool toward = d400 < d200;
  std::string d = std::string("k=3 g=1..3 ") + (exact ? "exact" : "WRONG") + ", g=9 ratio " +
                  k3.points.back().value.to_string(12) + ", A_1 ratio k=200 " + a1.points.front().value.to_string(10) +
                  " k=400 " + a1.points.back().value.to_string(10);
  return {exact && close && toward, d};
}

Outcome monte_carlo() {
  auto t0 = std::chrono::steady_clock::now();
  const long samples = 100000;
  const std::uint64_t seed = 20260101;
  auto e2 = sample_delay_moments(SymmetryClass::unitary(), 8, {1, 2}, samples, seed, workers());
  auto e1 = sample_delay_moment(SymmetryClass::orthogonal(), 9, 2, samples, seed, workers());
  double s = seconds_since(t0);
  auto again = sample_delay_moment(SymmetryClass::orthogonal(), 9, 2, samples, seed, 1);
  bool deterministic = again.mean == e1.mean && again.stderr_ == e1.stderr_;
  struct Check {
    const MCEstimate* e;
    double exact;
    const char* label;
  };
  Check checks[] = {{&e2[0], 1.0, "b2 tau1"}, {&e2[1], 128.0 / 63.0, "b2 tau2"}, {&e1, 81.0 / 35.0, "b1 tau2"}};
  bool ok = deterministic && s < 120;
  std::ostringstream d;
  d.precision(6);
  for (const auto& c : checks) {
    double z = (c.e->mean - c.exact) / c.e->stderr_;
    ok = ok && std::abs(z) < 4;
    d << c.label << " " << c.e->mean << " (z=" << z << "), ";
  }
  d << (deterministic ? "deterministic" : "NOT deterministic") << ", " << fmt(s);
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  bool full_scale = argc > 1 && std::strcmp(argv[1], "--full-scale") == 0;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"appendix A reproduction", [] { return reproduce(io::ReproduceTarget::appendixA, 1); }},
      {"table I reproduction", [] { return reproduce(io::ReproduceTarget::tableI, 1); }},
      {"appendix B reproduction", [] { return reproduce(io::ReproduceTarget::appendixB, 5); }},
      {"triple-oracle equality", triple_oracle},
      {"1/N expansion consistency", expansion},
      {"phi ODE residual", ode_residual},
      {"R_g functional form", functional_form},
      {"integrality", [&] { return integrality(full_scale); }},
      {"asymptotics", asymptotics},
      {"Monte Carlo", monte_carlo},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
