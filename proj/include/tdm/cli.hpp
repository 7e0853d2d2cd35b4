#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tdm/asymptotics.hpp"
#include "tdm/finite_n.hpp"
#include "tdm/genfun.hpp"
#include "tdm/integrality.hpp"
#include "tdm/io/document.hpp"
#include "tdm/io/reproduce.hpp"
#include "tdm/mc/sampler.hpp"

namespace tdm::cli {

enum ExitCode { kOk = 0, kUsage = 1, kComputation = 2, kVerificationFailed = 3 };

namespace detail {

using io::json;

inline int default_workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

inline std::string decimal(const Rational& q, int digits = 20) {
  return BigFloat(q, BigFloat::bits_for_digits(digits)).to_string(digits);
}

inline std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--check-range", "expected LO..HI");
  try {
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    if (lo < 0 || hi < lo) throw CLI::ValidationError("--check-range", "need 0 <= LO <= HI");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--check-range", "expected LO..HI");
  }
}

inline json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"primary", w->primary}, {"secondary", w->secondary}, {"value", w->value}, {"reason", w->reason}};
}

inline json report_json(const VerificationReport& r) {
  json j = {{"target", target_name(r.target)},
            {"range", r.range},
            {"verdict", r.pass ? "PASS" : "FAIL"},
            {"witness", witness_json(r.witness)},
            {"wall_seconds", r.wall_seconds}};
  if (r.target == VerifyTarget::Rg) {
    json recs = json::array();
    for (const auto& rec : r.rg_records) {
      recs.push_back({{"g", rec.g}, {"all_integer", rec.all_integer}, {"coefficient_sum", io::encode(rec.coefficient_sum)}});
    }
    j["records"] = recs;
    j["zero_sum_g"] = r.zero_sum_g;
  }
  return j;
}

struct Options {
  // moments
  int beta = 2;
  int k_max = 0;
  bool symbolic = false;
  std::string n_value;
  std::string format = "json";
  std::string out_path;
  // wishart
  long k = 0;
  std::string alpha;
  long n = 0;
  // coeffs
  int g_max = 0;
  // genfun
  std::string which;
  int index = 0;
  int order = 12;
  std::string zeta;
  // asympt
  int a_index = -1;
  int b_index = -1;
  int digits = 50;
  std::string check_range;
  // verify-integrality
  std::string target;
  int k_star = -1;
  int g_star = -1;
  int verify_beta = 0;
  // mc
  long samples = 0;
  std::uint64_t seed = 0;
  int shards = 1;
};

inline int emit(const io::TableDocument& doc, std::ostream& out) {
  out << doc.dump() << "\n";
  return kOk;
}

inline int cmd_moments(const Options& o, std::ostream& out) {
  SymmetryClass beta = SymmetryClass::from_int(o.beta);
  std::vector<MomentRatFunc> taus, bs;
  if (o.beta == 2) {
    taus = tau_beta2_symbolic(o.k_max);
  } else {
    auto m = tau_beta1_symbolic(o.k_max);
    taus = std::move(m.taus);
    bs = std::move(m.bs);
  }
  const bool numeric = !o.n_value.empty();
  if (o.format == "csv" && !numeric) throw CLI::ValidationError("--format", "csv needs --n-value");
  Rational nv = numeric ? parse_rational(o.n_value) : Rational(0);

  std::ostringstream text;
  if (o.format == "csv") {
    text << "k,tau_num,tau_den,tau_decimal\n";
    for (const auto& t : taus) {
      Rational v = t.value(nv);
      text << t.k << "," << v.get_num() << "," << v.get_den() << "," << decimal(v) << "\n";
    }
  } else {
    io::TableDocument doc;
    doc.metadata = io::base_metadata("moments");
    doc.metadata["beta"] = beta.beta();
    doc.metadata["k_max"] = o.k_max;
    doc.metadata["mode"] = numeric ? "numeric" : "symbolic";
    if (numeric) doc.metadata["n_value"] = io::encode(nv);
    auto rows = [&](const std::vector<MomentRatFunc>& v) {
      json a = json::array();
      for (const auto& t : v) {
        if (numeric) {
          a.push_back({{"k", t.k}, {"value", io::encode(t.value(nv))}});
        } else {
          a.push_back({{"k", t.k}, {"value", io::encode(t.value)}, {"text", t.value.to_string()}});
        }
      }
      return a;
    };
    doc.payload["tau"] = rows(taus);
    if (!bs.empty()) doc.payload["b"] = rows(bs);
    text << doc.dump() << "\n";
  }
  if (o.out_path.empty()) {
    out << text.str();
  } else {
    std::ofstream f(o.out_path);
    if (!f) throw Error("cannot open output file " + o.out_path);
    f << text.str();
  }
  return kOk;
}

inline int cmd_wishart(const Options& o, std::ostream& out) {
  WishartMomentQuery q{SymmetryClass::from_int(o.beta), o.k, parse_rational(o.alpha), o.n};
  Rational v = wishart_moment(q);
  io::TableDocument doc;
  doc.metadata = io::base_metadata("wishart");
  doc.metadata["beta"] = o.beta;
  doc.metadata["k"] = o.k;
  doc.metadata["alpha"] = io::encode(q.alpha);
  doc.metadata["n"] = o.n;
  if (wishart_uses_empty_complex_ensemble(q)) {
    doc.metadata["note"] = "N = 1 real case: the size-0 complex moments on the right side are taken as 0";
  }
  doc.payload["value"] = io::encode(v);
  return emit(doc, out);
}

inline int cmd_coeffs(const Options& o, std::ostream& out) {
  CoeffTable t = coeff_table(SymmetryClass::from_int(o.beta), o.k_max, o.g_max);
  io::TableDocument doc;
  doc.metadata = io::base_metadata("coeffs");
  doc.metadata["beta"] = o.beta;
  doc.metadata["k_max"] = o.k_max;
  doc.metadata["g_max"] = o.g_max;
  doc.payload = io::encode(t);
  return emit(doc, out);
}

inline json algebraic_json(const AlgebraicSeries& a) {
  return {{"rational_part", io::encode(a.rational_part())},
          {"radical_part", io::encode(a.radical_part())},
          {"expansion", io::encode(a.expand())}};
}

inline int cmd_genfun(const Options& o, std::ostream& out) {
  SymmetryClass beta = SymmetryClass::from_int(o.beta);
  io::TableDocument doc;
  doc.metadata = io::base_metadata("genfun");
  doc.metadata["which"] = o.which;
  doc.metadata["beta"] = o.beta;
  doc.metadata["index"] = o.index;
  auto need_beta2 = [&] {
    if (beta.beta() != 2) throw UnsupportedError(o.which + " is defined only for beta = 2");
  };
  if (o.which == "P") {
    need_beta2();
    doc.payload["poly"] = io::encode(p_polynomial(o.index));
  } else if (o.which == "R") {
    need_beta2();
    PolyFamily r = r_polynomial(o.index, 2);
    doc.payload["poly"] = io::encode(r.poly);
    doc.payload["a"] = io::encode(r.coefficients());
  } else if (o.which == "J") {
    need_beta2();
    if (o.zeta.empty()) {
      doc.payload["ratfunc"] = io::encode(j_ratfunc(o.index));
    } else {
      Rational z = parse_rational(o.zeta);
      doc.metadata["zeta"] = io::encode(z);
      doc.payload["value"] = io::encode(j_eval(o.index, z));
    }
  } else if (o.which == "F" || o.which == "f") {
    doc.metadata["order"] = o.order;
    PartialGF gf = partial_gf(beta, o.which == "F" ? GfKind::F : GfKind::f, o.index, o.order);
    doc.payload = algebraic_json(gf.value);
  } else {
    throw CLI::ValidationError("--which", "expected P, R, F, f or J");
  }
  return emit(doc, out);
}

inline int cmd_asympt(const Options& o, std::ostream& out) {
  io::TableDocument doc;
  doc.metadata = io::base_metadata("asympt");
  doc.metadata["digits"] = o.digits;
  const bool is_a = o.a_index >= 0;
  std::optional<std::pair<int, int>> range;
  if (!o.check_range.empty()) range = parse_range(o.check_range);
  if (is_a) {
    doc.metadata["constant"] = "A";
    doc.metadata["index"] = o.a_index;
    doc.payload["numeric"] = a_constant(o.a_index, o.digits).to_string(o.digits);
  } else {
    Rational b = b_constant(o.b_index);
    doc.metadata["constant"] = "B";
    doc.metadata["index"] = o.b_index;
    doc.payload["exact"] = io::encode(b);
    doc.payload["numeric"] = BigFloat(b, BigFloat::bits_for_digits(o.digits)).to_string(o.digits);
  }
  if (range) {
    RatioReport rep = ratio_diagnostics(is_a ? Direction::k_to_inf : Direction::g_to_inf,
                                        is_a ? o.a_index : o.b_index, range->first, range->second, o.digits);
    json pts = json::array();
    for (const auto& p : rep.points) {
      json e = {{is_a ? "k" : "g", p.index}, {"ratio", p.value.to_string(std::min(o.digits, 20))}};
      if (p.exact) e["exact"] = io::encode(*p.exact);
      pts.push_back(e);
    }
    doc.payload["ratios"] = pts;
    doc.payload["monotone_toward_one"] = rep.monotone_toward_one;
  }
  return emit(doc, out);
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  io::TableDocument doc;
  doc.metadata = io::base_metadata("verify-integrality");
  doc.metadata["target"] = o.target;
  std::vector<VerificationReport> reports;
  const int workers = default_workers();
  if (o.target == "Pk") {
    reports.push_back(verify_pk(o.k_star < 0 ? 2000 : o.k_star, PkOptions{workers, {}}));
  } else if (o.target == "Rg") {
    RgOptions opt;
    opt.workers = workers;
    reports.push_back(verify_rg(o.g_star < 0 ? 40 : o.g_star, opt));
  } else if (o.target == "table") {
    const int k_max = o.k_star < 0 ? 50 : o.k_star;
    const int g_max = o.g_star < 0 ? 30 : o.g_star;
    std::vector<int> betas = o.verify_beta == 0 ? std::vector<int>{1, 2} : std::vector<int>{o.verify_beta};
    for (int b : betas) reports.push_back(verify_table(SymmetryClass::from_int(b), k_max, g_max, workers));
  } else {
    throw CLI::ValidationError("--target", "expected Pk, Rg or table");
  }
  bool pass = true;
  json arr = json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    arr.push_back(report_json(r));
  }
  doc.payload["reports"] = arr;
  doc.payload["verdict"] = pass ? "PASS" : "FAIL";
  emit(doc, out);
  return pass ? kOk : kVerificationFailed;
}

inline int cmd_mc(const Options& o, std::ostream& out) {
  auto est = mc::sample_delay_moment(SymmetryClass::from_int(o.beta), static_cast<int>(o.n), static_cast<int>(o.k),
                                     o.samples, o.seed, o.shards);
  io::TableDocument doc;
  doc.metadata = io::base_metadata("mc");
  doc.metadata["beta"] = o.beta;
  doc.metadata["n"] = o.n;
  doc.metadata["k"] = o.k;
  doc.metadata["samples"] = o.samples;
  doc.metadata["seed"] = std::to_string(o.seed);
  doc.metadata["shards"] = o.shards;
  doc.metadata["rng"] = mc::rng_spec();
  doc.payload["mean"] = est.mean;
  doc.payload["stderr"] = est.stderr_;
  return emit(doc, out);
}

inline int cmd_reproduce(const Options& o, std::ostream& out) {
  io::ReproduceReport rep = io::reproduce_report(io::parse_reproduce_target(o.target));
  io::TableDocument doc;
  doc.metadata = io::base_metadata("reproduce");
  doc.metadata["target"] = o.target;
  json mism = json::array();
  for (const auto& m : rep.mismatches) mism.push_back({{"location", m.location}, {"expected", m.expected}, {"got", m.got}});
  doc.payload = {{"verdict", rep.pass() ? "PASS" : "FAIL"},
                 {"checked", rep.checked},
                 {"mismatches", mism},
                 {"wall_seconds", rep.wall_seconds}};
  emit(doc, out);
  return rep.pass() ? kOk : kVerificationFailed;
}

}  // namespace detail

/// Parses argv (argv[0] is the program name) and runs one subcommand.
inline int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Exact moments and 1/N expansions of the time-delay matrix"};
  app.require_subcommand(1);
  const auto beta_check = CLI::IsMember({1, 2});
  const auto nonneg = CLI::NonNegativeNumber;

  auto* moments = app.add_subcommand("moments", "finite-N moments tau_k(N)");
  moments->add_option("--beta", o.beta)->required()->check(beta_check);
  moments->add_option("--k-max", o.k_max)->required()->check(nonneg);
  auto* sym = moments->add_flag("--symbolic", o.symbolic);
  auto* nval = moments->add_option("--n-value", o.n_value);
  sym->excludes(nval);
  moments->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  moments->add_option("--out", o.out_path);

  auto* wishart = app.add_subcommand("wishart", "Wishart moment E[Tr W^k]");
  wishart->add_option("--beta", o.beta)->required()->check(beta_check);
  wishart->add_option("--k", o.k)->required();
  wishart->add_option("--alpha", o.alpha)->required();
  wishart->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);

  auto* coeffs = app.add_subcommand("coeffs", "1/N expansion coefficient table");
  coeffs->add_option("--beta", o.beta)->required()->check(beta_check);
  coeffs->add_option("--k-max", o.k_max)->required()->check(nonneg);
  coeffs->add_option("--g-max", o.g_max)->required()->check(nonneg);

  auto* genfun = app.add_subcommand("genfun", "generating functions and polynomial families");
  genfun->add_option("--which", o.which)->required()->check(CLI::IsMember({"P", "R", "F", "f", "J"}));
  genfun->add_option("--beta", o.beta)->required()->check(beta_check);
  genfun->add_option("--index", o.index)->required()->check(nonneg);
  genfun->add_option("--order", o.order)->check(nonneg);
  genfun->add_option("--zeta", o.zeta);

  auto* asympt = app.add_subcommand("asympt", "asymptotic constants A_g, B_k");
  auto* group = asympt->add_option_group("constant");
  group->add_option("--a", o.a_index)->check(CLI::PositiveNumber);
  group->add_option("--b", o.b_index)->check(nonneg);
  group->require_option(1);
  asympt->add_option("--digits", o.digits)->check(CLI::PositiveNumber);
  asympt->add_option("--check-range", o.check_range);

  auto* verify = app.add_subcommand("verify-integrality", "integrality checks");
  verify->add_option("--target", o.target)->required()->check(CLI::IsMember({"Pk", "Rg", "table"}));
  verify->add_option("--k-star", o.k_star)->check(nonneg);
  verify->add_option("--g-star", o.g_star)->check(nonneg);
  verify->add_option("--beta", o.verify_beta)->check(beta_check);

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of tau_k");
  mc->add_option("--beta", o.beta)->required()->check(beta_check);
  mc->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  mc->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
  mc->add_option("--samples", o.samples)->required()->check(CLI::PositiveNumber);
  mc->add_option("--seed", o.seed)->required();
  mc->add_option("--shards", o.shards)->check(CLI::PositiveNumber);

  auto* reproduce = app.add_subcommand("reproduce", "diff recomputed tables against the golden store");
  reproduce->add_option("--target", o.target)->required()->check(
      CLI::IsMember({"appendixA", "tableI", "appendixB"}));

  std::vector<const char*> args;
  for (const auto& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*moments) return detail::cmd_moments(o, out);
    if (*wishart) return detail::cmd_wishart(o, out);
    if (*coeffs) return detail::cmd_coeffs(o, out);
    if (*genfun) return detail::cmd_genfun(o, out);
    if (*asympt) return detail::cmd_asympt(o, out);
    if (*verify) return detail::cmd_verify(o, out);
    if (*mc) return detail::cmd_mc(o, out);
    if (*reproduce) return detail::cmd_reproduce(o, out);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kComputation;
  }
  return kUsage;
}

}  // namespace tdm::cli
