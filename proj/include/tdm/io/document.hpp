#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tdm/coeffs.hpp"
#include "tdm/ratfunc.hpp"
#include "tdm/series.hpp"

namespace tdm::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kGeneratorVersion = "tdm 1.0.0";

// Exact values never pass through floating point: integers are decimal strings,
// rationals {num, den} string pairs, polynomials ascending coefficient arrays.

inline json encode(const Integer& n) { return n.get_str(); }
inline json encode(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

inline json encode(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(encode(q));
  return a;
}

inline json encode(const Poly& p) { return {{"var", std::string(var_name(p.var()))}, {"coeffs", encode(p.coeffs())}}; }
inline json encode(const RatFunc& r) { return {{"num", encode(r.num())}, {"den", encode(r.den())}}; }
inline json encode(const TruncSeries& s) {
  return {{"var", std::string(var_name(s.var()))}, {"order", s.order()}, {"coeffs", encode(s.coeffs())}};
}

inline Integer decode_integer(const json& j) {
  if (!j.is_string()) throw Error("expected an integer encoded as a decimal string");
  return parse_integer(j.get<std::string>());
}

inline Rational decode_rational(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw Error("expected a {num, den} rational");
  return make_rational(decode_integer(j.at("num")), decode_integer(j.at("den")));
}

inline std::vector<Rational> decode_rationals(const json& j) {
  if (!j.is_array()) throw Error("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(decode_rational(e));
  return out;
}

inline Poly decode_poly(const json& j) {
  return Poly(decode_rationals(j.at("coeffs")), parse_var(j.at("var").get<std::string>()));
}

inline RatFunc decode_ratfunc(const json& j) {
  return ratfunc_reduce(decode_poly(j.at("num")), decode_poly(j.at("den")));
}

inline TruncSeries decode_series(const json& j) {
  TruncSeries s(decode_rationals(j.at("coeffs")), parse_var(j.at("var").get<std::string>()));
  if (s.order() != j.at("order").get<int>()) throw Error("series order does not match its coefficients");
  return s;
}

/// True if any number in the tree is a float.
inline bool contains_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured()) {
    for (const auto& e : j) {
      if (contains_float(e)) return true;
    }
  }
  return false;
}

struct TableDocument {
  int schema_version = kSchemaVersion;
  json metadata = json::object();
  json payload = json::object();

  json to_json() const {
    return {{"schema_version", schema_version}, {"metadata", metadata}, {"payload", payload}};
  }
  std::string dump(int indent = 2) const { return to_json().dump(indent); }

  static TableDocument parse(const std::string& text) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(std::string("malformed document: ") + e.what());
    }
    TableDocument d;
    d.schema_version = j.at("schema_version").get<int>();
    if (d.schema_version != kSchemaVersion) throw Error("unsupported schema version");
    d.metadata = j.at("metadata");
    d.payload = j.at("payload");
    return d;
  }
};

inline json base_metadata(const std::string& command) {
  return {{"command", command}, {"generator", kGeneratorVersion}};
}

inline json encode(const CoeffTable& t) {
  json tau = json::array();
  json aux = json::array();
  for (int k = 0; k <= t.k_max(); ++k) {
    tau.push_back(encode(t.column(k)));
    if (t.has_aux()) aux.push_back(encode(t.aux_column(k)));
  }
  json out = {{"beta", t.beta().beta()}, {"k_max", t.k_max()}, {"g_max", t.g_max()}, {"tau", tau}};
  if (t.has_aux()) out["b"] = aux;
  return out;
}

}  // namespace tdm::io
