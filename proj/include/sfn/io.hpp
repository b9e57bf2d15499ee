#ifndef SFN_IO_HPP
#define SFN_IO_HPP

// JSON and CSV formats. Every number travels as a decimal string so that
// big integers and rationals survive a round trip untouched.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sfn/catalog.hpp"
#include "sfn/error.hpp"
#include "sfn/mseries.hpp"
#include "sfn/numfield.hpp"
#include "sfn/series.hpp"
#include "sfn/sfunc.hpp"

namespace sfn::io {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Parse, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    fail(Errc::Parse, path.string() + ": " + e.what());
  }
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(Errc::Parse, "cannot write " + path.string());
  out << text;
}

inline Integer parse_integer(const Json& j) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = j.dump();
  } else {
    fail(Errc::Parse, "expected an integer string, got " + j.dump());
  }
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) fail(Errc::Parse, "bad integer '" + text + "'");
  return z;
}

/// Accepts "p/q", "p", a native integer, or a [num, den] pair.
inline Rational parse_rational(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) fail(Errc::Parse, "rational pair must have two entries");
    const Integer den = parse_integer(j[1]);
    if (den == 0) fail(Errc::Parse, "zero denominator");
    Rational q(parse_integer(j[0]), den);
    q.canonicalize();
    return q;
  }
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(j));
    return parse_rational(Json::array({text.substr(0, slash), text.substr(slash + 1)}));
  }
  return Rational(parse_integer(j));
}

inline std::string rational_string(const Rational& q) { return q.get_str(); }

inline Json rational_pair(const Rational& q) { return Json::array({q.get_num().get_str(), q.get_den().get_str()}); }

// --- fields and elements ---

inline Json to_json(const NumberField& k) {
  Json mp = Json::array();
  for (const auto& c : k.minpoly()) mp.push_back(c.get_str());
  return Json{{"minpoly", mp}};
}

inline NumberField field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("minpoly") || !j["minpoly"].is_array())
    fail(Errc::Parse, "field spec needs a \"minpoly\" array");
  std::vector<Integer> coeffs;
  for (const auto& c : j["minpoly"]) coeffs.push_back(parse_integer(c));
  return NumberField::make(std::move(coeffs));
}

inline Json to_json(const FieldElem& a) {
  Json out = Json::array();
  for (int i = 0; i < a.degree(); ++i) out.push_back(rational_pair(a[static_cast<std::size_t>(i)]));
  return out;
}

/// A list of coordinates (each a pair or "p/q"), or a single rational.
inline FieldElem elem_from_json(const Json& j, const NumberField& k) {
  // a bare [num, den] pair would be ambiguous with two coordinates, so arrays
  // are always coordinate lists
  if (j.is_array()) {
    if (static_cast<int>(j.size()) > k.degree())
      fail(Errc::Parse, "element has " + std::to_string(j.size()) + " coordinates, field degree is " +
                            std::to_string(k.degree()));
    std::vector<Rational> coords;
    for (const auto& c : j) coords.push_back(parse_rational(c));
    return k.from_coords(std::move(coords));
  }
  return k.from_rational(parse_rational(j));
}

// --- series ---

inline Json to_json(const Series& v) {
  Json coeffs = Json::array();
  for (int k = 1; k <= v.order(); ++k) coeffs.push_back(to_json(v[k]));
  Json out{{"field", to_json(v.field())}, {"order", v.order()}, {"coeffs", coeffs}};
  if (!v.const_term().is_zero()) out["const_term"] = to_json(v.const_term());
  return out;
}

inline NumberField resolve_field(const Json& j, const std::filesystem::path& base) {
  if (!j.contains("field")) return NumberField::rationals();
  const Json& f = j["field"];
  if (f.is_string()) {
    std::filesystem::path p(f.get<std::string>());
    if (p.is_relative()) p = base / p;
    return field_from_json(read_json_file(p));
  }
  return field_from_json(f);
}

inline int read_order(const Json& j, std::size_t fallback) {
  if (!j.contains("order")) return static_cast<int>(fallback);
  const Integer o = parse_integer(j["order"]);
  if (o < 0 || o > 100000) fail(Errc::Parse, "order out of range");
  return static_cast<int>(o.get_si());
}

inline Series series_from_json(const Json& j, const std::filesystem::path& base = ".") {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    fail(Errc::Parse, "series needs a \"coeffs\" array");
  const NumberField k = resolve_field(j, base);
  const Json& cs = j["coeffs"];
  const int order = read_order(j, cs.size());
  if (static_cast<int>(cs.size()) > order) fail(Errc::Parse, "more coefficients than the order");
  Series v(k, order);
  for (std::size_t i = 0; i < cs.size(); ++i) v.set(static_cast<int>(i) + 1, elem_from_json(cs[i], k));
  if (j.contains("const_term")) v.set(0, elem_from_json(j["const_term"], k));
  return v;
}

inline Json to_json(const MSeries& w) {
  Json terms = Json::array();
  for (const auto& [e, c] : w.terms()) terms.push_back(Json{{"exp", e}, {"coeff", to_json(c)}});
  return Json{{"field", to_json(w.field())}, {"nvars", w.nvars()}, {"order", w.order()}, {"coeffs", terms}};
}

inline MSeries mseries_from_json(const Json& j, const std::filesystem::path& base = ".") {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("coeffs") || !j["coeffs"].is_array())
    fail(Errc::Parse, "multivariate series needs \"nvars\" and a \"coeffs\" array");
  const NumberField k = resolve_field(j, base);
  const Integer nv = parse_integer(j["nvars"]);
  if (nv < 1 || nv > 64) fail(Errc::Parse, "nvars out of range");
  const int n = static_cast<int>(nv.get_si());
  if (!j.contains("order")) fail(Errc::Parse, "multivariate series needs \"order\"");
  MSeries w(k, n, read_order(j, 0));
  for (const auto& t : j["coeffs"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff")) fail(Errc::Parse, "term needs exp and coeff");
    Exponent e;
    for (const auto& x : t["exp"]) {
      const Integer v = parse_integer(x);
      if (v < 0 || v > 100000) fail(Errc::Parse, "exponent out of range");
      e.push_back(static_cast<int>(v.get_si()));
    }
    if (static_cast<int>(e.size()) != n) fail(Errc::Parse, "exponent length differs from nvars");
    if (total_degree(e) > w.order()) fail(Errc::Parse, "term beyond the truncation order");
    w.add_term(e, elem_from_json(t["coeff"], k));
  }
  return w;
}

// --- reports ---

inline Json index_json(const Exponent& e, bool multivariate) {
  if (multivariate) return Json(e);
  return Json(e.front());
}

inline Json to_json(const SReport& r) {
  Json viol = Json::array();
  for (const auto& c : r.violations())
    viol.push_back(Json{{"k", index_json(c.index, r.multivariate)},
                        {"p", c.p},
                        {"required", c.required},
                        {"valuation", c.valuation}});
  Json skipped = Json::array();
  for (const auto& p : r.skipped_primes) skipped.push_back(p.get_str());
  Json out{{"s", r.s},
           {"order", r.order},
           {"pass", r.pass},
           {"violations", viol},
           {"skipped_primes", skipped},
           {"checks", r.checks.size()}};
  if (!r.bad_prime_notes.empty()) {
    Json notes = Json::array();
    for (const auto& n : r.bad_prime_notes)
      notes.push_back(Json{{"k", index_json(n.index, r.multivariate)}, {"p", n.p}, {"valuation", n.valuation}});
    out["bad_prime_notes"] = notes;
  }
  return out;
}

inline Json to_json(const JKReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(Json{{"k", e.k},
                           {"f", e.f},
                           {"alpha", e.alpha},
                           {"required", e.required},
                           {"valuation", e.valuation.to_string()},
                           {"pass", e.pass}});
  return Json{{"p", r.p}, {"pass", r.pass}, {"entries", entries}};
}

inline Json to_json(const FramedPolylogTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json row{{"d", e.d}, {"f", e.f}, {"value", rational_string(e.value)}};
    if (e.six_n_over_f_integral) row["six_n_over_f_integral"] = *e.six_n_over_f_integral;
    entries.push_back(row);
  }
  return Json{{"d", t.ds}, {"f", t.fs}, {"entries", entries}};
}

/// Rows d, columns f.
inline std::string to_csv(const FramedPolylogTable& t) {
  std::ostringstream out;
  out << "d";
  for (long f : t.fs) out << ",f=" << f;
  out << "\n";
  for (long d : t.ds) {
    out << d;
    for (long f : t.fs) out << "," << rational_string(t.at(d, f));
    out << "\n";
  }
  return out.str();
}

}  // namespace sfn::io

#endif  // SFN_IO_HPP
