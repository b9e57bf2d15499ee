#ifndef SFN_CLI_HPP
#define SFN_CLI_HPP

// Command-line front end. Exit codes: 0 success / verification passed,
// 1 violations found (report still written), 2 usage or input error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfn/catalog.hpp"
#include "sfn/error.hpp"
#include "sfn/framing.hpp"
#include "sfn/io.hpp"
#include "sfn/sfunc.hpp"

namespace sfn::cli {

/// "1..7", "2,3,5" or a mix such as "1..3,7".
inline std::vector<long> parse_range(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string part;
  auto to_long = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      fail(Errc::Parse, "bad range '" + text + "'");
    }
  };
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_long(part));
      continue;
    }
    const long lo = to_long(part.substr(0, dots));
    const long hi = to_long(part.substr(dots + 2));
    if (hi < lo || hi - lo > 10000) fail(Errc::Parse, "bad range '" + text + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) fail(Errc::Parse, "empty range");
  return out;
}

namespace detail {

struct Options {
  std::string series, field, kappa, coeffs, x, out, d_range = "1..7", f_range = "2..5", format = "json";
  std::optional<int> s, order, conductor;
  std::optional<long> f;
  bool elementary = false, primes_extra = false;
  std::uint64_t p = 0;
  long kmax = 0, fmax = 0;
  unsigned jobs = 0;
};

inline std::filesystem::path parent_of(const std::string& path) {
  auto parent = std::filesystem::path(path).parent_path();
  return parent.empty() ? std::filesystem::path(".") : parent;
}

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty())
    out << text;
  else
    io::write_text_file(o.out, text);
}

inline int require_int(const std::optional<int>& v, const char* flag) {
  if (!v) fail(Errc::Usage, std::string(flag) + " is required");
  return *v;
}

inline NumberField field_or_rationals(const Options& o) {
  if (o.field.empty()) return NumberField::rationals();
  return io::field_from_json(io::read_json_file(o.field));
}

inline int verify(const Options& o, std::ostream& out) {
  const io::Json j = io::read_json_file(o.series);
  const int s = require_int(o.s, "--s");
  if (s < 0) fail(Errc::Usage, "--s must be non-negative");
  CheckOptions opts{o.jobs, o.primes_extra};
  const SReport r = j.contains("nvars") ? check_sfunction(io::mseries_from_json(j, parent_of(o.series)), s, opts)
                                        : check_sfunction(io::series_from_json(j, parent_of(o.series)), s, opts);
  emit(o, io::to_json(r).dump(2) + "\n", out);
  return r.pass ? 0 : 1;
}

inline int frame(const Options& o, std::ostream& out) {
  const Series w = io::series_from_json(io::read_json_file(o.series), parent_of(o.series));
  if (o.elementary == o.f.has_value()) fail(Errc::Usage, "give exactly one of --f or --elementary");
  const Series r = o.elementary ? frame_elementary(w) : frame_f(w, *o.f);
  emit(o, io::to_json(r).dump(2) + "\n", out);
  return 0;
}

inline int frame_multi_cmd(const Options& o, std::ostream& out) {
  const MSeries w = io::mseries_from_json(io::read_json_file(o.series), parent_of(o.series));
  const MSeries r = frame_multi(w, Kappa::parse(o.kappa));
  emit(o, io::to_json(r).dump(2) + "\n", out);
  return 0;
}

inline int dwork(const Options& o, std::ostream& out) {
  const Series v = io::series_from_json(io::read_json_file(o.series), parent_of(o.series));
  const auto b = dwork_factor(v);
  io::Json bs = io::Json::array();
  bool integral = true;
  std::vector<std::string> primes;
  for (const auto& x : b) {
    bs.push_back(io::to_json(x));
    for (const auto& p : denominator_support(x)) {
      if (!v.field().is_good_prime(p.get_ui())) continue;
      integral = false;
      if (std::find(primes.begin(), primes.end(), p.get_str()) == primes.end()) primes.push_back(p.get_str());
    }
  }
  io::Json r{{"field", io::to_json(v.field())}, {"b", bs}, {"integral", integral}, {"denominator_primes", primes}};
  emit(o, r.dump(2) + "\n", out);
  return 0;
}

inline int gen_abelian(const Options& o, std::ostream& out) {
  CyclotomicSpec spec;
  spec.conductor = require_int(o.conductor, "--conductor");
  spec.s = o.s.value_or(2);
  if (o.coeffs.empty()) fail(Errc::Usage, "--coeffs is required");
  io::Json cj = io::read_json_file(o.coeffs);
  if (cj.is_object() && cj.contains("coeffs")) cj = cj["coeffs"];
  if (!cj.is_object()) fail(Errc::Parse, "coefficients must map index to rational");
  for (const auto& [key, val] : cj.items()) spec.coeffs[static_cast<int>(io::parse_integer(key).get_si())] = io::parse_rational(val);
  std::optional<Descent> descent;
  if (!o.field.empty() || !o.x.empty()) {
    if (o.field.empty() || o.x.empty()) fail(Errc::Usage, "descent needs both --field and --x");
    Descent d{io::field_from_json(io::read_json_file(o.field)), {}};
    const NumberField cyc = cyclotomic_field(spec.conductor);
    const auto x = io::elem_from_json(io::read_json_file(o.x), cyc);
    d.x_in_cyclotomic.assign(x.coords().begin(), x.coords().end());
    descent = std::move(d);
  }
  const Series v = abelian_generator(spec, require_int(o.order, "--order"), descent);
  emit(o, io::to_json(v).dump(2) + "\n", out);
  return 0;
}

inline int gen_crt(const Options& o, std::ostream& out) {
  const NumberField k = field_or_rationals(o);
  if (o.x.empty()) fail(Errc::Usage, "--x is required");
  const FieldElem x = io::elem_from_json(io::read_json_file(o.x), k);
  const Series v = generate_crt(k, x, o.s.value_or(2), require_int(o.order, "--order"));
  emit(o, io::to_json(v).dump(2) + "\n", out);
  return 0;
}

inline int from_log(const Options& o, std::ostream& out) {
  const NumberField k = field_or_rationals(o);
  if (o.coeffs.empty()) fail(Errc::Usage, "--coeffs is required");
  io::Json cj = io::read_json_file(o.coeffs);
  if (cj.is_object() && cj.contains("coeffs")) cj = cj["coeffs"];
  if (!cj.is_array()) fail(Errc::Parse, "Q coefficients must be a list, constant term first");
  std::vector<FieldElem> q;
  for (const auto& c : cj) q.push_back(io::elem_from_json(c, k));
  const Series v = from_log_poly(k, q, o.s.value_or(2), require_int(o.order, "--order"));
  emit(o, io::to_json(v).dump(2) + "\n", out);
  return 0;
}

inline int polylog_table(const Options& o, std::ostream& out) {
  const auto t = polylog_frame_table(parse_range(o.f_range), parse_range(o.d_range));
  if (o.format == "csv")
    emit(o, io::to_csv(t), out);
  else
    emit(o, io::to_json(t).dump(2) + "\n", out);
  return 0;
}

inline int jk(const Options& o, std::ostream& out) {
  if (o.kmax < 1 || o.fmax < 1) fail(Errc::Usage, "--kmax and --fmax must be positive");
  const auto r = jk_check(o.p, o.kmax, o.fmax);
  emit(o, io::to_json(r).dump(2) + "\n", out);
  return r.pass ? 0 : 1;
}

}  // namespace detail

inline int run(const std::vector<std::string>& argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  detail::Options o;
  CLI::App app{"Verify and construct s-functions over number fields", "sfn"};
  app.require_subcommand(1, 1);

  auto* verify = app.add_subcommand("verify", "Check the s-function congruences of a series file");
  verify->add_option("--series", o.series)->required();
  verify->add_option("--s", o.s)->required();
  verify->add_option("--jobs", o.jobs);
  verify->add_flag("--primes-extra", o.primes_extra, "Also report valuations at bad primes");

  auto* frame = app.add_subcommand("frame", "Frame a univariate series");
  frame->add_option("--series", o.series)->required();
  frame->add_option("--f", o.f);
  frame->add_flag("--elementary", o.elementary);

  auto* fmulti = app.add_subcommand("frame-multi", "Frame a multivariate series by a symmetric matrix");
  fmulti->add_option("--series", o.series)->required();
  fmulti->add_option("--kappa", o.kappa)->required();

  auto* dwork = app.add_subcommand("dwork", "Factor a 1-function into Dwork coefficients");
  dwork->add_option("--series", o.series)->required();

  auto* gab = app.add_subcommand("gen-abelian", "Combination of polylogarithms at roots of unity");
  gab->add_option("--conductor", o.conductor)->required();
  gab->add_option("--coeffs", o.coeffs)->required();
  gab->add_option("--s", o.s);
  gab->add_option("--order", o.order)->required();
  gab->add_option("--field", o.field, "Subfield to descend to");
  gab->add_option("--x", o.x, "Subfield generator in cyclotomic coordinates");

  auto* gcrt = app.add_subcommand("gen-crt", "Locally analytic s-function with a_1 = x");
  gcrt->add_option("--field", o.field);
  gcrt->add_option("--x", o.x)->required();
  gcrt->add_option("--s", o.s);
  gcrt->add_option("--order", o.order)->required();

  auto* flog = app.add_subcommand("from-log", "Series V with delta^(s-1) V = -log Q");
  flog->add_option("--field", o.field);
  flog->add_option("--coeffs", o.coeffs)->required();
  flog->add_option("--s", o.s);
  flog->add_option("--order", o.order)->required();

  auto* table = app.add_subcommand("polylog-table", "Framed polylogarithm multiplicities");
  table->add_option("--d", o.d_range);
  table->add_option("--f", o.f_range);
  table->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* jk = app.add_subcommand("jk-check", "Binomial congruence check");
  jk->add_option("--p", o.p)->required();
  jk->add_option("--kmax", o.kmax)->required();
  jk->add_option("--fmax", o.fmax)->required();

  for (auto* sub : {verify, frame, fmulti, dwork, gab, gcrt, flog, table, jk}) {
    sub->add_option("--out", o.out, "Write output here instead of stdout");
    if (sub != table) sub->add_option("--format", o.format)->check(CLI::IsMember({"json"}));
  }

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();  // program name
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "sfn: usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return detail::verify(o, out);
    if (frame->parsed()) return detail::frame(o, out);
    if (fmulti->parsed()) return detail::frame_multi_cmd(o, out);
    if (dwork->parsed()) return detail::dwork(o, out);
    if (gab->parsed()) return detail::gen_abelian(o, out);
    if (gcrt->parsed()) return detail::gen_crt(o, out);
    if (flog->parsed()) return detail::from_log(o, out);
    if (table->parsed()) return detail::polylog_table(o, out);
    if (jk->parsed()) return detail::jk(o, out);
  } catch (const Error& e) {
    err << "sfn: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "sfn: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

inline int run(int argc, char** argv) { return run(std::vector<std::string>(argv, argv + argc)); }

}  // namespace sfn::cli

#endif  // SFN_CLI_HPP
