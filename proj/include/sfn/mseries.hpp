#ifndef SFN_MSERIES_HPP
#define SFN_MSERIES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sfn/error.hpp"
#include "sfn/numfield.hpp"

namespace sfn {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Power series in n variables truncated at total degree T.
///
/// Only nonzero coefficients are stored; keys iterate in lexicographic order.
/// A constant term (the zero exponent) is allowed for intermediate values such
/// as exp(...) even though framing inputs and outputs never carry one.
class MSeries {
 public:
  using Terms = std::map<Exponent, FieldElem>;

  MSeries() = default;
  MSeries(NumberField field, int nvars, int order) : field_(std::move(field)), nvars_(nvars), order_(order) {
    if (nvars < 1) fail(Errc::DimensionMismatch, "need at least one variable");
    if (order < 0) fail(Errc::BadPrecision, "negative truncation order");
  }

  static MSeries constant(const FieldElem& c, int nvars, int order) {
    MSeries s(c.field(), nvars, order);
    s.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return s;
  }

  /// The coordinate z^i (0-based i).
  static MSeries variable(const NumberField& field, int nvars, int order, int i) {
    MSeries s(field, nvars, order);
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    s.add_term(e, field.one());
    return s;
  }

  const NumberField& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  int order() const noexcept { return order_; }
  const Terms& terms() const noexcept { return terms_; }

  FieldElem coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  FieldElem const_term() const { return coeff(Exponent(static_cast<std::size_t>(nvars_), 0)); }

  /// Adds c to the coefficient of z^e; terms beyond the truncation are dropped.
  void add_term(const Exponent& e, const FieldElem& c) {
    if (static_cast<int>(e.size()) != nvars_) fail(Errc::DimensionMismatch, "exponent length differs from nvars");
    if (!(c.field() == field_)) fail(Errc::FieldMismatch, "coefficient from a different field");
    if (total_degree(e) > order_ || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void set(const Exponent& e, const FieldElem& c) {
    terms_.erase(e);
    add_term(e, c);
  }

  MSeries truncate(int order) const {
    MSeries r(field_, nvars_, std::min(order, order_));
    for (const auto& [e, c] : terms_)
      if (total_degree(e) <= r.order_) r.terms_.emplace(e, c);
    return r;
  }

  /// Terms of total degree exactly m.
  MSeries homogeneous(int m) const {
    MSeries r(field_, nvars_, order_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == m) r.terms_.emplace(e, c);
    return r;
  }

  int min_degree() const {
    int m = order_ + 1;
    for (const auto& [e, c] : terms_) m = std::min(m, total_degree(e));
    return m;
  }

  friend bool operator==(const MSeries& a, const MSeries& b) {
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  friend MSeries operator+(const MSeries& a, const MSeries& b) {
    check_same(a, b);
    MSeries r = a.truncate(b.order_);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MSeries operator-(const MSeries& a, const MSeries& b) {
    check_same(a, b);
    MSeries r = a.truncate(b.order_);
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  MSeries operator-() const {
    MSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend MSeries operator*(const Rational& q, const MSeries& a) {
    MSeries r(a.field_, a.nvars_, a.order_);
    if (q == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * q);
    return r;
  }
  friend MSeries operator*(const FieldElem& x, const MSeries& a) {
    MSeries r(a.field_, a.nvars_, a.order_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, x * c);
    return r;
  }

  friend MSeries operator*(const MSeries& a, const MSeries& b) {
    check_same(a, b);
    MSeries r(a.field_, a.nvars_, std::min(a.order_, b.order_));
    std::vector<std::pair<const Exponent*, int>> bd;
    bd.reserve(b.terms_.size());
    for (const auto& kv : b.terms_) bd.emplace_back(&kv.first, total_degree(kv.first));
    Exponent e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
      const int da = total_degree(ea);
      std::size_t idx = 0;
      for (const auto& [eb, cb] : b.terms_) {
        if (da + bd[idx++].second > r.order_) continue;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        out += "*z" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
      }
    }
    if (out.empty()) out = "0";
    return out + " + O(deg " + std::to_string(order_ + 1) + ")";
  }

 private:
  static void check_same(const MSeries& a, const MSeries& b) {
    if (!(a.field_ == b.field_)) fail(Errc::FieldMismatch, "series over different fields");
    if (a.nvars_ != b.nvars_) fail(Errc::DimensionMismatch, "series in different numbers of variables");
  }

  NumberField field_;
  int nvars_ = 0;
  int order_ = 0;
  Terms terms_;
};

/// delta_i = z^i d/dz^i (0-based i).
inline MSeries delta(const MSeries& w, int i) {
  MSeries r(w.field(), w.nvars(), w.order());
  for (const auto& [e, c] : w.terms())
    if (e[static_cast<std::size_t>(i)] != 0) r.add_term(e, c * Rational(e[static_cast<std::size_t>(i)]));
  return r;
}

/// exp(v) for v without constant term, graded by total degree:
/// m Y_m = sum_j (j V_j) Y_(m-j).
inline MSeries exp_series(const MSeries& v) {
  if (!v.const_term().is_zero()) fail(Errc::BadConstantTerm, "exp needs zero constant term");
  const int T = v.order();
  std::vector<MSeries> jv(static_cast<std::size_t>(T) + 1), y(static_cast<std::size_t>(T) + 1);
  for (int j = 1; j <= T; ++j) jv[j] = Rational(j) * v.homogeneous(j);
  y[0] = MSeries::constant(v.field().one(), v.nvars(), T);
  for (int m = 1; m <= T; ++m) {
    MSeries acc(v.field(), v.nvars(), T);
    for (int j = 1; j <= m; ++j)
      if (!jv[j].terms().empty() && !y[m - j].terms().empty()) acc = acc + jv[j] * y[m - j];
    y[m] = Rational(1, m) * acc;
  }
  MSeries r(v.field(), v.nvars(), T);
  for (const auto& part : y)
    for (const auto& [e, c] : part.terms()) r.add_term(e, c);
  return r;
}

/// 1/u for u with constant term 1 (finite Neumann sum).
inline MSeries reciprocal_unit(const MSeries& u) {
  if (!u.const_term().is_one()) fail(Errc::NonUnitConstant, "reciprocal needs constant term 1");
  const MSeries one = MSeries::constant(u.field().one(), u.nvars(), u.order());
  const MSeries t = one - u;  // no constant term
  MSeries acc = one, pw = one;
  for (int j = 1; j <= u.order(); ++j) {
    pw = pw * t;
    if (pw.terms().empty()) break;
    acc = acc + pw;
  }
  return acc;
}

/// outer(inner_1, ..., inner_n). Each inner series has zero constant term and
/// lives in a common variable set; the result is truncated at the smallest order.
inline MSeries compose(const MSeries& outer, const std::vector<MSeries>& inner) {
  if (static_cast<int>(inner.size()) != outer.nvars())
    fail(Errc::DimensionMismatch, "need one inner series per outer variable");
  int T = outer.order();
  const int m = inner.empty() ? 1 : inner.front().nvars();
  for (const auto& s : inner) {
    if (!(s.field() == outer.field())) fail(Errc::FieldMismatch, "series over different fields");
    if (s.nvars() != m) fail(Errc::DimensionMismatch, "inner series in different variable sets");
    if (!s.const_term().is_zero()) fail(Errc::InnerHasConstant, "inner series has a constant term");
    T = std::min(T, s.order());
  }
  // powers[i][e] = inner_i^e truncated at T
  std::vector<std::vector<MSeries>> powers(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    powers[i].push_back(MSeries::constant(outer.field().one(), m, T));
    const MSeries base = inner[i].truncate(T);
    for (int e = 1; e <= T; ++e) powers[i].push_back(powers[i].back() * base);
  }
  MSeries r(outer.field(), m, T);
  for (const auto& [e, c] : outer.terms()) {
    if (total_degree(e) > T) continue;
    MSeries term = MSeries::constant(c, m, T);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term = term * powers[i][static_cast<std::size_t>(e[i])];
    r = r + term;
  }
  return r;
}

/// Inverse of the coordinate change z^i -> sigma_i z^i U_i(z), U_i(0) = 1.
///
/// Fixed-point iteration G_i = sigma_i zeta^i / U_i(G); pass m makes total
/// degree m+1 exact.
inline std::vector<MSeries> invert_map(const std::vector<MSeries>& zmap, const std::vector<int>& signs) {
  const int n = static_cast<int>(zmap.size());
  if (n == 0 || static_cast<int>(signs.size()) != n) fail(Errc::DimensionMismatch, "map and signs differ in length");
  const NumberField& field = zmap.front().field();
  int T = zmap.front().order();
  for (const auto& s : zmap) {
    if (s.nvars() != n) fail(Errc::DimensionMismatch, "coordinate change must be n series in n variables");
    T = std::min(T, s.order());
  }
  if (T < 1) fail(Errc::BadPrecision, "coordinate change needs truncation order >= 1");
  std::vector<MSeries> recip;  // 1/U_i
  for (int i = 0; i < n; ++i) {
    const int sigma = signs[static_cast<std::size_t>(i)];
    if (sigma != 1 && sigma != -1) fail(Errc::BadLinearPart, "signs must be +1 or -1");
    MSeries u(field, n, T - 1);
    for (const auto& [e, c] : zmap[static_cast<std::size_t>(i)].terms()) {
      if (total_degree(e) > T) continue;
      if (e[static_cast<std::size_t>(i)] == 0)
        fail(Errc::BadLinearPart, "component " + std::to_string(i + 1) + " is not divisible by its own variable");
      Exponent d = e;
      d[static_cast<std::size_t>(i)] -= 1;
      u.add_term(d, c * Rational(sigma));
    }
    if (!u.const_term().is_one())
      fail(Errc::BadLinearPart, "linear part of component " + std::to_string(i + 1) + " is not sigma_i z^i");
    recip.push_back(reciprocal_unit(u));
  }
  std::vector<MSeries> g;
  for (int i = 0; i < n; ++i) g.push_back(Rational(signs[static_cast<std::size_t>(i)]) * MSeries::variable(field, n, T, i));
  for (int pass = 1; pass < T; ++pass) {
    std::vector<MSeries> gt;
    for (const auto& s : g) gt.push_back(s.truncate(pass));
    std::vector<MSeries> next;
    for (int i = 0; i < n; ++i) {
      MSeries r = compose(recip[static_cast<std::size_t>(i)].truncate(pass), gt);
      MSeries full(field, n, T);
      for (const auto& [e, c] : r.terms()) {
        Exponent d = e;
        d[static_cast<std::size_t>(i)] += 1;
        full.add_term(d, c * Rational(signs[static_cast<std::size_t>(i)]));
      }
      next.push_back(std::move(full));
    }
    g = std::move(next);
  }
  return g;
}

}  // namespace sfn

#endif  // SFN_MSERIES_HPP
