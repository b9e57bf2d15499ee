#ifndef SFN_SERIES_HPP
#define SFN_SERIES_HPP

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sfn/error.hpp"
#include "sfn/numfield.hpp"

namespace sfn {

/// Truncated power series c_0 + c_1 z + ... + c_N z^N over a number field.
///
/// The truncation order N travels with every value. Binary operations return
/// the smaller of the two orders.
class Series {
 public:
  Series() = default;
  Series(NumberField field, int order) : field_(std::move(field)), order_(order) {
    if (order < 0) fail(Errc::BadPrecision, "negative truncation order");
    c_.assign(static_cast<std::size_t>(order) + 1, field_.zero());
  }

  /// coeffs[k-1] is the coefficient of z^k, for k = 1..order.
  static Series from_coeffs(const NumberField& field, int order, const std::vector<FieldElem>& coeffs) {
    Series s(field, order);
    for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) < order; ++i) s.set(static_cast<int>(i) + 1, coeffs[i]);
    return s;
  }

  static Series from_rationals(const NumberField& field, int order, const std::vector<Rational>& coeffs) {
    Series s(field, order);
    for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) < order; ++i)
      s.set(static_cast<int>(i) + 1, field.from_rational(coeffs[i]));
    return s;
  }

  static Series constant(const FieldElem& c, int order) {
    Series s(c.field(), order);
    s.c_[0] = c;
    return s;
  }

  /// The series z.
  static Series variable(const NumberField& field, int order) {
    Series s(field, order);
    if (order >= 1) s.c_[1] = field.one();
    return s;
  }

  const NumberField& field() const noexcept { return field_; }
  int order() const noexcept { return order_; }
  const FieldElem& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  const FieldElem& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const FieldElem& const_term() const { return c_[0]; }
  const std::vector<FieldElem>& data() const noexcept { return c_; }

  void set(int k, FieldElem v) {
    if (k < 0 || k > order_) fail(Errc::BadPrecision, "coefficient index " + std::to_string(k) + " outside truncation");
    if (!(v.field() == field_)) fail(Errc::FieldMismatch, "coefficient from a different field");
    c_[static_cast<std::size_t>(k)] = std::move(v);
  }

  /// Lowest k with nonzero coefficient, or order+1 for the zero series.
  int valuation() const {
    for (int k = 0; k <= order_; ++k)
      if (!c_[k].is_zero()) return k;
    return order_ + 1;
  }

  Series truncate(int order) const {
    Series s(field_, std::min(order, order_));
    for (int k = 0; k <= s.order_; ++k) s.c_[k] = c_[k];
    return s;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.field_ == b.field_ && a.c_ == b.c_;
  }

  friend Series operator+(const Series& a, const Series& b) {
    check_same(a, b);
    Series r = a.truncate(b.order_);
    for (int k = 0; k <= r.order_; ++k) r.c_[k] += b.c_[k];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    check_same(a, b);
    Series r = a.truncate(b.order_);
    for (int k = 0; k <= r.order_; ++k) r.c_[k] -= b.c_[k];
    return r;
  }
  Series operator-() const {
    Series r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Series operator*(const Rational& q, Series a) {
    for (auto& c : a.c_) c *= q;
    return a;
  }
  friend Series operator*(const FieldElem& x, Series a) {
    for (auto& c : a.c_)
      if (!c.is_zero()) c = x * c;
    return a;
  }

  friend Series operator*(const Series& a, const Series& b) {
    check_same(a, b);
    const int n = std::min(a.order_, b.order_);
    Series r(a.field_, n);
    const int va = a.valuation(), vb = b.valuation();
    for (int i = va; i <= n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = vb; i + j <= n; ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  std::string to_string() const {
    std::string out;
    for (int k = 0; k <= order_; ++k) {
      if (c_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[k].to_string() + ")";
      if (k >= 1) out += "*z";
      if (k > 1) out += "^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    return out + " + O(z^" + std::to_string(order_ + 1) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.to_string(); }

 private:
  static void check_same(const Series& a, const Series& b) {
    if (!(a.field_ == b.field_)) fail(Errc::FieldMismatch, "series over different fields");
  }

  NumberField field_;
  int order_ = 0;
  std::vector<FieldElem> c_;
};

/// delta(v) = z dv/dz.
inline Series delta(const Series& v) {
  Series r(v.field(), v.order());
  for (int k = 1; k <= v.order(); ++k)
    if (!v[k].is_zero()) r.set(k, v[k] * Rational(k));
  return r;
}

/// Partial inverse of delta: divides the coefficient of z^k by k.
inline Series dint(const Series& v) {
  if (!v.const_term().is_zero()) fail(Errc::NonzeroConstant, "dint needs a series without constant term");
  Series r(v.field(), v.order());
  for (int k = 1; k <= v.order(); ++k)
    if (!v[k].is_zero()) r.set(k, v[k] / Rational(k));
  return r;
}

/// d/dz; the result is known to one order less.
inline Series derivative(const Series& v) {
  Series r(v.field(), std::max(v.order() - 1, 0));
  for (int k = 1; k <= v.order(); ++k)
    if (!v[k].is_zero()) r.set(k - 1, v[k] * Rational(k));
  return r;
}

/// exp(v) for v without constant term, from k y_k = sum_j j v_j y_{k-j}.
inline Series exp_series(const Series& v) {
  if (!v.const_term().is_zero()) fail(Errc::BadConstantTerm, "exp needs zero constant term");
  const int n = v.order();
  std::vector<FieldElem> y(static_cast<std::size_t>(n) + 1, v.field().zero());
  y[0] = v.field().one();
  std::vector<FieldElem> jv(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) jv[j] = v[j] * Rational(j);
  for (int k = 1; k <= n; ++k) {
    FieldElem acc = v.field().zero();
    for (int j = 1; j <= k; ++j)
      if (!jv[j].is_zero() && !y[k - j].is_zero()) acc += jv[j] * y[k - j];
    y[k] = acc / Rational(k);
  }
  Series r(v.field(), n);
  for (int k = 0; k <= n; ++k) r.set(k, std::move(y[k]));
  return r;
}

/// log(y) for y with constant term 1.
inline Series log_series(const Series& y) {
  if (!y.const_term().is_one()) fail(Errc::BadConstantTerm, "log needs constant term 1");
  const int n = y.order();
  std::vector<FieldElem> jv(static_cast<std::size_t>(n) + 1, y.field().zero());
  for (int k = 1; k <= n; ++k) {
    FieldElem acc = y[k] * Rational(k);
    for (int j = 1; j < k; ++j)
      if (!jv[j].is_zero() && !y[k - j].is_zero()) acc -= jv[j] * y[k - j];
    jv[k] = std::move(acc);
  }
  Series r(y.field(), n);
  for (int k = 1; k <= n; ++k) r.set(k, jv[k] / Rational(k));
  return r;
}

namespace detail {

// y^e for y_0 = 1 by the J.C.P. Miller recurrence, coefficients 0..upto.
inline std::vector<FieldElem> unit_power(const Series& y, const Rational& e, int upto) {
  std::vector<FieldElem> w(static_cast<std::size_t>(upto) + 1, y.field().zero());
  w[0] = y.field().one();
  const Rational e1 = e + 1;
  for (int k = 1; k <= upto; ++k) {
    FieldElem acc = y.field().zero();
    for (int j = 1; j <= k; ++j) {
      if (y[j].is_zero() || w[k - j].is_zero()) continue;
      Rational f = e1 * j - k;
      if (f == 0) continue;
      acc += (y[j] * w[k - j]) * f;
    }
    w[k] = acc / Rational(k);
  }
  return w;
}

}  // namespace detail

/// y^e; negative exponents need constant term 1.
inline Series power(const Series& y, long e) {
  const int n = y.order();
  if (y.const_term().is_one()) {
    auto w = detail::unit_power(y, Rational(e), n);
    Series r(y.field(), n);
    for (int k = 0; k <= n; ++k) r.set(k, std::move(w[k]));
    return r;
  }
  if (e < 0) fail(Errc::NonUnitConstant, "negative power needs constant term 1");
  Series result = Series::constant(y.field().one(), n), base = y;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) result = result * base;
    u >>= 1;
    if (u) base = base * base;
  }
  return result;
}

/// 1/y for y with invertible constant term.
inline Series reciprocal(const Series& y) {
  if (y.const_term().is_zero()) fail(Errc::NonUnitConstant, "constant term is zero");
  FieldElem c0inv;
  try {
    c0inv = invert(y.const_term());
  } catch (const Error&) {
    fail(Errc::NonUnitConstant, "constant term is not a unit");
  }
  return c0inv * power(c0inv * y, -1);
}

/// outer(inner(z)); inner must have zero constant term.
inline Series compose(const Series& outer, const Series& inner) {
  if (!(outer.field() == inner.field())) fail(Errc::FieldMismatch, "series over different fields");
  if (!inner.const_term().is_zero()) fail(Errc::InnerHasConstant, "inner series has a constant term");
  const int n = std::min(outer.order(), inner.order());
  const Series in = inner.truncate(n);
  int top = n;
  while (top > 0 && outer[top].is_zero()) --top;
  Series acc = Series::constant(outer[top], n);
  for (int k = top - 1; k >= 0; --k) {
    acc = acc * in;
    // acc has valuation >= 1 here, so the constant slot is free
    acc.set(0, outer[k]);
  }
  return acc;
}

/// V(z^l); terms pushed past the truncation are dropped.
inline Series shift_sh(const Series& v, int l) {
  if (l < 1) fail(Errc::BadPrecision, "shift needs l >= 1");
  Series r(v.field(), v.order());
  r.set(0, v.const_term());
  for (int k = 1; k * l <= v.order(); ++k) r.set(k * l, v[k]);
  return r;
}

namespace detail {

inline FieldElem linear_inverse(const Series& f) {
  if (!f.const_term().is_zero()) fail(Errc::NonzeroConstant, "reversion needs zero constant term");
  if (f.order() < 1 || f[1].is_zero()) fail(Errc::NonUnitLinearTerm, "coefficient of z is zero");
  try {
    return invert(f[1]);
  } catch (const Error&) {
    fail(Errc::NonUnitLinearTerm, "coefficient of z is not a unit");
  }
}

}  // namespace detail

/// Compositional inverse g with f(g(z)) = z = g(f(z)) to the truncation order.
///
/// Newton iteration g <- g - (f(g) - z)/f'(g), doubling the number of correct
/// coefficients each pass.
inline Series revert(const Series& f) {
  const FieldElem a1inv = detail::linear_inverse(f);
  const int n = f.order();
  Series g(f.field(), n);
  g.set(1, a1inv);
  for (int prec = 1; prec < n;) {
    prec = std::min(2 * prec, n);
    const Series ft = f.truncate(prec);
    const Series gt = g.truncate(prec);
    const Series fg = compose(ft, gt);
    Series df(f.field(), prec);  // f' padded: only the low coefficients matter
    for (int k = 0; k < prec; ++k) df.set(k, f[k + 1] * Rational(k + 1));
    const Series dfg = compose(df, gt);
    const Series err = fg - Series::variable(f.field(), prec);
    const Series corr = err * reciprocal(dfg);
    Series next = gt - corr;
    g = Series(f.field(), n);
    for (int k = 0; k <= prec; ++k) g.set(k, next[k]);
  }
  return g;
}

/// Reversion by Lagrange inversion: [z^k] g = (1/k) [z^(k-1)] (z/f)^k.
inline Series revert_lagrange(const Series& f) {
  detail::linear_inverse(f);
  const int n = f.order();
  // h = f/z, known to order n-1
  Series h(f.field(), std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) h.set(k, f[k + 1]);
  const Series zf = reciprocal(h);  // z/f
  Series g(f.field(), n);
  Series pk = Series::constant(f.field().one(), h.order());
  for (int k = 1; k <= n; ++k) {
    pk = pk * zf;
    g.set(k, pk[k - 1] / Rational(k));
  }
  return g;
}

/// [z^k] y^e for y with constant term 1, computed only up to z^k.
inline FieldElem power_coefficient(const Series& y, long e, int k) {
  if (!y.const_term().is_one()) fail(Errc::NonUnitConstant, "power_coefficient needs constant term 1");
  if (k > y.order()) fail(Errc::BadPrecision, "coefficient beyond truncation");
  return detail::unit_power(y, Rational(e), k)[static_cast<std::size_t>(k)];
}

}  // namespace sfn

#endif  // SFN_SERIES_HPP
