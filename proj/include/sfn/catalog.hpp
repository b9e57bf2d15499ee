#ifndef SFN_CATALOG_HPP
#define SFN_CATALOG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfn/arith.hpp"
#include "sfn/error.hpp"
#include "sfn/numfield.hpp"
#include "sfn/padic.hpp"
#include "sfn/series.hpp"

namespace sfn {

/// Phi_N by exact division of y^N - 1 by Phi_d for the proper divisors d of N.
inline std::vector<Integer> cyclotomic_polynomial(int N) {
  if (N < 1) fail(Errc::BadConductor, "conductor must be >= 1");
  std::vector<Integer> num(static_cast<std::size_t>(N) + 1, Integer(0));
  num[0] = -1;
  num[static_cast<std::size_t>(N)] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    const auto den = cyclotomic_polynomial(d);
    // monic long division
    std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
    for (std::size_t i = num.size(); i-- >= den.size();) {
      const Integer c = num[i];
      const std::size_t shift = i - (den.size() - 1);
      q[shift] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
      if (i == den.size() - 1) break;
    }
    num = std::move(q);
  }
  return num;
}

/// x = sum_i c_i zeta_N^i together with the weight s of Li_s.
struct CyclotomicSpec {
  int conductor = 1;
  std::map<int, Rational> coeffs;
  int s = 2;
};

/// Optional re-expression of the generated series in a subfield Q[x]/(P),
/// given x as an element of the cyclotomic field.
struct Descent {
  NumberField subfield;
  std::vector<Rational> x_in_cyclotomic;  // coordinates in powers of zeta
};

inline NumberField cyclotomic_field(int N) { return NumberField::make(cyclotomic_polynomial(N)); }

/// Solves for the power-basis coordinates of `a` in powers of `x` (both in the
/// same field), with at most `dim` unknowns. Empty if no exact solution exists.
inline std::optional<std::vector<Rational>> express_in_powers(const FieldElem& a, const FieldElem& x, int dim) {
  const int D = a.degree();
  // augmented D x (dim+1) matrix
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(D), std::vector<Rational>(dim + 1, Rational(0)));
  FieldElem pw = a.field().one();
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < D; ++i) m[i][j] = pw[static_cast<std::size_t>(i)];
    pw = pw * x;
  }
  for (int i = 0; i < D; ++i) m[i][dim] = a[static_cast<std::size_t>(i)];
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < dim && row < D; ++col) {
    int piv = row;
    while (piv < D && m[piv][col] == 0) ++piv;
    if (piv == D) continue;
    std::swap(m[row], m[piv]);
    const Rational inv = 1 / m[row][col];
    for (int j = col; j <= dim; ++j) m[row][j] *= inv;
    for (int i = 0; i < D; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (int j = col; j <= dim; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < D; ++i)
    if (m[i][dim] != 0) return std::nullopt;
  std::vector<Rational> sol(static_cast<std::size_t>(dim), Rational(0));
  for (int r = 0; r < row; ++r) sol[static_cast<std::size_t>(pivot_col[r])] = m[r][dim];
  return sol;
}

/// Rewrites every coefficient of v (over the big field) in Q[x]/(P).
inline Series descend(const Series& v, const Descent& descent) {
  const NumberField& big = v.field();
  const NumberField& sub = descent.subfield;
  const FieldElem x = big.from_coords(descent.x_in_cyclotomic);
  // P(x) must vanish in the big field
  FieldElem px = big.zero();
  for (auto it = sub.minpoly().rbegin(); it != sub.minpoly().rend(); ++it) px = px * x + big.from_rational(Rational(*it));
  if (!px.is_zero()) fail(Errc::DescentFailed, "x does not satisfy the subfield's minimal polynomial");
  Series out(sub, v.order());
  for (int k = 0; k <= v.order(); ++k) {
    if (v[k].is_zero()) continue;
    auto sol = express_in_powers(v[k], x, sub.degree());
    if (!sol) fail(Errc::DescentFailed, "coefficient of z^" + std::to_string(k) + " is not in the subfield");
    out.set(k, sub.from_coords(std::move(*sol)));
  }
  return out;
}

/// sum_i c_i Li_s(zeta^i z) over Q(zeta_N): coefficient of z^k is
/// (sum_i c_i zeta^(ik)) / k^s.
inline Series abelian_generator(const CyclotomicSpec& spec, int order,
                                const std::optional<Descent>& descent = std::nullopt) {
  const int N = spec.conductor;
  if (N < 1) fail(Errc::BadConductor, "conductor must be >= 1");
  if (spec.s < 1) fail(Errc::BadPrecision, "s must be positive");
  for (const auto& [i, c] : spec.coeffs)
    if (i < 0 || i >= N) fail(Errc::BadConductor, "coefficient index " + std::to_string(i) + " outside [0, N)");
  const NumberField field = cyclotomic_field(N);
  // zeta^j for j in [0, N)
  std::vector<FieldElem> zeta_pow;
  zeta_pow.push_back(field.one());
  const FieldElem zeta = (N == 1) ? field.one() : (N == 2 ? -field.one() : field.gen());
  for (int j = 1; j < N; ++j) zeta_pow.push_back(zeta_pow.back() * zeta);
  Series v(field, order);
  for (int k = 1; k <= order; ++k) {
    FieldElem a = field.zero();
    for (const auto& [i, c] : spec.coeffs)
      if (c != 0) a += zeta_pow[static_cast<std::size_t>((static_cast<long>(i) * k) % N)] * c;
    v.set(k, a / Rational(ipow(static_cast<std::uint64_t>(k), static_cast<unsigned long>(spec.s))));
  }
  if (descent) return descend(v, *descent);
  return v;
}

/// The series V with delta^(s-1) V = -log Q(z), Q given by its coefficients q_0 = 1, q_1, ...
inline Series from_log_poly(const NumberField& field, const std::vector<FieldElem>& q, int s, int order) {
  if (q.empty() || !q.front().is_one()) fail(Errc::BadConstant, "Q must have constant coefficient 1");
  if (s < 1) fail(Errc::BadPrecision, "s must be positive");
  Series Q(field, order);
  for (std::size_t i = 0; i < q.size() && static_cast<int>(i) <= order; ++i) Q.set(static_cast<int>(i), q[i]);
  Series v = -log_series(Q);
  for (int j = 1; j < s; ++j) v = dint(v);
  return v;
}

/// Y_f with z = (-1)^f z_f Y_f(z_f), where z_f = z/(z-1)^f, to order N.
inline Series framed_polylog_y(long f, int order) {
  const NumberField q = NumberField::rationals();
  const int n = order + 1;
  const Series one_minus_z = Series::constant(q.one(), n) - Series::variable(q, n);
  Series zf = Series::variable(q, n) * power(one_minus_z, -f);
  if (f % 2 != 0) zf = -zf;
  const Series g = revert(zf);
  Series y(q, order);
  const Rational sign = (f % 2 == 0) ? Rational(1) : Rational(-1);
  for (int k = 0; k <= order; ++k) y.set(k, g[k + 1] * sign);
  return y;
}

struct TableEntry {
  long d = 0;
  long f = 0;
  Rational value;
  /// 6 N/f is an integer (f != 0 only); an observed pattern, never enforced.
  std::optional<bool> six_n_over_f_integral;
};

struct FramedPolylogTable {
  std::vector<long> ds;
  std::vector<long> fs;
  std::vector<TableEntry> entries;  // row-major: d outer, f inner

  const Rational& at(long d, long f) const {
    for (const auto& e : entries)
      if (e.d == d && e.f == f) return e.value;
    fail(Errc::Usage, "no table entry for d=" + std::to_string(d) + ", f=" + std::to_string(f));
  }
};

/// N_d^(f) from F_f = dint dint log Y_f = sum_d N_d Li_3(z_f^d), by Moebius
/// inversion of k^3 g_k = sum_{d|k} N_d d^3.
inline std::vector<Rational> framed_polylog_multiplicities(long f, int dmax) {
  if (dmax < 1) return {};
  const Series F = dint(dint(log_series(framed_polylog_y(f, dmax))));
  std::vector<Rational> out;
  for (int k = 1; k <= dmax; ++k) {
    Rational acc = 0;
    for (auto d : divisors(static_cast<std::uint64_t>(k))) {
      const int mu = mobius(static_cast<std::uint64_t>(k) / d);
      if (mu == 0) continue;
      acc += Rational(mu) * Rational(ipow(d, 3)) * F[static_cast<int>(d)][0];
    }
    out.push_back(acc / Rational(ipow(static_cast<std::uint64_t>(k), 3)));
  }
  return out;
}

inline FramedPolylogTable polylog_frame_table(const std::vector<long>& f_range, const std::vector<long>& d_range) {
  for (long d : d_range)
    if (d < 1) fail(Errc::Usage, "d values must be positive");
  FramedPolylogTable t;
  t.ds = d_range;
  t.fs = f_range;
  long dmax = 0;
  for (long d : d_range) dmax = std::max(dmax, d);
  std::map<long, std::vector<Rational>> cols;
  for (long f : f_range) cols[f] = framed_polylog_multiplicities(f, static_cast<int>(dmax));
  for (long d : d_range) {
    for (long f : f_range) {
      TableEntry e;
      e.d = d;
      e.f = f;
      e.value = cols[f][static_cast<std::size_t>(d - 1)];
      if (f != 0) {
        Rational r = e.value * 6 / Rational(f);
        e.six_n_over_f_integral = (r.get_den() == 1);
      }
      t.entries.push_back(std::move(e));
    }
  }
  return t;
}

struct JKEntry {
  long k = 0;
  long f = 0;
  long alpha = 0;
  long required = 0;
  Valuation valuation;
  bool pass = true;
};

struct JKReport {
  std::uint64_t p = 0;
  std::vector<JKEntry> entries;
  bool pass = true;
};

/// binom(pkf, pk) = binom(kf, k) mod p^(3(alpha+1)), alpha = ord_p(k), for p > 3.
inline JKReport jk_check(std::uint64_t p, long kmax, long fmax) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p <= 3) fail(Errc::SmallPrime, "the congruence needs p > 3");
  JKReport rep;
  rep.p = p;
  for (long k = 1; k <= kmax; ++k) {
    for (long f = 1; f <= fmax; ++f) {
      JKEntry e;
      e.k = k;
      e.f = f;
      e.alpha = ord(static_cast<std::uint64_t>(k), p);
      e.required = 3 * (e.alpha + 1);
      const auto pk = static_cast<unsigned long>(p * static_cast<std::uint64_t>(k));
      const Integer diff = binomial(pk * static_cast<unsigned long>(f), pk) -
                           binomial(static_cast<unsigned long>(k * f), static_cast<unsigned long>(k));
      e.valuation = diff == 0 ? Valuation::infinity() : Valuation(ord(diff, p));
      e.pass = e.valuation >= e.required;
      rep.pass = rep.pass && e.pass;
      rep.entries.push_back(e);
    }
  }
  return rep;
}

}  // namespace sfn

#endif  // SFN_CATALOG_HPP
