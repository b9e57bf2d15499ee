// Slow, independent reference computations used only by the tests. Nothing
// here calls into the library's series or p-adic code.
#ifndef SFN_TESTS_ORACLES_HPP
#define SFN_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Poly = std::vector<Q>;  // index = power of z, fixed length n+1

inline Poly zero(int n) { return Poly(static_cast<std::size_t>(n) + 1, Q(0)); }

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r = zero(static_cast<int>(a.size()) - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Poly add(Poly a, const Poly& b, const Q& scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

/// outer(inner) by expanding powers of inner one at a time.
inline Poly substitute(const Poly& outer, const Poly& inner) {
  const int n = static_cast<int>(outer.size()) - 1;
  Poly r = zero(n), pw = zero(n);
  pw[0] = 1;
  for (int k = 0; k <= n; ++k) {
    r = add(r, pw, outer[static_cast<std::size_t>(k)]);
    pw = mul(pw, inner);
  }
  return r;
}

/// exp of a series with zero constant term, by summing v^j / j!.
inline Poly exp_sum(const Poly& v) {
  const int n = static_cast<int>(v.size()) - 1;
  Poly r = zero(n), term = zero(n);
  term[0] = 1;
  for (int j = 0; j <= n; ++j) {
    r = add(r, term);
    term = mul(term, v);
    for (auto& c : term) c /= (j + 1);
  }
  return r;
}

/// Compositional inverse of f = z + ..., by the fixed point g = z - (f(g) - g).
inline Poly revert_fixed_point(const Poly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  Poly lin = zero(n);
  lin[1] = 1;
  Q inv = 1 / f[1];
  Poly g = zero(n);
  g[1] = inv;
  for (int it = 0; it < n + 1; ++it) {
    Poly fg = substitute(f, g);
    // g <- g + (z - f(g)) / f_1
    g = add(g, add(lin, fg, -1), inv);
  }
  return g;
}

inline Z binomial(unsigned long n, unsigned long k) {
  Z r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

/// All y in [0, m) with y^3 = a mod m.
inline std::vector<long> cube_roots_mod(long a, long m) {
  std::vector<long> out;
  for (long y = 0; y < m; ++y)
    if ((y * y % m) * y % m == ((a % m) + m) % m) out.push_back(y);
  return out;
}

/// Every y = (y0, y1, y2) in (Z/m)[x]/(x^3 - c) with y^3 = c, by enumeration.
inline std::vector<std::array<long, 3>> cube_roots_in_ring(long c, long m) {
  auto mul = [&](const std::array<long, 3>& u, const std::array<long, 3>& v) {
    long t[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t[i + j] = (t[i + j] + u[i] * v[j]) % m;
    // x^3 = c, x^4 = c x
    return std::array<long, 3>{(t[0] + c * t[3]) % m, (t[1] + c * t[4]) % m, t[2]};
  };
  std::vector<std::array<long, 3>> out;
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b)
      for (long d = 0; d < m; ++d) {
        const std::array<long, 3> y{a, b, d};
        const auto y3 = mul(mul(y, y), y);
        if (y3[0] == ((c % m) + m) % m && y3[1] == 0 && y3[2] == 0) out.push_back(y);
      }
  return out;
}

/// Bivariate truncated polynomials keyed by (i, j), total degree <= n.
struct Bi {
  int n = 0;
  std::map<std::pair<int, int>, Q> c;

  Q at(int i, int j) const {
    auto it = c.find({i, j});
    return it == c.end() ? Q(0) : it->second;
  }
};

inline Bi bi_mul(const Bi& a, const Bi& b) {
  Bi r{a.n, {}};
  for (const auto& [ea, ca] : a.c)
    for (const auto& [eb, cb] : b.c) {
      const int i = ea.first + eb.first, j = ea.second + eb.second;
      if (i + j <= a.n) r.c[{i, j}] += ca * cb;
    }
  return r;
}

inline Bi bi_add(Bi a, const Bi& b, const Q& scale = 1) {
  for (const auto& [e, v] : b.c) a.c[e] += scale * v;
  return a;
}

inline Bi bi_pow(const Bi& a, int e) {
  Bi r{a.n, {{{0, 0}, Q(1)}}};
  for (int i = 0; i < e; ++i) r = bi_mul(r, a);
  return r;
}

/// outer(u, v) for a bivariate outer.
inline Bi bi_substitute(const Bi& outer, const Bi& u, const Bi& v) {
  Bi r{outer.n, {}};
  for (const auto& [e, c] : outer.c) r = bi_add(r, bi_mul(bi_pow(u, e.first), bi_pow(v, e.second)), c);
  return r;
}

inline Bi bi_exp(const Bi& v) {
  Bi r{v.n, {}}, term{v.n, {{{0, 0}, Q(1)}}};
  for (int j = 0; j <= v.n; ++j) {
    r = bi_add(r, term);
    term = bi_mul(term, v);
    for (auto& [e, c] : term.c) c /= (j + 1);
  }
  return r;
}

}  // namespace oracle

#endif  // SFN_TESTS_ORACLES_HPP
