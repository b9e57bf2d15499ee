#ifndef SFN_NUMFIELD_HPP
#define SFN_NUMFIELD_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sfn/arith.hpp"
#include "sfn/error.hpp"

namespace sfn {

class FieldElem;

namespace detail {

struct FieldData {
  std::vector<Integer> minpoly;  // c_0 .. c_d, c_d = 1
  int degree = 0;
  Integer discriminant;
  std::vector<Integer> bad_primes;
  // reduction[j] = coordinates of x^(d+j) in the power basis, j = 0 .. d-2
  std::vector<std::vector<Integer>> reduction;
};

using QPoly = std::vector<Rational>;

inline void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a = q*b + r over Q; b nonzero and trimmed.
inline void divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size()) {
    Rational c = a.back() / lead;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  r = std::move(a);
}

// Determinant by fraction-free (Bareiss) elimination.
inline Integer bareiss_det(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline Integer resultant(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  return bareiss_det(std::move(s));
}

}  // namespace detail

/// K = Q[x]/(P) for a monic squarefree integer polynomial P.
///
/// Primes dividing disc(P) are treated as bad throughout; disc(P) stands in
/// for the field discriminant, which divides it.
class NumberField {
 public:
  NumberField() = default;

  static NumberField make(std::vector<Integer> minpoly) {
    while (minpoly.size() > 1 && minpoly.back() == 0) minpoly.pop_back();
    if (minpoly.size() < 2) fail(Errc::DegreeZero, "minimal polynomial must have degree >= 1");
    if (minpoly.back() != 1) fail(Errc::NotMonic, "leading coefficient must be 1");
    auto data = std::make_shared<detail::FieldData>();
    const int d = static_cast<int>(minpoly.size()) - 1;
    data->degree = d;
    std::vector<Integer> deriv(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) deriv[i - 1] = minpoly[i] * i;
    Integer res = detail::resultant(minpoly, deriv);
    const long half = static_cast<long>(d) * (d - 1) / 2;
    data->discriminant = (half % 2 == 0) ? res : Integer(-res);
    if (data->discriminant == 0) fail(Errc::NotSquarefree, "minimal polynomial has a repeated factor");
    data->bad_primes = prime_divisors(data->discriminant);

    // x^(d+j) for j = 0 .. d-2
    std::vector<Integer> cur(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) cur[i] = -minpoly[i];
    for (int j = 0; j + 1 < d; ++j) {
      data->reduction.push_back(cur);
      Integer top = cur[d - 1];
      for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1] - top * minpoly[i];
      cur[0] = -top * minpoly[0];
    }
    data->minpoly = std::move(minpoly);
    NumberField f;
    f.data_ = std::move(data);
    return f;
  }

  static NumberField make(std::initializer_list<long> coeffs) {
    std::vector<Integer> v;
    for (long c : coeffs) v.emplace_back(c);
    return make(std::move(v));
  }

  /// Q presented as Q[x]/(x).
  static NumberField rationals() { return make({0, 1}); }

  bool valid() const noexcept { return data_ != nullptr; }
  int degree() const noexcept { return data_->degree; }
  const std::vector<Integer>& minpoly() const noexcept { return data_->minpoly; }
  const Integer& discriminant() const noexcept { return data_->discriminant; }
  const std::vector<Integer>& bad_primes() const noexcept { return data_->bad_primes; }
  bool is_good_prime(std::uint64_t p) const {
    return !mpz_divisible_ui_p(data_->discriminant.get_mpz_t(), static_cast<unsigned long>(p));
  }
  const detail::FieldData& data() const noexcept { return *data_; }

  bool operator==(const NumberField& other) const {
    return data_ == other.data_ || (data_ && other.data_ && data_->minpoly == other.data_->minpoly);
  }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem gen() const;
  FieldElem from_rational(const Rational& q) const;
  FieldElem from_coords(std::vector<Rational> coords) const;

  std::string to_string() const {
    std::ostringstream os;
    os << "Q[x]/(";
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Integer& c = minpoly()[i];
      if (c == 0) continue;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      Integer a = abs(c);
      if (i == 0 || a != 1) os << a;
      if (i >= 1) os << "x";
      if (i > 1) os << "^" << i;
      first = false;
    }
    os << ")";
    return os.str();
  }

 private:
  std::shared_ptr<const detail::FieldData> data_;
};

/// Element of K in the power basis 1, x, ..., x^(d-1).
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(NumberField field, std::vector<Rational> coords)
      : field_(std::move(field)), c_(std::move(coords)) {
    c_.resize(static_cast<std::size_t>(field_.degree()), Rational(0));
  }

  const NumberField& field() const noexcept { return field_; }
  std::span<const Rational> coords() const noexcept { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  int degree() const noexcept { return field_.degree(); }

  bool is_zero() const {
    for (const auto& q : c_)
      if (q != 0) return false;
    return true;
  }
  bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  FieldElem& operator+=(const FieldElem& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  FieldElem& operator-=(const FieldElem& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  FieldElem& operator*=(const Rational& q) {
    for (auto& c : c_) c *= q;
    return *this;
  }
  FieldElem& operator/=(const Rational& q) {
    if (q == 0) fail(Errc::Zero, "division by zero");
    for (auto& c : c_) c /= q;
    return *this;
  }
  FieldElem operator-() const {
    FieldElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const Rational& q) { return a *= q; }
  friend FieldElem operator*(const Rational& q, FieldElem a) { return a *= q; }
  friend FieldElem operator/(FieldElem a, const Rational& q) { return a /= q; }

  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) { return multiply(a, b); }
  FieldElem& operator*=(const FieldElem& o) { return *this = multiply(*this, o); }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  /// Product reduced modulo the minimal polynomial.
  friend FieldElem multiply(const FieldElem& a, const FieldElem& b) {
    a.check_same(b);
    const int d = a.degree();
    if (d == 1) return FieldElem(a.field_, {a.c_[0] * b.c_[0]});
    std::vector<Rational> prod(static_cast<std::size_t>(2 * d - 1), Rational(0));
    for (int i = 0; i < d; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (b.c_[j] == 0) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    const auto& red = a.field_.data().reduction;
    std::vector<Rational> out(prod.begin(), prod.begin() + d);
    for (int j = 0; j + 1 < d; ++j) {
      const Rational& t = prod[d + j];
      if (t == 0) continue;
      for (int i = 0; i < d; ++i)
        if (red[j][i] != 0) out[i] += t * red[j][i];
    }
    FieldElem r;
    r.field_ = a.field_;
    r.c_ = std::move(out);
    return r;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
  friend FieldElem invert(const FieldElem& a) {
    if (a.is_zero()) fail(Errc::Zero, "zero has no inverse");
    const int d = a.degree();
    if (d == 1) return FieldElem(a.field_, {1 / a.c_[0]});
    using detail::QPoly;
    QPoly r0, r1(a.c_.begin(), a.c_.end());
    for (const auto& c : a.field_.minpoly()) r0.emplace_back(c);
    detail::trim(r1);
    QPoly s0{Rational(0)}, s1{Rational(1)};  // coefficients of a
    while (r1.size() > 1) {
      QPoly q, r;
      detail::divmod(r0, r1, q, r);
      QPoly s2(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
      for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
      detail::trim(s2);
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r1.empty()) fail(Errc::ZeroDivisor, "element is a zero divisor in Q[x]/(P)");
    for (auto& c : s1) c /= r1[0];
    std::vector<Rational> coords(static_cast<std::size_t>(d), Rational(0));
    // s1 has degree < d by construction of the Euclidean sequence
    for (std::size_t i = 0; i < s1.size() && i < coords.size(); ++i) coords[i] = s1[i];
    return FieldElem(a.field_, std::move(coords));
  }

  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * invert(b); }

  FieldElem pow(unsigned long e) const {
    FieldElem result = field_.one();
    FieldElem base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// Least common multiple of the coordinate denominators.
  Integer denominator() const {
    Integer l = 1;
    for (const auto& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    return l;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << (c_[i] < 0 ? " - " : " + ");
      else if (c_[i] < 0) os << "-";
      Rational a = abs(c_[i]);
      if (i == 0) os << a;
      else {
        if (a != 1) os << a << "*";
        os << "x";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.to_string(); }

 private:
  void check_same(const FieldElem& o) const {
    if (!(field_ == o.field_)) fail(Errc::FieldMismatch, "operands live in different fields");
  }

  NumberField field_;
  std::vector<Rational> c_;
};

inline FieldElem NumberField::zero() const { return FieldElem(*this, {}); }
inline FieldElem NumberField::one() const { return FieldElem(*this, {Rational(1)}); }
inline FieldElem NumberField::gen() const {
  if (degree() == 1) return FieldElem(*this, {Rational(-minpoly()[0])});
  std::vector<Rational> c(static_cast<std::size_t>(degree()), Rational(0));
  c[1] = 1;
  return FieldElem(*this, std::move(c));
}
// Public entry points canonicalize, so callers may pass mpq values built from
// an unreduced numerator/denominator pair.
inline FieldElem NumberField::from_rational(const Rational& q) const {
  Rational c = q;
  c.canonicalize();
  return FieldElem(*this, {std::move(c)});
}
inline FieldElem NumberField::from_coords(std::vector<Rational> coords) const {
  if (coords.size() > static_cast<std::size_t>(degree()))
    fail(Errc::DimensionMismatch, "too many coordinates for field of degree " + std::to_string(degree()));
  for (auto& c : coords) c.canonicalize();
  return FieldElem(*this, std::move(coords));
}

/// Rational primes dividing some coordinate denominator. Empty iff a lies in Z[x]/(P).
inline std::vector<Integer> denominator_support(const FieldElem& a) {
  return prime_divisors(a.denominator());
}

}  // namespace sfn

#endif  // SFN_NUMFIELD_HPP
