#ifndef SFN_PADIC_HPP
#define SFN_PADIC_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfn/arith.hpp"
#include "sfn/error.hpp"
#include "sfn/numfield.hpp"

namespace sfn {

/// p-adic valuation that may be +infinity (for zero) or negative.
class Valuation {
 public:
  constexpr Valuation() = default;  // +infinity
  constexpr explicit Valuation(long v) : v_(v) {}
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return !v_.has_value(); }
  constexpr long value() const { return *v_; }

  /// Finite value, or `cap` when infinite.
  constexpr long capped(long cap) const { return v_ ? std::min(*v_, cap) : cap; }

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr bool operator>=(const Valuation& a, long e) { return !a.v_ || *a.v_ >= e; }
  friend constexpr bool operator<(const Valuation& a, long e) { return a.v_ && *a.v_ < e; }

  std::string to_string() const { return v_ ? std::to_string(*v_) : std::string("inf"); }

 private:
  std::optional<long> v_;
};

namespace detail {

struct RingData {
  NumberField field;
  std::uint64_t p = 0;
  int n = 0;
  Integer modulus;             // p^n
  std::vector<Integer> minpoly;  // reduced mod p^n, monic
};

}  // namespace detail

class ResidueElem;

/// (Z/p^n)[x]/(P mod p^n) for a prime p not dividing disc(P).
///
/// The ring is the unfactored product of O/P_i^n over the primes P_i above p.
class ResidueRing {
 public:
  ResidueRing() = default;

  static ResidueRing make(const NumberField& field, std::uint64_t p, int n) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) fail(Errc::BadPrecision, "precision exponent must be >= 1");
    if (!field.is_good_prime(p))
      fail(Errc::BadPrime, std::to_string(p) + " divides the discriminant " + field.discriminant().get_str());
    auto d = std::make_shared<detail::RingData>();
    d->field = field;
    d->p = p;
    d->n = n;
    d->modulus = ipow(p, static_cast<unsigned long>(n));
    for (const auto& c : field.minpoly()) d->minpoly.push_back(mod_floor(c, d->modulus));
    ResidueRing r;
    r.d_ = std::move(d);
    return r;
  }

  const NumberField& field() const noexcept { return d_->field; }
  std::uint64_t p() const noexcept { return d_->p; }
  int precision() const noexcept { return d_->n; }
  const Integer& modulus() const noexcept { return d_->modulus; }
  int degree() const noexcept { return d_->field.degree(); }

  bool operator==(const ResidueRing& o) const {
    return d_ == o.d_ || (d_->p == o.d_->p && d_->n == o.d_->n && d_->field == o.d_->field);
  }

  ResidueElem zero() const;
  ResidueElem one() const;
  ResidueElem gen() const;
  ResidueElem from_integer(const Integer& v) const;
  ResidueElem from_coords(std::vector<Integer> coords) const;

  const detail::RingData& data() const noexcept { return *d_; }

 private:
  friend class ResidueElem;
  std::shared_ptr<const detail::RingData> d_;
};

class ResidueElem {
 public:
  ResidueElem() = default;
  ResidueElem(ResidueRing ring, std::vector<Integer> coords) : ring_(std::move(ring)), c_(std::move(coords)) {
    c_.resize(static_cast<std::size_t>(ring_.degree()), Integer(0));
    for (auto& v : c_) v = mod_floor(v, ring_.modulus());
  }

  const ResidueRing& ring() const noexcept { return ring_; }
  const std::vector<Integer>& coords() const noexcept { return c_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const ResidueElem& a, const ResidueElem& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
  }

  friend ResidueElem operator+(const ResidueElem& a, const ResidueElem& b) {
    a.check_same(b);
    std::vector<Integer> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return ResidueElem(a.ring_, std::move(c));
  }
  friend ResidueElem operator-(const ResidueElem& a, const ResidueElem& b) {
    a.check_same(b);
    std::vector<Integer> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return ResidueElem(a.ring_, std::move(c));
  }
  friend ResidueElem operator*(const Integer& k, const ResidueElem& a) {
    std::vector<Integer> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.c_[i];
    return ResidueElem(a.ring_, std::move(c));
  }
  friend ResidueElem operator*(const ResidueElem& a, const ResidueElem& b) {
    a.check_same(b);
    const auto& rd = a.ring_.data();
    const int d = a.ring_.degree();
    std::vector<Integer> prod(static_cast<std::size_t>(2 * d - 1), Integer(0));
    for (int i = 0; i < d; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < d; ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    for (int i = 2 * d - 2; i >= d; --i) {
      Integer t = mod_floor(prod[i], rd.modulus);
      if (t == 0) continue;
      for (int j = 0; j < d; ++j) prod[i - d + j] -= t * rd.minpoly[j];
    }
    prod.resize(static_cast<std::size_t>(d));
    return ResidueElem(a.ring_, std::move(prod));
  }

  ResidueElem pow(Integer e) const {
    ResidueElem result = ring_.one(), base = *this;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// min over coordinates of v_p, capped at the ring precision (zero reports n).
  long valuation() const {
    long v = ring_.precision();
    for (const auto& c : c_)
      if (c != 0) v = std::min(v, ord(c, ring_.p()));
    return v;
  }

 private:
  void check_same(const ResidueElem& o) const {
    if (!(ring_ == o.ring_)) fail(Errc::RingMismatch, "operands live in different residue rings");
  }

  ResidueRing ring_;
  std::vector<Integer> c_;
};

inline ResidueElem ResidueRing::zero() const { return ResidueElem(*this, {}); }
inline ResidueElem ResidueRing::one() const { return ResidueElem(*this, {Integer(1)}); }
inline ResidueElem ResidueRing::gen() const {
  if (degree() == 1) return ResidueElem(*this, {Integer(-field().minpoly()[0])});
  std::vector<Integer> c(static_cast<std::size_t>(degree()), Integer(0));
  c[1] = 1;
  return ResidueElem(*this, std::move(c));
}
inline ResidueElem ResidueRing::from_integer(const Integer& v) const { return ResidueElem(*this, {v}); }
inline ResidueElem ResidueRing::from_coords(std::vector<Integer> coords) const {
  return ResidueElem(*this, std::move(coords));
}

/// Coordinate-wise reduction mod p^n; throws NotPIntegral if p divides a denominator.
inline ResidueElem reduce(const FieldElem& a, const ResidueRing& ring) {
  if (!(a.field() == ring.field())) fail(Errc::FieldMismatch, "element and ring over different fields");
  const Integer& m = ring.modulus();
  std::vector<Integer> c;
  c.reserve(a.coords().size());
  for (const auto& q : a.coords()) {
    if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(ring.p())))
      fail(Errc::NotPIntegral, "coordinate " + q.get_str() + " is not " + std::to_string(ring.p()) + "-integral");
    c.push_back(mod_floor(q.get_num() * inverse_mod(q.get_den(), m), m));
  }
  return ResidueElem(ring, std::move(c));
}

/// Inverse of a unit of the residue ring: Gaussian elimination over F_p on the
/// multiplication matrix, then Newton lifting u <- u(2 - a u).
inline std::optional<ResidueElem> inverse(const ResidueElem& a) {
  const ResidueRing& ring = a.ring();
  const int d = ring.degree();
  const Integer p(static_cast<unsigned long>(ring.p()));
  // column j of M is a * x^j
  std::vector<std::vector<Integer>> m(static_cast<std::size_t>(d), std::vector<Integer>(d + 1, 0));
  ResidueElem col = a;
  const ResidueElem x = ring.gen();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i][j] = mod_floor(col[i], p);
    if (j + 1 < d) col = col * x;
  }
  m[0][d] = 1;
  for (int k = 0; k < d; ++k) {
    int piv = k;
    while (piv < d && m[piv][k] == 0) ++piv;
    if (piv == d) return std::nullopt;
    std::swap(m[k], m[piv]);
    Integer inv = inverse_mod(m[k][k], p);
    for (int j = k; j <= d; ++j) m[k][j] = mod_floor(m[k][j] * inv, p);
    for (int i = 0; i < d; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Integer f = m[i][k];
      for (int j = k; j <= d; ++j) m[i][j] = mod_floor(m[i][j] - f * m[k][j], p);
    }
  }
  std::vector<Integer> u0(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) u0[i] = m[i][d];
  ResidueElem u(ring, std::move(u0));
  const ResidueElem two = ring.from_integer(2);
  for (int prec = 1; prec < ring.precision(); prec *= 2) u = u * (two - a * u);
  return u;
}

/// Evaluates an integer polynomial (low degree first) at a residue element.
inline ResidueElem evaluate(const std::vector<Integer>& poly, const ResidueElem& at) {
  const ResidueRing& ring = at.ring();
  ResidueElem acc = ring.zero();
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * at + ring.from_integer(*it);
  return acc;
}

/// Canonical lift of Frobenius: x maps to the root xi of P with xi = x^p mod p.
class FrobeniusMap {
 public:
  FrobeniusMap() = default;

  explicit FrobeniusMap(ResidueRing ring) : ring_(std::move(ring)) {
    const auto& P = ring_.field().minpoly();
    std::vector<Integer> dP;
    for (std::size_t i = 1; i < P.size(); ++i) dP.push_back(P[i] * static_cast<unsigned long>(i));
    xi_ = ring_.gen().pow(Integer(static_cast<unsigned long>(ring_.p())));
    // Newton: xi <- xi - P(xi)/P'(xi); each step doubles the p-adic precision.
    for (int prec = 1; prec < ring_.precision(); prec *= 2) {
      auto inv = inverse(evaluate(dP, xi_));
      if (!inv) fail(Errc::BadPrime, "P'(xi) is not a unit; p must be unramified");
      xi_ = xi_ - evaluate(P, xi_) * *inv;
    }
    powers_.push_back(ring_.one());
    for (int i = 1; i < ring_.degree(); ++i) powers_.push_back(powers_.back() * xi_);
  }

  const ResidueRing& ring() const noexcept { return ring_; }
  const ResidueElem& xi() const noexcept { return xi_; }

  /// Substitutes xi for x in the coordinate polynomial of a.
  ResidueElem apply(const ResidueElem& a) const {
    if (!(a.ring() == ring_)) fail(Errc::RingMismatch, "element is not in the Frobenius ring");
    ResidueElem acc = ring_.zero();
    for (int i = 0; i < ring_.degree(); ++i)
      if (a[i] != 0) acc = acc + a[i] * powers_[i];
    return acc;
  }

 private:
  ResidueRing ring_;
  ResidueElem xi_;
  std::vector<ResidueElem> powers_;
};

inline FrobeniusMap frobenius_lift(const ResidueRing& ring) { return FrobeniusMap(ring); }

inline ResidueElem frobenius_apply(const FrobeniusMap& frob, const ResidueElem& a) { return frob.apply(a); }

/// min over coordinates of v_p(num) - v_p(den); p must be good for the field.
inline Valuation valuation(const FieldElem& a, std::uint64_t p) {
  if (!a.field().is_good_prime(p)) fail(Errc::BadPrime, std::to_string(p) + " divides the discriminant");
  std::optional<long> v;
  for (const auto& q : a.coords()) {
    if (q == 0) continue;
    long e = ord(q, p);
    v = v ? std::min(*v, e) : e;
  }
  return v ? Valuation(*v) : Valuation::infinity();
}

inline Valuation valuation(const FieldElem& a, std::uint64_t p, const NumberField& field) {
  if (!(a.field() == field)) fail(Errc::FieldMismatch, "element not in the given field");
  return valuation(a, p);
}

/// Same as valuation() but without the good-prime requirement (reporting only).
inline Valuation coordinate_valuation(const FieldElem& a, std::uint64_t p) {
  std::optional<long> v;
  for (const auto& q : a.coords()) {
    if (q == 0) continue;
    long e = ord(q, p);
    v = v ? std::min(*v, e) : e;
  }
  return v ? Valuation(*v) : Valuation::infinity();
}

}  // namespace sfn

#endif  // SFN_PADIC_HPP
