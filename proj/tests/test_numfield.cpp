#include <gtest/gtest.h>

#include <random>

#include "sfn/numfield.hpp"
#include "sfn/padic.hpp"

using namespace sfn;

namespace {

const NumberField& cubic() {
  static const NumberField k = NumberField::make({-1, -2, 1, 1});
  return k;
}
const NumberField& eis() {
  static const NumberField k = NumberField::make({3, 0, 1});
  return k;
}
const NumberField& qq() {
  static const NumberField k = NumberField::rationals();
  return k;
}

FieldElem elem(const NumberField& k, std::vector<Rational> c) { return k.from_coords(std::move(c)); }

FieldElem random_elem(const NumberField& k, std::mt19937& rng, int range = 9, int maxden = 4) {
  std::uniform_int_distribution<int> num(-range, range), den(1, maxden);
  std::vector<Rational> c;
  for (int i = 0; i < k.degree(); ++i) c.push_back(frac(num(rng), den(rng)));
  return k.from_coords(std::move(c));
}

}  // namespace

TEST(NumberField, Discriminants) {
  EXPECT_EQ(cubic().degree(), 3);
  EXPECT_EQ(cubic().discriminant(), 49);
  EXPECT_EQ(eis().degree(), 2);
  EXPECT_EQ(eis().discriminant(), -12);
  // b^2 - 4ac for a few more quadratics
  for (long b = -4; b <= 4; ++b)
    for (long c = -5; c <= 5; ++c) {
      if (b * b - 4 * c == 0) continue;
      EXPECT_EQ(NumberField::make({c, b, 1}).discriminant(), b * b - 4 * c);
    }
  // x^3 + a x + b: -4a^3 - 27b^2
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      long d = -4 * a * a * a - 27 * b * b;
      if (d == 0) continue;
      EXPECT_EQ(NumberField::make({b, a, 0, 1}).discriminant(), d);
    }
}

TEST(NumberField, BadPrimes) {
  EXPECT_EQ(cubic().bad_primes(), std::vector<Integer>{7});
  EXPECT_EQ(eis().bad_primes(), (std::vector<Integer>{2, 3}));
  EXPECT_TRUE(NumberField::rationals().bad_primes().empty());
  EXPECT_TRUE(eis().is_good_prime(5));
  EXPECT_FALSE(eis().is_good_prime(3));
}

TEST(NumberField, Rejections) {
  try {
    NumberField::make({5, 0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotMonic);
  }
  try {
    NumberField::make({1, 2, 1});  // (x+1)^2
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSquarefree);
  }
  try {
    NumberField::make({1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeZero);
  }
}

TEST(NumberField, Multiply) {
  const auto x = cubic().gen();
  EXPECT_EQ(x * (x * x), elem(cubic(), {1, 2, -1}));
  const auto a = elem(cubic(), {frac(1, 2), 3, -7});
  EXPECT_EQ(cubic().one() * a, a);
  EXPECT_EQ(eis().gen() * eis().gen(), eis().from_rational(-3));
}

TEST(NumberField, Invert) {
  EXPECT_EQ(invert(cubic().gen()), elem(cubic(), {-2, 1, 1}));
  EXPECT_EQ(invert(cubic().one()), cubic().one());
  EXPECT_EQ(invert(eis().gen()), elem(eis(), {0, frac(-1, 3)}));
  try {
    invert(cubic().zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Zero);
  }
}

TEST(NumberField, ZeroDivisorInProductRing) {
  // x^2 - 1 is squarefree but reducible: x - 1 has no inverse
  const auto k = NumberField::make({-1, 0, 1});
  try {
    invert(k.gen() - k.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroDivisor);
  }
}

TEST(NumberField, DenominatorSupport) {
  EXPECT_EQ(denominator_support(elem(cubic(), {frac(1, 2), frac(1, 6)})), (std::vector<Integer>{2, 3}));
  EXPECT_TRUE(denominator_support(elem(cubic(), {-2, 0, 1})).empty());
  EXPECT_EQ(denominator_support(elem(cubic(), {0, frac(7, 5)})), std::vector<Integer>{5});
}

TEST(NumberField, FieldMismatch) {
  try {
    auto r = cubic().gen() + eis().gen();
    (void)r;
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
}

TEST(NumberFieldProperty, RingAxioms) {
  std::mt19937 rng(11);
  for (const auto* k : {&cubic(), &eis(), &qq()}) {
    for (int t = 0; t < 60; ++t) {
      auto a = random_elem(*k, rng), b = random_elem(*k, rng), c = random_elem(*k, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + (b - a), b);
      if (!a.is_zero()) {
        EXPECT_TRUE((a * invert(a)).is_one());
      }
      EXPECT_EQ(a.pow(3), a * a * a);
    }
  }
}

TEST(NumberFieldProperty, CanonicalCoordinates) {
  const auto a = elem(eis(), {frac(2, 4), frac(-6, 3)});
  EXPECT_EQ(a[0].get_den(), 2);
  EXPECT_EQ(a[1], -2);
}

TEST(NumberFieldProperty, DenominatorsMatchReduction) {
  // at a good prime p: p is absent from the denominators iff reduce succeeds
  std::mt19937 rng(5);
  for (int t = 0; t < 80; ++t) {
    auto a = random_elem(cubic(), rng, 20, 12);
    for (std::uint64_t p : {2, 3, 5, 11}) {
      const auto ring = ResidueRing::make(cubic(), p, 2);
      const auto sup = denominator_support(a);
      const bool p_free = std::find(sup.begin(), sup.end(), Integer(static_cast<unsigned long>(p))) == sup.end();
      bool reduced = true;
      try {
        reduce(a, ring);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotPIntegral);
        reduced = false;
      }
      EXPECT_EQ(p_free, reduced);
    }
  }
}
