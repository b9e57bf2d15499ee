#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sfn/catalog.hpp"
#include "sfn/sfunc.hpp"

using namespace sfn;

namespace {

const NumberField& cubic() {
  static const NumberField k = NumberField::make({-1, -2, 1, 1});
  return k;
}

// published multiplicities, rows d = 1..7, columns f = 2..5
const char* const kTable[7][4] = {
    {"-2", "3", "-4", "5"},          {"1", "3/2", "4", "5"},       {"-2/3", "3", "-8", "50/3"},
    {"1", "15/2", "28", "75"},       {"-2", "24", "-124", "425"},  {"13/3", "171/2", "624", "8240/3"},
    {"-10", "339", "-3452", "19605"}};

Rational q(const char* s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Usage;
}

}  // namespace

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<Integer>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (std::vector<Integer>{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<Integer>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<Integer>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<Integer>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(7).size(), 7u);
  EXPECT_EQ(error_of([] { cyclotomic_polynomial(0); }), Errc::BadConductor);
}

TEST(Abelian, Examples) {
  const Series five = abelian_generator({1, {{0, Rational(5)}}, 2}, 12);
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(five[k][0], frac(5, k * k));
  const Series z3 = abelian_generator({3, {{1, Rational(1)}}, 2}, 9);
  const auto& k3 = z3.field();
  EXPECT_EQ(z3[1], k3.gen());
  EXPECT_EQ(z3[3] * Rational(9), k3.one());
  EXPECT_EQ(z3[2] * Rational(4), k3.gen() * k3.gen());
  EXPECT_EQ(error_of([] { abelian_generator({3, {{3, Rational(1)}}, 2}, 4); }), Errc::BadConductor);
}

TEST(Abelian, DescentToCubic) {
  // x = zeta + zeta^-1 in Q(zeta_7), zeta^6 = -(1 + zeta + ... + zeta^5)
  Descent d{cubic(), {-1, 0, -1, -1, -1, -1}};
  const Series v = abelian_generator({7, {{1, Rational(1)}, {6, Rational(1)}}, 2}, 20, d);
  EXPECT_EQ(v.field(), cubic());
  EXPECT_EQ(v[1], cubic().gen());
  EXPECT_EQ(v[2] * Rational(4), cubic().from_coords({-2, 0, 1}));
  EXPECT_EQ(v[7] * Rational(49), cubic().from_rational(2));
  EXPECT_TRUE(check_sfunction(v, 2).pass);
  // the same series comes out of -log(1 - x z + z^2)
  EXPECT_EQ(v, from_log_poly(cubic(), {cubic().one(), -cubic().gen(), cubic().one()}, 2, 20));
  // zeta alone does not live in the cubic subfield
  EXPECT_EQ(error_of([&] { abelian_generator({7, {{1, Rational(1)}}, 2}, 4, d); }), Errc::DescentFailed);
  Descent wrong{cubic(), {0, 1}};
  EXPECT_EQ(error_of([&] { abelian_generator({7, {{1, Rational(1)}, {6, Rational(1)}}, 2}, 4, wrong); }),
            Errc::DescentFailed);
}

TEST(Abelian, PassesAtGoodPrimes) {
  const std::vector<CyclotomicSpec> specs{{5, {{1, Rational(1)}, {4, Rational(1)}}, 1},
                                          {3, {{1, Rational(1)}}, 2},
                                          {8, {{1, Rational(2)}, {3, Rational(-1)}, {5, Rational(1)}}, 3},
                                          {12, {{1, Rational(1)}, {7, Rational(3)}}, 2}};
  for (auto spec : specs)
    for (int s : {1, 2, 3}) {
      spec.s = s;
      EXPECT_TRUE(check_sfunction(abelian_generator(spec, 40), s).pass) << spec.conductor << " " << s;
    }
}

TEST(Abelian, FrobeniusPermutation) {
  // a_{pk} of c equals a_k of c permuted by i -> p i mod N
  const CyclotomicSpec spec{7, {{1, Rational(1)}, {2, Rational(-2)}, {5, Rational(3)}}, 2};
  const Series v = abelian_generator(spec, 36);
  for (int p : {2, 3, 11}) {
    CyclotomicSpec perm{7, {}, 2};
    for (const auto& [i, c] : spec.coeffs) perm.coeffs[(p * i) % 7] += c;
    const Series w = abelian_generator(perm, 36);
    for (int k = 1; p * k <= 36; ++k)
      EXPECT_EQ(v[p * k] * Rational(p * k * p * k), w[k] * Rational(k * k)) << p << " " << k;
  }
  // invariant under p = 13 = -1 mod 7
  const Series real = abelian_generator({7, {{1, Rational(1)}, {6, Rational(1)}}, 2}, 39);
  for (int k = 1; 13 * k <= 39; ++k) EXPECT_EQ(real[13 * k] * Rational(169 * k * k), real[k] * Rational(k * k));
}

TEST(FromLog, Examples) {
  const NumberField qq = NumberField::rationals();
  const Series li2 = from_log_poly(qq, {qq.one(), -qq.one()}, 2, 15);
  for (int k = 1; k <= 15; ++k) EXPECT_EQ(li2[k][0], Rational(1, k * k));
  const Series two = from_log_poly(qq, {qq.one(), qq.from_rational(-2)}, 2, 10);
  const auto r = check_sfunction(two, 2);
  ASSERT_FALSE(r.pass);
  const auto c = r.violations().front();
  EXPECT_EQ(c.index, Exponent{2});
  EXPECT_EQ(c.p, 2u);
  EXPECT_EQ(c.required, 2);
  EXPECT_EQ(c.valuation, 1);
  EXPECT_EQ(error_of([&] { from_log_poly(qq, {qq.from_rational(2)}, 2, 4); }), Errc::BadConstant);
}

TEST(PolylogTable, PublishedValues) {
  const auto t = polylog_frame_table({2, 3, 4, 5}, {1, 2, 3, 4, 5, 6, 7});
  ASSERT_EQ(t.entries.size(), 28u);
  for (int d = 1; d <= 7; ++d)
    for (int f = 2; f <= 5; ++f) EXPECT_EQ(t.at(d, f), q(kTable[d - 1][f - 2])) << d << "," << f;
}

TEST(PolylogTable, FrameZeroVanishes) {
  const auto t = polylog_frame_table({0}, {1, 2, 3, 4, 5});
  for (const auto& e : t.entries) {
    EXPECT_EQ(e.value, 0);
    EXPECT_FALSE(e.six_n_over_f_integral.has_value());
  }
}

TEST(PolylogTable, ClosedFormOfLogY) {
  // [z_f^k] log Y_f = (-1)^((f+1)k) binom(fk, k) / k
  for (long f = 1; f <= 5; ++f) {
    const Series l = log_series(framed_polylog_y(f, 12));
    for (int k = 1; k <= 12; ++k) {
      Rational expect(oracle::binomial(static_cast<unsigned long>(f * k), k), k);
      expect.canonicalize();
      if (((f + 1) * k) % 2 != 0) expect = -expect;
      EXPECT_EQ(l[k][0], expect) << f << "," << k;
    }
  }
}

TEST(PolylogTable, SixNOverFMeasured) {
  // observed pattern, reported rather than required: count any exceptions
  const auto t = polylog_frame_table({-3, -2, -1, 1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  int exceptions = 0;
  for (const auto& e : t.entries)
    if (e.six_n_over_f_integral && !*e.six_n_over_f_integral) {
      ++exceptions;
      std::cout << "  6N/f not integral at d=" << e.d << " f=" << e.f << ": N=" << e.value << "\n";
    }
  std::cout << "  6N/f integrality exceptions: " << exceptions << " of " << t.entries.size() << "\n";
  SUCCEED();
}

TEST(JK, Examples) {
  const auto r = jk_check(5, 5, 2);
  const auto& e12 = r.entries[1];  // k = 1, f = 2
  EXPECT_EQ(e12.k, 1);
  EXPECT_EQ(e12.f, 2);
  EXPECT_EQ(e12.valuation, Valuation(3));
  EXPECT_TRUE(e12.pass);
  EXPECT_EQ(oracle::binomial(10, 5) - oracle::binomial(2, 1), 250);
  const auto r7 = jk_check(7, 1, 1);
  EXPECT_TRUE(r7.entries[0].valuation.is_infinite());
  const auto& e52 = r.entries.back();  // k = 5, f = 2
  EXPECT_EQ(e52.alpha, 1);
  EXPECT_EQ(e52.required, 6);
  EXPECT_TRUE(e52.pass);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(error_of([] { jk_check(3, 2, 2); }), Errc::SmallPrime);
  EXPECT_EQ(error_of([] { jk_check(9, 2, 2); }), Errc::NotPrime);
}

TEST(JK, Exhaustive) {
  for (std::uint64_t p : {5, 7, 11, 13}) EXPECT_TRUE(jk_check(p, 3 * static_cast<long>(p), 5).pass) << p;
}
