#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sfn/mseries.hpp"

using namespace sfn;

namespace {

const NumberField& qq() {
  static const NumberField k = NumberField::rationals();
  return k;
}

MSeries var(int n, int order, int i) { return MSeries::variable(qq(), n, order, i); }

oracle::Bi to_bi(const MSeries& w) {
  oracle::Bi b{w.order(), {}};
  for (const auto& [e, c] : w.terms()) b.c[{e[0], e[1]}] = c[0];
  return b;
}

void expect_same(const MSeries& w, const oracle::Bi& b) {
  for (int i = 0; i <= w.order(); ++i)
    for (int j = 0; i + j <= w.order(); ++j) EXPECT_EQ(w.coeff({i, j})[0], b.at(i, j)) << i << "," << j;
}

MSeries random_unit_map(int n, int order, int i, std::mt19937& rng) {
  // z^i * (1 + random terms)
  std::uniform_int_distribution<int> num(-3, 3);
  MSeries u = MSeries::constant(qq().one(), n, order);
  for (int a = 0; a <= order; ++a)
    for (int b = 0; a + b <= order - 1; ++b)
      if (a + b > 0 && num(rng) != 0) u.add_term({a, b}, qq().from_rational(frac(num(rng), 2)));
  return var(n, order, i) * u;
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

TEST(MSeries, TruncationAndKeys) {
  MSeries w(qq(), 2, 4);
  w.add_term({3, 2}, qq().one());  // beyond total degree 4
  EXPECT_TRUE(w.terms().empty());
  w.add_term({1, 1}, qq().one());
  w.add_term({1, 1}, -qq().one());
  EXPECT_TRUE(w.terms().empty());
  const MSeries p = (var(2, 4, 0) + var(2, 4, 1)) * (var(2, 4, 0) + var(2, 4, 1));
  EXPECT_EQ(p.coeff({1, 1})[0], 2);
  EXPECT_EQ(p.min_degree(), 2);
}

TEST(MSeries, Delta) {
  MSeries w(qq(), 2, 6);
  w.add_term({2, 3}, qq().one());
  EXPECT_EQ(delta(w, 0).coeff({2, 3})[0], 2);
  EXPECT_EQ(delta(w, 1).coeff({2, 3})[0], 3);
}

TEST(MSeries, ExpMatchesOracle) {
  MSeries v = var(2, 6, 0) + frac(1, 3) * (var(2, 6, 0) * var(2, 6, 1)) - var(2, 6, 1);
  expect_same(exp_series(v), oracle::bi_exp(to_bi(v)));
}

TEST(InvertMap, Identity) {
  std::vector<MSeries> id{var(2, 6, 0), var(2, 6, 1)};
  EXPECT_EQ(invert_map(id, {1, 1}), id);
  std::vector<MSeries> signed_{-var(2, 6, 0), var(2, 6, 1)};
  EXPECT_EQ(invert_map(signed_, {-1, 1}), signed_);
}

TEST(InvertMap, SubstitutionOracle) {
  // zeta^1 = -z^1 exp(-z^2), zeta^2 = z^2, inverted: z^1 = -zeta^1 exp(zeta^2)
  const int T = 4;
  const MSeries z1 = var(2, T, 0), z2 = var(2, T, 1);
  const std::vector<MSeries> map{-(z1 * exp_series(-z2)), z2};
  const auto inv = invert_map(map, {-1, 1});
  oracle::Bi zeta2{T, {{{0, 1}, oracle::Q(1)}}};
  oracle::Bi g1 = oracle::bi_mul(oracle::Bi{T, {{{1, 0}, oracle::Q(-1)}}}, oracle::bi_exp(zeta2));
  expect_same(inv[0], g1);
  expect_same(inv[1], zeta2);
  // substituting back with the oracle's own composition recovers the variables
  expect_same(compose(map[0], inv), oracle::Bi{T, {{{1, 0}, oracle::Q(1)}}});
}

TEST(InvertMap, Rejections) {
  const MSeries z1 = var(2, 4, 0), z2 = var(2, 4, 1);
  EXPECT_EQ(error_of([&] { invert_map({z2, z1}, {1, 1}); }), Errc::BadLinearPart);
  EXPECT_EQ(error_of([&] { invert_map({Rational(2) * z1, z2}, {1, 1}); }), Errc::BadLinearPart);
  EXPECT_EQ(error_of([&] { invert_map({z1}, {1, 1}); }), Errc::DimensionMismatch);
}

TEST(InvertMapProperty, ForwardAfterInverseIsIdentity) {
  std::mt19937 rng(21);
  const int T = 7;
  for (int t = 0; t < 8; ++t) {
    std::vector<int> signs{(t & 1) ? -1 : 1, (t & 2) ? -1 : 1};
    std::vector<MSeries> map;
    for (int i = 0; i < 2; ++i) map.push_back(Rational(signs[i]) * random_unit_map(2, T, i, rng));
    const auto inv = invert_map(map, signs);
    EXPECT_EQ(compose(map[0], inv), var(2, T, 0));
    EXPECT_EQ(compose(map[1], inv), var(2, T, 1));
    // and against a plain fixed-point substitution in the oracle
    oracle::Bi m0 = to_bi(map[0]), m1 = to_bi(map[1]);
    oracle::Bi g0 = to_bi(inv[0]), g1 = to_bi(inv[1]);
    expect_same(var(2, T, 0), oracle::bi_substitute(m0, g0, g1));
    expect_same(var(2, T, 1), oracle::bi_substitute(m1, g0, g1));
  }
}
