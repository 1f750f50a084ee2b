#include "howe/exact_arith.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace howe;

namespace {

std::set<u64> squares_mod(u64 p) {
  std::set<u64> s;
  for (u64 x = 1; x < p; ++x) s.insert(x * x % p);
  return s;
}

bool trial_division_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(Integer, ArithmeticAndModulus) {
  const Integer a(Integer::pow(Integer(10), 30));
  EXPECT_EQ((a * a).to_string(), "1" + std::string(60, '0'));
  EXPECT_EQ(Integer(-7).mod(5), 3u);
  EXPECT_EQ(exact_div(Integer(-1080), Integer(12)), Integer(-90));
  EXPECT_THROW(exact_div(Integer(7), Integer(2)), std::domain_error);
  EXPECT_EQ(Integer(std::string_view("-123456789012345678901234567890")).to_string(),
            "-123456789012345678901234567890");
}

TEST(Rational, ParsesAndReduces) {
  const Rational r(std::string_view("6/-4"));
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ((r * Rational(2)).to_string(), "-3");
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(PrimeField, PrimalityAgreesWithTrialDivision) {
  for (u64 n = 0; n < 5000; ++n) EXPECT_EQ(is_prime_u64(n), trial_division_prime(n)) << n;
  EXPECT_TRUE(is_prime_u64(2147483647));
  EXPECT_TRUE(is_prime_u64(9223372036854775783ull));
  EXPECT_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(PrimeField, RejectsBadModuli) {
  EXPECT_THROW(PrimeField(2), std::invalid_argument);
  EXPECT_THROW(PrimeField(15), std::invalid_argument);
  EXPECT_THROW(PrimeField(1ull << 63), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(9223372036854775783ull));
}

TEST(Fp, SqrtExamples) {
  const PrimeField F7(7), F31(31);
  const auto r = sqrt_in_field(F7(2));
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->value() == 3 || r->value() == 4);
  EXPECT_EQ(sqrt_in_field(F7(0))->value(), 0u);
  EXPECT_FALSE(sqrt_in_field(F7(3)));
  const auto s = sqrt_in_field(F31(18));
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->value() == 7 || s->value() == 24);
}

TEST(Fp, LegendreMatchesSquareSets) {
  for (u64 p : {7ull, 11ull, 13ull, 31ull, 101ull}) {
    const PrimeField F(p);
    const auto sq = squares_mod(p);
    EXPECT_EQ(legendre_symbol(F(0)), 0);
    for (u64 a = 1; a < p; ++a) EXPECT_EQ(legendre_symbol(F(a)), sq.count(a) ? 1 : -1) << p << " " << a;
  }
  EXPECT_EQ(legendre_symbol(PrimeField(7)(2)), 1);
  EXPECT_EQ(legendre_symbol(PrimeField(7)(3)), -1);
}

TEST(Fp, LegendreIsMultiplicative) {
  std::mt19937_64 rng(7);
  for (u64 p : {7ull, 31ull, 101ull, 1000003ull}) {
    const PrimeField F(p);
    for (int i = 0; i < 300; ++i) {
      const Fp a = F(1 + rng() % (p - 1)), b = F(1 + rng() % (p - 1));
      EXPECT_EQ(legendre_symbol(a) * legendre_symbol(b), legendre_symbol(a * b));
    }
  }
}

TEST(Fp, SqrtOfSquares) {
  std::mt19937_64 rng(11);
  for (u64 p : {7ull, 31ull, 101ull, 998244353ull, 9223372036854775783ull}) {
    const PrimeField F(p);
    for (int i = 0; i < 1000; ++i) {
      const Fp a = F.element(Integer(static_cast<i64>(rng() >> 2)));
      const auto r = sqrt_in_field(a * a);
      ASSERT_TRUE(r);
      EXPECT_EQ(*r * *r, a * a);
    }
  }
}

TEST(Fp, FieldAxioms) {
  std::mt19937_64 rng(3);
  for (u64 p : {7ull, 101ull, 4294967311ull, 9223372036854775783ull}) {
    const PrimeField F(p);
    for (int i = 0; i < 500; ++i) {
      const Fp a = F.element(Integer(static_cast<i64>(rng() >> 1))), b = F.element(Integer(static_cast<i64>(rng() >> 1))),
               c = F.element(Integer(static_cast<i64>(rng() >> 1)));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_EQ(a - a, F.zero());
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), F.one());
    }
  }
  EXPECT_THROW(PrimeField(7).zero().inverse(), std::domain_error);
}

TEST(Fp2, FieldAxiomsAndSqrt) {
  for (u64 p : {7ull, 11ull, 31ull}) {
    const PrimeField F(p);
    const QuadraticExtension E(F);
    EXPECT_EQ(legendre_symbol(E.nonresidue()), -1);
    std::vector<Fp2> all;
    for (u64 a = 0; a < p; ++a)
      for (u64 b = 0; b < p; ++b) all.push_back(E(static_cast<i64>(a), static_cast<i64>(b)));
    std::mt19937_64 rng(p);
    for (int i = 0; i < 400; ++i) {
      const Fp2 &x = all[rng() % all.size()], &y = all[rng() % all.size()], &z = all[rng() % all.size()];
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ((x + y) * z, x * z + y * z);
      if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), E(1));
    }
    // Square roots exist exactly for the elements of the exhaustive square set.
    std::set<std::pair<u64, u64>> squares;
    for (const auto& x : all) squares.insert({(x * x).re().value(), (x * x).im().value()});
    EXPECT_EQ(squares.size(), (p * p + 1) / 2);
    for (const auto& x : all) {
      const auto r = sqrt_in_field(x);
      EXPECT_EQ(r.has_value(), squares.count({x.re().value(), x.im().value()}) == 1) << to_string(x);
      if (r) EXPECT_EQ(*r * *r, x);
    }
  }
}
