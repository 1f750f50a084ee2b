#include "howe/birational.hpp"
#include "howe/enumerator.hpp"
#include "howe/howe_model.hpp"
#include "howe/singularities.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace howe;

namespace {

std::array<u64, 9> values(const SexticModel<Fp>& m) {
  std::array<u64, 9> out{};
  for (std::size_t k = 0; k < kNumCoefs; ++k) out[k] = m.c[k].value();
  return out;
}

std::array<u64, 5> raw(const Quintuple<Fp>& q) {
  return {q.a1.value(), q.a2.value(), q.a3.value(), q.b2.value(), q.b3.value()};
}

// Every ordered Howe quintuple over F_p.
std::vector<Quintuple<Fp>> all_quintuples(u64 p) {
  const PrimeField F(p);
  std::vector<Quintuple<Fp>> out;
  std::array<i64, 5> v{};
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == 5) {
      out.push_back(make_quintuple(F, v));
      return;
    }
    for (i64 x = 2; x < static_cast<i64>(p); ++x) {
      bool used = false;
      for (std::size_t j = 0; j < k; ++j) used |= v[j] == x;
      if (used) continue;
      v[k] = x;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST(BuildSextic, ExampleOneNormalized) {
  const PrimeField F(31);
  const auto m = normalize(build_sextic(make_quintuple(F, {3, 9, 27, 19, 26})));
  EXPECT_EQ(values(m), (std::array<u64, 9>{27, 11, 18, 25, 0, 4, 1, 8, 27}));
  EXPECT_EQ(to_string(m), "27 Y^6 + 11 Y^4 Z^2 + 18 Y^4 + 25 Y^2 Z^4 + 4 Y^2 + Z^6 + 8 Z^4 + 27 Z^2");
}

TEST(BuildSextic, RationalModelBoundaryCoefficients) {
  const Quintuple<Rational> q{Rational(7), Rational(2), Rational(3), Rational(4), Rational(6)};
  const auto m = build_sextic(q);
  // c60 = −Res(φ, Q₂) = −φ(4)φ(6) = −(4·3·(−3))(6·5·(−1)); c06 = φ(2)φ(3).
  EXPECT_EQ(m[Coef::c60], Rational(-(4 * 3 * -3) * (6 * 5 * -1)));
  EXPECT_EQ(m[Coef::c06], Rational((2 * 1 * -5) * (3 * 2 * -4)));
  const Rational r12((2 - 4) * (2 - 6) * (3 - 4) * (3 - 6));
  EXPECT_EQ(m[Coef::c20], -r12);
  EXPECT_EQ(m[Coef::c02], r12);
}

TEST(BuildSextic, MatchesInterpolationOracleExhaustivelyOverF7) {
  const auto qs = all_quintuples(7);
  EXPECT_EQ(qs.size(), 120u);
  for (const auto& q : qs) {
    const auto expected = oracle::interpolated_sextic(7, raw(q));
    ASSERT_TRUE(expected);
    EXPECT_EQ(values(build_sextic(q)), *expected);
  }
}

TEST(BuildSextic, MatchesInterpolationOracleF11AndF101) {
  {
    const auto q = make_quintuple(PrimeField(11), {2, 3, 4, 5, 6});
    EXPECT_EQ(values(build_sextic(q)), *oracle::interpolated_sextic(11, raw(q)));
  }
  const PrimeField F(101);
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    const auto q = random_howe_quintuple(F, rng);
    const auto expected = oracle::interpolated_sextic(101, raw(q));
    ASSERT_TRUE(expected);
    EXPECT_EQ(values(build_sextic(q)), *expected);
  }
}

TEST(BuildSextic, CoefficientInvariantsOnRandomQuintuples) {
  for (u64 p : {7ull, 31ull, 101ull}) {
    const PrimeField F(p);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 500; ++t) {
      const auto q = random_howe_quintuple(F, rng);
      const auto m = build_sextic(q);
      EXPECT_TRUE(boundary_coefficients_consistent(m.c, q));
      EXPECT_EQ(m[Coef::c20], -m[Coef::c02]);
      EXPECT_FALSE(m[Coef::c20].is_zero());
      const Fp d1 = m[Coef::c60] + m[Coef::c42] + m[Coef::c24] + m[Coef::c06];
      const Fp d2 = m[Coef::c40] + m[Coef::c22] + m[Coef::c04];
      EXPECT_FALSE(d1.is_zero() && d2.is_zero());
      const Fp e1 = m[Coef::c40] * m[Coef::c40] - F(4) * m[Coef::c60] * m[Coef::c20];
      const Fp e2 = m[Coef::c04] * m[Coef::c04] + F(4) * m[Coef::c20] * m[Coef::c06];
      EXPECT_FALSE(e1.is_zero() && e2.is_zero());
    }
  }
}

TEST(BuildSextic, Validation) {
  const PrimeField F(31);
  try {
    build_sextic(make_quintuple(F, {3, 3, 27, 19, 26}));
    FAIL();
  } catch (const NotHoweType& e) {
    EXPECT_STREQ(e.what(), "quintuple not of Howe type: α₁ = α₂");
  }
  EXPECT_THROW(build_sextic(make_quintuple(F, {3, 9, 32, 19, 26})), NotHoweType);  // 32 = 1
  EXPECT_THROW(build_sextic(make_quintuple(F, {3, 9, 31, 19, 26})), NotHoweType);  // 31 = 0
  const Quintuple<Rational> bad{Rational(2), Rational(3), Rational(4), Rational(5), Rational(0)};
  EXPECT_THROW(build_sextic(bad), NotHoweType);
}

TEST(Normalize, IdempotentAndScaleInvariant) {
  const PrimeField F(31);
  const auto m = build_sextic(make_quintuple(F, {3, 9, 27, 19, 26}));
  const auto n = normalize(m);
  EXPECT_EQ(n[Coef::c06], F(1));
  EXPECT_EQ(normalize(n), n);
  auto scaled = m;
  for (auto& x : scaled.c) x = x * F(5);
  EXPECT_EQ(normalize(scaled), n);
}

TEST(Lambda, Examples) {
  const PrimeField F(31);
  EXPECT_EQ(legendre_lambda(make_quintuple(F, {3, 9, 27, 19, 26})), F(8 * 17) / F(18 * 7));
  const Quintuple<Rational> q{Rational(7), Rational(2), Rational(3), Rational(4), Rational(6)};
  EXPECT_EQ(legendre_lambda(q), Rational(-2));
}

// Swapping the pairs leaves the cross-ratio unchanged; swapping α₃ and β₃
// inverts it.
TEST(Lambda, Symmetries) {
  for (u64 p : {11ull, 31ull, 101ull}) {
    const PrimeField F(p);
    std::mt19937_64 rng(p + 1);
    for (int t = 0; t < 300; ++t) {
      const auto q = random_howe_quintuple(F, rng);
      const Fp l = legendre_lambda(q);
      EXPECT_EQ(legendre_lambda(Quintuple<Fp>{q.a1, q.b2, q.b3, q.a2, q.a3}), l);
      EXPECT_EQ(legendre_lambda(Quintuple<Fp>{q.a1, q.a2, q.b3, q.b2, q.a3}), l.inverse());
      EXPECT_FALSE(l.is_zero());
      EXPECT_NE(l, F(1));
    }
  }
}

TEST(Genus, Examples) {
  EXPECT_EQ(to_string(generalized_howe_genus(2, 2, 4)), "genus 5, non-hyperelliptic, g3=1");
  EXPECT_EQ(to_string(generalized_howe_genus(1, 1, 0)), "genus 5, non-hyperelliptic, g3=3");
  EXPECT_EQ(to_string(generalized_howe_genus(2, 2, 5)), "genus 4, hyperelliptic, g3=0");
  EXPECT_THROW(generalized_howe_genus(0, 2, 1), std::invalid_argument);
  EXPECT_THROW(generalized_howe_genus(2, 2, 6), std::invalid_argument);
}

TEST(CountHoweTriples, FormulaAgainstEnumeration) {
  EXPECT_EQ(count_howe_triples(7), Integer(15));
  EXPECT_EQ(count_howe_triples(11), Integer(1890));
  for (u64 p : {7ull, 11ull, 13ull}) {
    std::set<HoweTriple> seen;
    for_each_canonical_triple(p, [&](const HoweTriple& t) { EXPECT_TRUE(seen.insert(t).second); });
    EXPECT_EQ(Integer(static_cast<i64>(seen.size())), count_howe_triples(p));
    // Canonicalization agrees with the visited keys.
    for (const auto& t : seen) EXPECT_EQ(canonical_triple(t.quintuple()), t);
  }
  EXPECT_EQ(count_howe_triples(13), Integer(6930));
}

TEST(Characteristic, SmallPrimesRejected) {
  EXPECT_THROW(build_sextic(make_quintuple(PrimeField(5), {2, 3, 4, 0, 1})), UnsupportedCharacteristic);
}
