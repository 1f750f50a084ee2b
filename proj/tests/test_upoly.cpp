#include "howe/birational.hpp"
#include "howe/howe_model.hpp"
#include "howe/upoly.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace howe;

namespace {

using ZP = UnivariatePolynomial<Integer>;
using FP = UnivariatePolynomial<Fp>;

ZP random_zpoly(std::mt19937_64& rng, int degree) {
  std::vector<Integer> c;
  for (int k = 0; k <= degree; ++k) c.emplace_back(static_cast<i64>(rng() % 19) - 9);
  if (c.back().is_zero()) c.back() = Integer(1);
  return ZP(c);
}

std::vector<std::vector<Integer>> sylvester_by_hand(const ZP& f, const ZP& g) {
  const std::size_t m = static_cast<std::size_t>(f.degree()), n = static_cast<std::size_t>(g.degree());
  std::vector<std::vector<Integer>> S(m + n, std::vector<Integer>(m + n, Integer(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) S[r][r + k] = f.coefficient(m - k, Integer(0));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) S[n + r][r + k] = g.coefficient(n - k, Integer(0));
  return S;
}

}  // namespace

TEST(Resultant, LinearExample) {
  EXPECT_EQ(resultant(ZP::from_descending({Integer(1), Integer(-2)}), ZP::from_descending({Integer(1), Integer(-5)})),
            Integer(-3));
}

TEST(Resultant, MatchesCofactorOracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const ZP f = random_zpoly(rng, 3), g = random_zpoly(rng, 3);
    EXPECT_EQ(resultant(f, g), oracle::cofactor_det(sylvester_by_hand(f, g), Integer(0), Integer(1)));
  }
}

TEST(Resultant, AntiSymmetry) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 4);
    const ZP f = random_zpoly(rng, m), g = random_zpoly(rng, n);
    const Integer sign((m * n) % 2 ? -1 : 1);
    EXPECT_EQ(resultant(f, g), sign * resultant(g, f));
  }
}

TEST(Resultant, VanishesIffCommonFactorOverF7) {
  const PrimeField F(7);
  std::vector<FP> monic;
  for (int a = 0; a < 7; ++a) monic.push_back(FP(std::vector<Fp>{F(a), F(1)}));
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) monic.push_back(FP(std::vector<Fp>{F(a), F(b), F(1)}));
  for (const auto& f : monic)
    for (const auto& g : monic) EXPECT_EQ(resultant(f, g).is_zero(), gcd_over_field(f, g).degree() >= 1);
}

TEST(Resultant, F31BoundaryCoefficient) {
  const PrimeField F(31);
  const auto q = make_quintuple(F, {3, 9, 27, 19, 26});
  const auto s = symmetric_functions(q);
  EXPECT_EQ(-resultant(phi_polynomial(s), q2_polynomial(s)), build_sextic(q)[Coef::c60]);
}

TEST(Bareiss, MatchesCofactorExpansion) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    Matrix<Integer> m(n, std::vector<Integer>(n));
    for (auto& row : m)
      for (auto& x : row) x = Integer(static_cast<i64>(rng() % 19) - 9);
    if (trial % 7 == 0) m[0] = m[n - 1];  // some singular ones
    EXPECT_EQ(determinant_bareiss(m, Integer(1)), oracle::cofactor_det(m, Integer(0), Integer(1)));
  }
}

TEST(Gcd, Examples) {
  const PrimeField F(7);
  const FP a(std::vector<Fp>{F(-1), F(0), F(1)}), b(std::vector<Fp>{F(-1), F(1)});
  EXPECT_EQ(gcd_over_field(a, b), b);
  const FP f(std::vector<Fp>{F(3), F(5), F(2)});
  EXPECT_EQ(gcd_over_field(f, f), monic(f));
}

TEST(Divmod, Reconstructs) {
  const PrimeField F(101);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    std::vector<Fp> a(1 + rng() % 8), b(1 + rng() % 5);
    for (auto& x : a) x = F(static_cast<i64>(rng() % 101));
    for (auto& x : b) x = F(static_cast<i64>(rng() % 101));
    b.back() = F(1 + static_cast<i64>(rng() % 100));
    const FP A(a), B(b);
    const auto [q, r] = divmod(A, B);
    EXPECT_EQ(q * B + r, A);
    EXPECT_LT(r.degree(), B.degree());
  }
}

TEST(Roots, MatchExhaustiveSearch) {
  std::mt19937_64 rng(13);
  for (u64 p : {7ull, 31ull, 101ull}) {
    const PrimeField F(p);
    for (int t = 0; t < 200; ++t) {
      std::vector<u64> c(2 + rng() % 6);
      for (auto& x : c) x = rng() % p;
      c.back() = 1 + rng() % (p - 1);
      std::vector<Fp> fc;
      for (u64 x : c) fc.push_back(F(static_cast<i64>(x)));
      std::vector<u64> got;
      for (const auto& r : roots_in_prime_field(FP(fc))) got.push_back(r.value());
      EXPECT_EQ(got, oracle::roots_by_search(c, p));
    }
  }
}

// At a curve point with h₁ ≠ 0, f₁ and f₂ share exactly one root in x, the
// recovered abscissa −h₂/h₁.
TEST(Gcd, LinearAtCurvePoints) {
  const PrimeField F(31);
  const QuadraticExtension E(F);
  const auto q = make_quintuple(F, {3, 9, 27, 19, 26});
  const auto m = build_sextic(q);
  std::mt19937_64 rng(31);
  int checked = 0;
  for (const auto& fp : sample_fiber_points(m, E, 200, rng)) {
    if (!fp.x.in_base_field() || !fp.y1.in_base_field() || !fp.y2.in_base_field()) continue;
    CurvePoint<Fp> C;
    try {
      const auto c2 = phi(lift(m, E), fp);
      if (!c2.Y.in_base_field() || !c2.Z.in_base_field()) continue;
      C = {c2.Y.re(), c2.Z.re()};
    } catch (const OutsideDomain&) {
      continue;
    }
    const auto [h1, h2] = h1_h2(q, C.Y, C.Z);
    if (h1.is_zero()) continue;
    const auto s = symmetric_functions(q);
    const FP phi_x = phi_polynomial(s);
    const FP f1 = (C.Y * C.Y) * phi_x - q1_polynomial(s), f2 = (C.Z * C.Z) * phi_x - q2_polynomial(s);
    const FP g = gcd_over_field(f1, f2);
    ASSERT_EQ(g.degree(), 1);
    EXPECT_EQ(-g[0], -h2 / h1);
    // Oracle: the common roots by exhaustive search.
    std::vector<u64> c1, c2;
    for (int k = 0; k <= 3; ++k) {
      c1.push_back(f1.coefficient(k, F(0)).value());
      c2.push_back(f2.coefficient(k, F(0)).value());
    }
    const auto r1 = oracle::roots_by_search(c1, 31), r2 = oracle::roots_by_search(c2, 31);
    std::vector<u64> common;
    for (u64 x : r1)
      if (std::find(r2.begin(), r2.end(), x) != r2.end()) common.push_back(x);
    ASSERT_EQ(common.size(), 1u);
    EXPECT_EQ(common[0], (-h2 / h1).value());
    ++checked;
  }
  EXPECT_GT(checked, 10);
}
