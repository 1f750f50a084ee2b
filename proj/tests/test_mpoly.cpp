#include "howe/identities.hpp"
#include "howe/mpoly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace howe;

namespace {

Mpoly random_mpoly(std::mt19937_64& rng, std::size_t terms) {
  std::vector<Mpoly::Term> t;
  for (std::size_t i = 0; i < terms; ++i) {
    Monomial m;
    for (auto& e : m.e) e = static_cast<std::uint16_t>(rng() % 3);
    t.emplace_back(m, Integer(static_cast<i64>(rng() % 41) - 20));
  }
  return Mpoly::from_terms(std::move(t));
}

std::array<Integer, kNumVars> random_point(std::mt19937_64& rng) {
  std::array<Integer, kNumVars> p;
  for (auto& x : p) x = Integer(static_cast<i64>(rng() % 21) - 10);
  return p;
}

Mpoly v(Var x) { return Mpoly::variable(x); }

}  // namespace

TEST(Mpoly, DifferenceOfSquares) {
  EXPECT_EQ((v(Var::a2) - v(Var::b2)) * (v(Var::a2) + v(Var::b2)),
            Mpoly::variable(Var::a2, 2) - Mpoly::variable(Var::b2, 2));
}

TEST(Mpoly, F4FromTheSymmetricDictionary) {
  const auto s = symmetric_functions(v(Var::a1), v(Var::a2), v(Var::a3), v(Var::b2), v(Var::b3));
  const Mpoly F1 = -s.sigma1 * s.rho1 + s.sigma2 + s.rho1 * s.rho1 - s.rho2;
  const Mpoly F2 = s.sigma1 * s.tau1 + s.sigma1 * s.rho1 - 2 * s.sigma2 - 2 * s.tau1 * s.rho1 + s.tau2 + s.rho2;
  const Mpoly F3 = s.tau1 - s.rho1;
  const Mpoly F4 = -s.sigma1 * s.tau1 + s.sigma2 + s.tau1 * s.tau1 - s.tau2;
  EXPECT_EQ(F3, parse_polynomial("a2 + a3 - b2 - b3"));
  EXPECT_EQ(F3 * F3 - F1 - F2, F4);
}

TEST(Mpoly, P2MinusP1AtTheF31Quintuple) {
  const auto fx = default_fixtures();
  const std::array<Integer, kNumVars> pt = {Integer(3), Integer(9), Integer(27), Integer(19), Integer(26), Integer(0),
                                            Integer(0)};
  EXPECT_EQ((fx.p2 - fx.p1).evaluate(pt), Integer((9 - 19) * (9 - 26) * (27 - 19) * (27 - 26)));
}

TEST(Mpoly, RingAxioms) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 60; ++t) {
    const Mpoly a = random_mpoly(rng, 1 + rng() % 50), b = random_mpoly(rng, 1 + rng() % 50),
                c = random_mpoly(rng, 1 + rng() % 50);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Mpoly, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const Mpoly a = random_mpoly(rng, 20), b = random_mpoly(rng, 20);
    const auto pt = random_point(rng);
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ((a - b).evaluate(pt), a.evaluate(pt) - b.evaluate(pt));
  }
}

TEST(Mpoly, SubstituteThenEvaluate) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Mpoly a = random_mpoly(rng, 15), by = random_mpoly(rng, 6);
    const Var x = static_cast<Var>(rng() % kNumVars);
    auto pt = random_point(rng);
    const Integer sub = by.evaluate(pt);
    const Integer lhs = a.substitute(x, by).evaluate(pt);
    pt[static_cast<std::size_t>(x)] = sub;
    EXPECT_EQ(lhs, a.evaluate(pt));
  }
}

TEST(Mpoly, ExactDivision) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    const Mpoly a = random_mpoly(rng, 12), b = random_mpoly(rng, 6);
    if (b.is_zero()) continue;
    EXPECT_EQ(exact_div(a * b, b), a);
  }
  EXPECT_THROW(exact_div(v(Var::a1) + 1, v(Var::a2)), std::domain_error);
}

TEST(Mpoly, DivisionCertificate) {
  std::mt19937_64 rng(5);
  const std::vector<Mpoly> basis = {v(Var::a1) * v(Var::b2) - 3, Mpoly::variable(Var::a3, 2) + v(Var::b3)};
  for (int t = 0; t < 40; ++t) {
    const Mpoly f = random_mpoly(rng, 20);
    const auto d = divide(f, basis, MonomialOrder::Lex);
    EXPECT_EQ(d.quotients[0] * basis[0] + d.quotients[1] * basis[1] + d.remainder, f);
    for (const auto& [m, c] : d.remainder.terms())
      for (const auto& g : basis) EXPECT_FALSE(g.leading_term(MonomialOrder::Lex).first.divides(m));
  }
}

TEST(Mpoly, LexAndGrlexLeadingTerms) {
  const Mpoly f = parse_polynomial("a2 + b3^5 + a1*b2");
  EXPECT_EQ(f.leading_term(MonomialOrder::Lex).first, Monomial::of(Var::a1) * Monomial::of(Var::b2));
  EXPECT_EQ(f.leading_term(MonomialOrder::GradedLex).first, Monomial::of(Var::b3, 5));
}

TEST(Mpoly, ParseAndPrint) {
  const Mpoly f = parse_polynomial("-(a2 - b3)(a3 - b2)^2 + 3*Y^2*Z - 7");
  EXPECT_EQ(parse_polynomial(f.to_string(VariableNames::ascii())), f);
  EXPECT_EQ(parse_polynomial(f.to_string(VariableNames::greek())), f);
  EXPECT_EQ(parse_polynomial("α₂ − β₂"), v(Var::a2) - v(Var::b2));
  EXPECT_THROW(parse_polynomial("a2 +"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("q7"), std::invalid_argument);
}

TEST(Zippel, EqualAndUnequal) {
  const auto fx = default_fixtures();
  const Mpoly d1 = symbolic_sextic().c[0] + symbolic_sextic().c[1] + symbolic_sextic().c[3] + symbolic_sextic().c[6];
  const auto same = schwartz_zippel_equal(d1, d1);
  EXPECT_TRUE(same.equal);
  EXPECT_EQ(same.trials, kZippelTrials);
  const auto off = schwartz_zippel_equal(d1, d1 + 1);
  EXPECT_FALSE(off.equal);
  EXPECT_TRUE(off.witness.has_value());
  const auto& c = symbolic_sextic().c;
  const Mpoly disc = c[2] * c[2] - 4 * c[0] * c[5];
  const Mpoly d = v(Var::b2) - v(Var::b3);
  EXPECT_TRUE(schwartz_zippel_equal(disc, d * d * fx.p1 * fx.p1).equal);
}

// Cross-oracle: every record of the catalogue agrees between exact symbolic
// comparison and randomized evaluation, and a perturbed right side is caught
// by both.
TEST(Zippel, AgreesWithSymbolicOnTheCatalogue) {
  for (const auto& r : identity_catalogue(default_fixtures())) {
    if (r.custom) continue;
    const bool symbolic = r.lhs() == r.rhs();
    const bool randomized = schwartz_zippel_equal(r.lhs_numeric, r.rhs_numeric, r.degree_bound).equal;
    EXPECT_EQ(symbolic, randomized) << r.id;
    const NumericExpr shifted = [&](const Point& p) { return r.rhs_numeric(p) + p[1] * p[1] + p[0]; };
    EXPECT_FALSE(schwartz_zippel_equal(r.lhs_numeric, shifted, r.degree_bound).equal) << r.id;
  }
}
