#include "howe/identities.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <random>

using namespace howe;

TEST(Identities, CoreSuite) {
  const auto rep = run_suite(Suite::Core);
  EXPECT_TRUE(rep.ok()) << report_table(rep);
  for (const auto& r : rep.results) {
    EXPECT_EQ(r.status, IdentityStatus::VerifiedSymbolic) << r.id;
    EXPECT_GE(r.group, 1);
    EXPECT_LE(r.group, 8);
  }
  std::set<int> groups;
  for (const auto& r : rep.results) groups.insert(r.group);
  EXPECT_EQ(groups, (std::set<int>{1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(Identities, EtaAndFactorShapeSuite) {
  const auto rep = run_suite(Suite::Appendix);
  EXPECT_TRUE(rep.ok()) << report_table(rep);
  std::size_t eta = 0;
  for (const auto& r : rep.results) {
    EXPECT_EQ(r.status, IdentityStatus::VerifiedSymbolic) << r.id;
    eta += r.group == 9;
  }
  EXPECT_EQ(eta, 24u);
}

TEST(Identities, GroebnerSuite) {
  const auto rep = run_suite(Suite::Groebner);
  EXPECT_TRUE(rep.ok()) << report_table(rep);
  EXPECT_EQ(rep.results.size(), 3u);
}

TEST(Identities, RandomizedModeAgrees) {
  const auto rep = run_suite(Suite::All, VerifyMode::Randomized);
  for (const auto& r : rep.results) {
    if (r.id == "3.basis") continue;  // structural check, no evaluation form
    EXPECT_EQ(r.status, IdentityStatus::VerifiedRandomized) << r.id;
    ASSERT_TRUE(r.randomized);
    EXPECT_EQ(r.randomized->trials, kZippelTrials);
  }
}

TEST(Identities, WorkerCountDoesNotChangeTheReport) {
  const auto a = run_suite(Suite::All, VerifyMode::Symbolic, 1), b = run_suite(Suite::All, VerifyMode::Symbolic, 8);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    EXPECT_EQ(a.results[i].id, b.results[i].id);
    EXPECT_EQ(a.results[i].status, b.results[i].status);
  }
}

TEST(Identities, PerturbedP1FailsIdentityFive) {
  auto fx = default_fixtures();
  const auto& [m, c] = fx.p1.terms().front();
  fx.p1 = fx.p1 + Mpoly::term(Integer(1), m);
  const auto catalogue = identity_catalogue(fx);
  const auto rep = run_suite(catalogue, Suite::Core, VerifyMode::Both);
  bool saw = false;
  for (const auto& r : rep.results) {
    if (r.id != "5.y") continue;
    saw = true;
    EXPECT_EQ(r.status, IdentityStatus::Failed);
    EXPECT_FALSE(r.diff.empty());
  }
  EXPECT_TRUE(saw);
  EXPECT_FALSE(rep.ok());
}

// Silent edits to the transcriptions change these.
TEST(Fixtures, Checksums) {
  const std::map<std::string_view, u64> pinned = {
#include "fixture_checksums.inc"
  };
  ASSERT_EQ(fixture_texts().size(), pinned.size());
  for (const auto& f : fixture_texts()) {
    ASSERT_TRUE(pinned.count(f.name)) << f.name;
    EXPECT_EQ(fnv1a64(f.text), pinned.at(f.name)) << f.name;
  }
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
}

TEST(Fixtures, EtaOnePrimeIsP1) {
  const auto fx = default_fixtures();
  ASSERT_EQ(fx.eta.size(), 4u);
  for (const auto& e : fx.eta) EXPECT_EQ(e.eta1 - fx.p1, e.differences[0]) << e.name;
}

// The symbolic resultant, specialized at integer points, against the rational
// build_sextic.
TEST(SymbolicSextic, AgreesWithFieldLevelModels) {
  const auto& sym = symbolic_sextic();
  EXPECT_TRUE(sym.support_ok);
  std::mt19937_64 rng(200);
  int checked = 0;
  while (checked < 200) {
    std::array<i64, 5> v{};
    for (auto& x : v) x = static_cast<i64>(rng() % 61) - 30;
    const Quintuple<Rational> q{Rational(v[0]), Rational(v[1]), Rational(v[2]), Rational(v[3]), Rational(v[4])};
    SexticModel<Rational> m;
    try {
      m = build_sextic(q);
    } catch (const NotHoweType&) {
      continue;
    }
    const std::array<Integer, kNumVars> pt = {Integer(v[0]), Integer(v[1]), Integer(v[2]), Integer(v[3]),
                                              Integer(v[4]), Integer(0),    Integer(0)};
    for (std::size_t k = 0; k < kNumCoefs; ++k) EXPECT_EQ(Rational(sym.c[k].evaluate(pt)), m.c[k]);
    ++checked;
  }
}

TEST(Identities, SuiteParsing) {
  EXPECT_EQ(parse_suite("core"), Suite::Core);
  EXPECT_EQ(parse_suite("groebner"), Suite::Groebner);
  EXPECT_FALSE(parse_suite("everything"));
}
