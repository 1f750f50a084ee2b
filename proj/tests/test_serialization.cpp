#include "howe/birational.hpp"
#include "howe/serialization.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace howe;

TEST(ModelJson, Shape) {
  const auto m = normalize(build_sextic(make_quintuple(PrimeField(31), {3, 9, 27, 19, 26})));
  const Json j = to_json(m);
  EXPECT_EQ(j["p"], 31);
  EXPECT_EQ(j["quintuple"], Json::array({3, 9, 27, 19, 26}));
  EXPECT_EQ(j["coefficients"]["c60"], 27);
  EXPECT_EQ(j["coefficients"]["c22"], 0);
  EXPECT_EQ(j["normalized"], true);
}

TEST(ModelJson, RoundTripsOverFp) {
  for (u64 p : {7ull, 31ull, 101ull}) {
    const PrimeField F(p);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 50; ++t) {
      auto m = build_sextic(random_howe_quintuple(F, rng));
      if (t % 2) m = normalize(m);
      EXPECT_EQ(model_from_json_fp(Json::parse(to_json(m).dump())), m);
    }
  }
}

TEST(ModelJson, RoundTripsOverQ) {
  const Quintuple<Rational> q{Rational(7), Rational(2), Rational(3), Rational(4), Rational(6)};
  for (bool norm : {false, true}) {
    auto m = build_sextic(q);
    if (norm) m = normalize(m);
    const Json j = to_json(m);
    EXPECT_EQ(j["p"], 0);
    EXPECT_EQ(model_from_json_rational(Json::parse(j.dump())), m);
  }
}

TEST(ModelJson, RejectsInconsistentDocuments) {
  const auto m = build_sextic(make_quintuple(PrimeField(31), {3, 9, 27, 19, 26}));
  Json j = to_json(m);
  j["coefficients"]["c42"] = (j["coefficients"]["c42"].get<int>() + 1) % 31;
  EXPECT_THROW(model_from_json_fp(j), std::invalid_argument);
  Json k = to_json(m);
  k["quintuple"][1] = 3;
  EXPECT_THROW(model_from_json_fp(k), NotHoweType);
  Json l = to_json(m);
  l.erase("normalized");
  EXPECT_THROW(model_from_json_fp(l), std::invalid_argument);
}

TEST(ReportJson, TypeTwoPoints) {
  const auto rep = singular_points(build_sextic(make_quintuple(PrimeField(31), {3, 25, 17, 21, 18})));
  const Json j = to_json(rep);
  EXPECT_EQ(j["kind"], "II");
  ASSERT_EQ(j["points"].size(), 3u);
  EXPECT_EQ(j["points"][0]["coords"], Json::array({0, 0, 1}));
  for (const auto& p : j["points"]) EXPECT_EQ(p["field"], "Fp");
  EXPECT_TRUE(j["witnesses"]["infinity_generic"].get<bool>() || j["witnesses"]["infinity_degenerate"].get<bool>());
  EXPECT_EQ(j["nonresidue"], 3);
}

TEST(ReportJson, ExtensionPointsCarryTwoComponents) {
  // Over F₁₁ some type-I models have their four affine points in F_{p²} only.
  const PrimeField F(11);
  std::mt19937_64 rng(4);
  bool seen = false;
  for (int t = 0; t < 200 && !seen; ++t) {
    const auto j = to_json(singular_points(build_sextic(random_howe_quintuple(F, rng))));
    for (const auto& p : j["points"])
      if (p["field"] == "Fp2") {
        seen = true;
        EXPECT_TRUE(p["coords"][0].is_array() && p["coords"][0].size() == 2);
      }
  }
  EXPECT_TRUE(seen);
}
