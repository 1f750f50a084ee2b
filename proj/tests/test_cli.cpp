#include "howe/cli.hpp"
#include "howe/serialization.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace howe;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "howe");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ModelNormalizedExample) {
  const auto r = run({"model", "--p", "31", "--quintuple", "3,9,27,19,26", "--normalize"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "27 Y^6 + 11 Y^4 Z^2 + 18 Y^4 + 25 Y^2 Z^4 + 4 Y^2 + Z^6 + 8 Z^4 + 27 Z^2\n");
}

TEST(Cli, ModelOverQ) {
  const auto r = run({"model", "--quintuple", "7,2,3,4,6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("-1080 Y^6", 0), 0u) << r.out;
}

TEST(Cli, ModelJsonRoundTrips) {
  const auto r = run({"--format", "json", "model", "--p", "101", "--quintuple", "2,3,4,5,6"});
  ASSERT_EQ(r.code, 0);
  const auto m = model_from_json_fp(Json::parse(r.out));
  EXPECT_EQ(to_json(m).dump() + "\n", r.out);
}

TEST(Cli, ValidationErrors) {
  const auto r = run({"model", "--p", "31", "--quintuple", "3,3,27,19,26"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("quintuple not of Howe type: α₁ = α₂"), std::string::npos);
  EXPECT_EQ(run({"model", "--p", "31", "--quintuple", "3,9,27"}).code, 1);
  EXPECT_EQ(run({"model", "--p", "31", "--quintuple", "3,9,x,19,26"}).code, 1);
  EXPECT_EQ(run({"model", "--p", "33", "--quintuple", "3,9,27,19,26"}).code, 1);
  EXPECT_EQ(run({"model", "--p", "5", "--quintuple", "2,3,4,6,7"}).code, 1);
  EXPECT_EQ(run({"model", "--p", "31", "--quintuple", "3,9,40,19,26"}).code, 1);  // 40 = 9 mod 31
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"classify", "--quintuple", "3,9,27,19,26"}).code, 1);  // --p required
}

TEST(Cli, Genus) {
  const auto r = run({"genus", "--g1", "2", "--g2", "2", "--r", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "genus 5, non-hyperelliptic, g3=1\n");
  EXPECT_EQ(run({"genus", "--g1", "3", "--g2", "2", "--r", "4"}).code, 1);
}

TEST(Cli, Classify) {
  const auto r = run({"classify", "--p", "31", "--quintuple", "3,2,16,28,9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("type III\n", 0), 0u);
  EXPECT_NE(r.out.find("(0:8:1)"), std::string::npos);
  EXPECT_NE(r.out.find("(0:23:1)"), std::string::npos);
  const auto j = run({"--format", "json", "classify", "--p", "31", "--quintuple", "3,9,27,19,26"});
  EXPECT_EQ(Json::parse(j.out)["kind"], "I");
}

TEST(Cli, Lambda) {
  EXPECT_EQ(run({"lambda", "--quintuple", "7,2,3,4,6"}).out, "-2\n");
  const auto r = run({"lambda", "--p", "31", "--quintuple", "3,9,27,19,26"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6\n");
}

TEST(Cli, EnumerateWritesCsv) {
  const std::string path = ::testing::TempDir() + "howe_enum.csv";
  const auto r = run({"enumerate", "--p", "11", "--workers", "2", "--csv", path});
  EXPECT_EQ(r.code, 0);
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  EXPECT_EQ(s.str(), "p,nI,nII,nIII,total,pctI,pctII,pctIII\n11,846,720,324,1890,45,38,17\n");
  std::remove(path.c_str());
}

TEST(Cli, VerifyIdentities) {
  const auto r = run({"verify-identities", "--suite", "groebner"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("3/3 verified"), std::string::npos);
  const auto j = run({"--format", "json", "verify-identities", "--suite", "core", "--mode", "symbolic"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(Json::parse(j.out)["failures"], 0);
  EXPECT_EQ(run({"verify-identities", "--suite", "nope"}).code, 1);
}

TEST(Cli, RoundtripAndSpotCheckAreDeterministic) {
  const auto a = run({"roundtrip", "--p", "31", "--samples", "100", "--seed", "5"});
  const auto b = run({"roundtrip", "--p", "31", "--samples", "100", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto s = run({"spot-check", "--p", "11", "--samples", "100", "--seed", "42"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, "p = 11: 100/100 agree with the projective scan\n");
}
