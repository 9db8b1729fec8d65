// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

CliRun cli(const std::string& args) {
  std::string cmd = std::string(EQC_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Cli, NormalizeRelation) {
  CliRun r = cli("normalize --ring bt2 --expr " + quote("z00*cT"));
  EXPECT_EQ(r.code, 0);
  CliRun expect = cli("normalize --expr " + quote("z10*cxw1 + z01*cxw2 - u[1]*z01*z10*z11*cxw1*cxw2"));
  EXPECT_EQ(r.out, expect.out);
  EXPECT_EQ(r.out, "(1 - kappa)*z01*cxw2 + z10*cxw1 + u[1]*z00*z01^2*cw1*cxw2\n");
}

TEST(Cli, EmptyExpressionIsUsageError) {
  EXPECT_EQ(cli("normalize --expr " + quote("")).code, 2);
  EXPECT_EQ(cli("normalize --expr " + quote("   ")).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("normalize --expr z00 --bogus").code, 2);
  EXPECT_EQ(cli("normalize").code, 2);
  EXPECT_EQ(cli("normalize --ring bt7 --expr z00").code, 2);
  EXPECT_EQ(cli("normalize --expr " + quote("z00*+")).code, 2);
  EXPECT_EQ(cli("basis --window 0:6:0").code, 2);
  EXPECT_EQ(cli("basis --format xml").code, 2);
  EXPECT_EQ(cli("map --name nope --expr z00").code, 2);
  EXPECT_EQ(cli("waner --bundles w9").code, 2);
  EXPECT_EQ(cli("verify --criterion 15").code, 2);
  EXPECT_EQ(cli("euler --m x --n 1").code, 2);
}

TEST(Cli, HelpSucceeds) {
  CliRun r = cli("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("normalize"), std::string::npos);
}

TEST(Cli, BasisCsv) {
  CliRun r = cli("basis --coset " + quote("W01+W10") + " --window 0:6:0:10 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "a,b,count\n0,0,1\n0,2,1\n2,0,1\n2,2,3\n2,4,2\n4,2,2\n4,4,5\n4,6,3\n6,4,3\n6,6,7\n6,8,4\n");
}

TEST(Cli, BasisJson) {
  CliRun r = cli("basis --coset 0 --window 0:2:0:4 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["coset"], "0");
  ASSERT_TRUE(j["cells"].is_array());
  int total = 0;
  for (const auto& c : j["cells"]) {
    EXPECT_EQ(c["count"], c["monomials"].size());
    total += c["count"].get<int>();
  }
  // (0,0) 1, (0,2) 2, (0,4) 1, (2,2) 2, (2,4) 4
  EXPECT_EQ(total, 10);
}

TEST(Cli, MapTuplesAreArrays) {
  for (const char* name : {"phi", "eta"}) {
    CliRun r = cli(std::string("map --name ") + name + " --expr cT --format json");
    ASSERT_EQ(r.code, 0) << name;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    ASSERT_TRUE(j["value"].is_array());
    EXPECT_EQ(j["value"].size(), 4u);
  }
  CliRun rho = cli("map --name rho --expr cw1");
  EXPECT_EQ(rho.out, "z10*z11*x1\n");
  CliRun t = cli("map --name t --expr cxT");
  EXPECT_EQ(t.out, "cw\n");
  for (const char* name : {"sstar", "delta", "chi1", "gamma", "pi1", "pi2", "modn"}) {
    std::string arg = std::string(name) == "sstar" ? "Z0" : (name[0] == 'p' ? "z0" : "z00");
    EXPECT_EQ(cli(std::string("map --name ") + name + " --expr " + arg).code, 0) << name;
  }
}

TEST(Cli, MultiplyMatchesNormalize) {
  CliRun a = cli("multiply --expr z00 --expr cT");
  CliRun b = cli("normalize --expr " + quote("z00*cT"));
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EulerWanerUnitsPush) {
  CliRun e = cli("euler --m 0 --n 0");
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "e(O(0,0)) = 0\n");
  CliRun w = cli("waner --bundles w1 --format json");
  ASSERT_EQ(w.code, 0);
  auto j = nlohmann::json::parse(w.out);
  EXPECT_EQ(j["rank"], 1);
  EXPECT_EQ(j["coefficients"][1], "cw1");
  CliRun u = cli("units --format json");
  ASSERT_EQ(u.code, 0);
  EXPECT_EQ(nlohmann::json::parse(u.out)["units"].size(), 32u);
  CliRun p = cli("push --a1 1 --format json");
  ASSERT_EQ(p.code, 0);
  EXPECT_EQ(nlohmann::json::parse(p.out)["pushforward"], "u[1]*Z0*Z2");
}

TEST(Cli, VerifyIsReproducible) {
  CliRun a = cli("verify --criterion 2 --criterion 6");
  CliRun b = cli("verify --criterion 2 --criterion 6");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("criterion  2: PASS"), std::string::npos);
  EXPECT_NE(a.out.find("criterion  6: PASS"), std::string::npos);
}

TEST(Cli, VerifyConfluenceReport) {
  CliRun r = cli("verify --confluence --format json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["bt1"].size(), 2u);
  EXPECT_FALSE(j["bt2"].empty());
  EXPECT_EQ(j["pass"], true);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  CliRun a = cli("verify --criterion 8 --no-notes");
  CliRun b = cli("verify --criterion 8 --no-notes");
  std::string one = std::string("EQUICOHOM_THREADS=1 ") + EQC_CLI + " verify --criterion 8 --no-notes";
  FILE* p = popen(one.c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  pclose(p);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, out);
}

}  // namespace
