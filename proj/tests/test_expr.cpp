// Copyright 2026 The equicohom Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "equicohom/classes.hpp"
#include "equicohom/expr.hpp"

namespace eqc {
namespace {

std::vector<BT2Elem> bt2_sample() {
  std::vector<BT2Elem> out;
  for (const auto& cell : basis_enumerate(parse_grading("W01+W10"), Window{0, 6, 0, 10}))
    for (const auto& m : cell.monomials) out.push_back(bt2().mono(m));
  for (const auto& r : bt2_relations()) {
    out.push_back(bt2().normalize(r.lhs));
    out.push_back(bt2().normalize(r.rhs));
  }
  for (Int m = -2; m <= 2; ++m)
    for (Int n = -2; n <= 2; ++n) {
      out.push_back(euler_omn(m, n, false));
      out.push_back(euler_omn(m, n, true));
    }
  for (const auto& u : unit_check(3).units) out.push_back(from_unit5(u));
  return out;
}

TEST(Expr, Bt2RoundTrip) {
  for (const auto& x : bt2_sample()) EXPECT_EQ(parse_bt2(bt2().str(x)), x) << bt2().str(x);
}

TEST(Expr, Bt1RoundTrip) {
  const auto& s = *bt1_system();
  for (const char* e : {"z0", "(1-kappa)*z0*cw + e^2", "xi*cxw^3 - u[2]*z1^2*cw", "t[3]*z0*cw^2", "0"}) {
    BT1Elem x = parse_bt1(e);
    EXPECT_EQ(parse_bt1(s.str(x)), x) << e;
  }
}

TEST(Expr, HCoeffRoundTrip) {
  for (const char* e : {"1", "-3", "kappa", "1 - kappa", "e^2*xi", "t[4]", "u[2]", "g*xi^2", "e^2 - 2*xi*e^2 + e^2"}) {
    HCoeff x = eval_hcoeff(parse_expr(e));
    EXPECT_EQ(eval_hcoeff(parse_expr(x.str())), x) << e;
  }
}

TEST(Expr, Bu2RoundTrip) {
  for (const char* e : {"Z0*Z2", "u[1]*Z0*Z2*cL - (1-kappa)*cxL", "cW^2 + cxW", "Z1^3*cL"}) {
    BU2Poly x = parse_bu2(e);
    EXPECT_EQ(parse_bu2(bu2_str(x)), x) << e;
  }
}

TEST(Expr, MapImagesRoundTrip) {
  for (const auto& x : bt2_sample()) {
    Poly<Int> r = rho(x);
    EXPECT_EQ(parse_target(rho_target().str(r), rho_target()), r) << rho_target().str(r);
    for (const auto& c : phi(x)) EXPECT_EQ(parse_target(phi_target().str(c), phi_target()), c);
    for (const auto& c : eta(x)) EXPECT_EQ(parse_eta_target(eta_target().str(c)), c);
    PhiElem p = to_phi_ring(x);
    EXPECT_EQ(parse_bt2_phi(bt2_phi().str(p)), p) << bt2_phi().str(p);
  }
}

TEST(Expr, WhitespaceInsensitive) {
  EXPECT_EQ(parse_bt2("z00*cT"), parse_bt2("  z00 *\tcT "));
  EXPECT_EQ(parse_bt2("(1-kappa)*z01^2"), parse_bt2("( 1 - kappa ) * z01 ^ 2"));
}

TEST(Expr, Precedence) {
  EXPECT_EQ(parse_bt2("z00 + z01*z10"), bt2().add(bt2().gen("z00"), bt2().mul(bt2().gen("z01"), bt2().gen("z10"))));
  EXPECT_EQ(parse_bt2("2*z00^2"), bt2().mul(bt2().integer(2), bt2().pow(bt2().gen("z00"), 2)));
  EXPECT_EQ(parse_bt2("-z00 - z01"), bt2().neg(bt2().add(bt2().gen("z00"), bt2().gen("z01"))));
  EXPECT_EQ(parse_bt2("(z00 + z01)^2"),
            bt2().pow(bt2().add(bt2().gen("z00"), bt2().gen("z01")), 2));
}

TEST(Expr, ErrorsReportPosition) {
  auto position = [](const std::string& s) -> std::size_t {
    try {
      parse_bt2(s);
    } catch (const ParseError& e) {
      return e.position;
    }
    return std::string::npos;
  };
  EXPECT_EQ(position(""), 0u);
  EXPECT_EQ(position("   "), 3u);
  EXPECT_EQ(position("z00*+"), 4u);
  EXPECT_EQ(position("z00 z01"), 4u);
  EXPECT_NE(position("(z00"), std::string::npos);
  EXPECT_EQ(position("foo"), 0u);
  EXPECT_EQ(position("z00*bar"), 4u);
  EXPECT_NE(position("u[x]"), std::string::npos);
}

TEST(Expr, ErrorsNameExpectedTokens) {
  try {
    parse_bt2("z00*+");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("expected"), std::string::npos) << e.what();
  }
}

TEST(Expr, NegativeExponentsOnlyInLaurentRings) {
  EXPECT_ANY_THROW(parse_bt2("z00^(-1)"));
  EXPECT_NO_THROW(parse_bt2_phi("e^(-2)*z00"));
  EXPECT_NO_THROW(parse_target("z00^(-1)*x1", rho_target()));
  EXPECT_ANY_THROW(parse_target("x1^(-1)", rho_target()));
}

TEST(Expr, UnknownGeneratorsPerRing) {
  EXPECT_THROW(parse_bt1("z00"), ParseError);
  EXPECT_THROW(parse_bu2("cw1"), ParseError);
  EXPECT_THROW(parse_bt2("Z0"), ParseError);
}

}  // namespace
}  // namespace eqc
