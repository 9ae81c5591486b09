#include <numbers>

#include <gtest/gtest.h>

#include "hns4/expr/evaluator.hpp"
#include "hns4/expr/format.hpp"
#include "hns4/expr/parser.hpp"
#include "support/random_expr.hpp"

namespace hns4::expr {
namespace {

const SystemDef &sys(SystemKind k) { return builtin_system(k); }

HNum eval(const char *src, SystemKind k) { return evaluate(*parse(src), sys(k)); }

TEST(Evaluate, QuaternionProduct) {
  EXPECT_EQ(eval("e2*e3", SystemKind::H), HNum(sys(SystemKind::H), 0, 0, 0, 1));
}

TEST(Evaluate, ZeroDivisorDivision) {
  try {
    eval("1/(e1+e3)", SystemKind::AH);
    FAIL() << "expected ZeroDivisorError";
  } catch (const ZeroDivisorError &e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("zero divisor"), std::string::npos) << msg;
    EXPECT_NE(msg.find("(e1 + e3)"), std::string::npos) << msg;
    EXPECT_NE(msg.find("pseudonorm 0"), std::string::npos) << msg;
    EXPECT_EQ(e.pseudonorm(), 0.0);
  }
  EXPECT_THROW(eval("(e1 - e2) \\ e2", SystemKind::WD), ZeroDivisorError);
  EXPECT_THROW(eval("e2 / 0", SystemKind::H), ZeroDivisorError);
}

TEST(Evaluate, Exponential) {
  const HNum e = eval("exp(3.141592653589793*e2)", SystemKind::H);
  EXPECT_NEAR(e[0], -1.0, 1e-15);
  EXPECT_NEAR(e.coeffs().tail<3>().norm(), 0.0, 1e-15);
}

TEST(Evaluate, Functions) {
  EXPECT_EQ(eval("pnorm(1 + 2*e2 + 3*e3 + 4*e4)", SystemKind::AH),
            HNum::scalar(sys(SystemKind::AH), -20));
  EXPECT_NEAR(eval("norm(1 + 2*e2 + 3*e3 + 4*e4)", SystemKind::H)[0], 900, 1e-9);
  EXPECT_EQ(eval("conj(1 + 2*e2)", SystemKind::WW), HNum(sys(SystemKind::WW), 1, -2, 0, 0));
}

TEST(Evaluate, DivisionOperatorsSolveTheirEquations) {
  // e3 \ e2 solves e3 x = e2; e2 / e3 solves x e3 = e2.
  EXPECT_EQ(eval("e3 \\ e2", SystemKind::H), HNum::basis_element(sys(SystemKind::H), 4));
  EXPECT_EQ(eval("e2 / e3", SystemKind::H), neg(HNum::basis_element(sys(SystemKind::H), 4)));
  EXPECT_EQ(eval("e3 * (e3 \\ e2)", SystemKind::H), HNum::basis_element(sys(SystemKind::H), 2));
}

TEST(Evaluate, OverflowIsAnError) {
  EXPECT_THROW(eval("exp(1000)", SystemKind::H), NonFiniteError);
}

class PerSystem : public ::testing::TestWithParam<SystemKind> {};

TEST_P(PerSystem, RandomTreesMatchDirectCalls) {
  auto rng = testing::make_rng(40);
  for (int t = 0; t < 300; ++t) {
    const testing::RandomExpr r = testing::random_expr(sys(GetParam()), rng, 4);
    if (!r.value) {
      EXPECT_THROW(evaluate(*r.tree, sys(GetParam())), ZeroDivisorError) << to_source(*r.tree);
      continue;
    }
    const HNum got = evaluate(*r.tree, sys(GetParam()));
    EXPECT_EQ(got, *r.value) << to_source(*r.tree);
    // Same value after a trip through source text.
    EXPECT_EQ(evaluate(*parse(to_source(*r.tree)), sys(GetParam())), *r.value);
  }
}

TEST_P(PerSystem, CanonicalRenderingReparses) {
  auto rng = testing::make_rng(41);
  std::uniform_real_distribution<double> u(-50, 50);
  for (int t = 0; t < 500; ++t) {
    HNum w(sys(GetParam()), u(rng), u(rng), u(rng), u(rng));
    if (t % 5 == 0)
      w = HNum(sys(GetParam()), 0, w[1], 0, w[3]);
    if (t % 7 == 0)
      w = HNum(sys(GetParam()), 1, -1, w[2] * 1e-9, 1e12);
    const HNum back = evaluate(*parse(format_coeffs(w)), sys(GetParam()));
    for (int i = 0; i < 4; ++i)
      // Six significant digits: half a unit in the sixth digit.
      ASSERT_LE(std::abs(back[i] - w[i]), 5e-6 * std::max(1.0, std::abs(w[i])))
          << format_coeffs(w);
  }
}

INSTANTIATE_TEST_SUITE_P(Named, PerSystem, ::testing::ValuesIn(kNamedKinds),
                         [](const auto &info) { return std::string(kind_name(info.param)); });

} // namespace
} // namespace hns4::expr
