#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "hns4/cli/app.hpp"
#include "support/process.hpp"

namespace hns4::cli {
namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured invoke(std::vector<std::string> args, const std::string &input = "") {
  args.insert(args.begin(), "hns4");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EvalPrintsCanonicalText) {
  const auto r = invoke({"eval", "--system", "H", "e2*e3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "e4\n");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, EvalJson) {
  const auto r = invoke({"eval", "--system", "ww", "--json", "1 + e2*e2"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["system"], "WW");
  EXPECT_EQ(j["coeffs"], nlohmann::json::parse("[2.0, 0.0, 0.0, 0.0]"));
}

TEST(Cli, ZeroDivisorIsEvaluationError) {
  const auto r = invoke({"eval", "--system", "AH", "1/(e1+e3)"});
  EXPECT_EQ(r.code, kExitEvalError);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("zero divisor"), std::string::npos);
}

TEST(Cli, SyntaxErrorsAreEvaluationErrors) {
  EXPECT_EQ(invoke({"eval", "--system", "H", "exp(e2 + e3"}).code, kExitEvalError);
  const auto lex = invoke({"eval", "--system", "H", "2 @ 3"});
  EXPECT_EQ(lex.code, kExitEvalError);
  EXPECT_NE(lex.err.find("column 3"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "e2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--system", "Q", "e2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table", "H", "--mu", "1", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table", "--mu", "2", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"exp", "--system", "H", "1", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_NE(invoke({"table"}).err, "");
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("eval"), std::string::npos);
}

TEST(Cli, TableByNameAndMu) {
  const auto dd = invoke({"table", "DD"});
  EXPECT_EQ(dd.code, kExitOk);
  EXPECT_NE(dd.out.find("e2   e2   0    e4   0"), std::string::npos) << dd.out;
  const auto ww = invoke({"table", "--mu", "1", "1"});
  EXPECT_EQ(ww.code, kExitOk);
  EXPECT_NE(ww.out.find("e3   e3   -e4  e1   -e2"), std::string::npos) << ww.out;
  const auto negative = invoke({"table", "--mu", "-1", "0"});
  EXPECT_EQ(negative.code, kExitOk);
  EXPECT_EQ(negative.out.substr(0, 2), "CD");
}

TEST(Cli, ExpSubcommand) {
  const auto r = invoke({"exp", "--system", "DD", "0", "1", "2", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1 + e2 + 2*e3 + 3*e4\n");
  const auto neg = invoke({"exp", "--system", "H", "--json", "0", "-3.141592653589793", "0", "0"});
  EXPECT_EQ(neg.code, kExitOk);
  const auto j = nlohmann::json::parse(neg.out);
  EXPECT_NEAR(j["coeffs"][0].get<double>(), -1.0, 1e-15);
}

TEST(Cli, ExpOverflowIsEvaluationError) {
  EXPECT_EQ(invoke({"exp", "--system", "H", "1000", "0", "0", "0"}).code, kExitEvalError);
}

TEST(Cli, Repl) {
  const auto r = invoke({"repl", "--system", "H"},
                        "e2*e3\n\n:system AH\ne3*e3\n1/(e1+e3)\n:bogus\n:system Q\n:table\n:quit\ne2\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "e4\n1\n"
                   "AH   e1   e2   e3   e4\n"
                   "e1   e1   e2   e3   e4\n"
                   "e2   e2   -e1  e4   -e3\n"
                   "e3   e3   -e4  e1   -e2\n"
                   "e4   e4   e3   e2   e1\n");
  EXPECT_NE(r.err.find("zero divisor"), std::string::npos);
  EXPECT_NE(r.err.find("unknown command"), std::string::npos);
  EXPECT_NE(r.err.find("unknown system 'Q'"), std::string::npos);
}

TEST(Cli, ReplStopsAtEndOfInput) {
  EXPECT_EQ(invoke({"repl", "--system", "DD"}, "e2*e3").out, "e4\n");
}

// The built executable, end to end.
TEST(CliProcess, GoldenEval) {
  const auto r = testing::run_process(HNS4_BINARY, {"eval", "--system", "H", "e2*e3"});
  EXPECT_EQ(r.out, "e4\n");
  EXPECT_EQ(r.exit_code, 0);
}

TEST(CliProcess, GoldenTable) {
  const auto r = testing::run_process(HNS4_BINARY, {"table", "DD"});
  EXPECT_EQ(r.out, "DD   e1   e2   e3   e4\n"
                   "e1   e1   e2   e3   e4\n"
                   "e2   e2   0    e4   0\n"
                   "e3   e3   -e4  0    0\n"
                   "e4   e4   0    0    0\n");
  EXPECT_EQ(r.exit_code, 0);
}

TEST(CliProcess, GoldenZeroDivisor) {
  const auto r = testing::run_process(HNS4_BINARY, {"eval", "--system", "AH", "1/(e1+e3)"}, true);
  EXPECT_EQ(r.out, "error: cannot divide by (e1 + e3) = 1 + e3: divisor is a zero divisor "
                   "(pseudonorm 0)\n");
  EXPECT_EQ(r.exit_code, 2);
}

} // namespace
} // namespace hns4::cli
