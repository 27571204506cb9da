#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "engel/cli.hpp"
#include "engel/expr.hpp"
#include "support/json_schema.hpp"

using namespace engel;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const schema::Validator& validator() {
  static const schema::Validator v = [] {
    std::ifstream in(ENGEL_SCHEMA_PATH);
    return schema::Validator(json::parse(in));
  }();
  return v;
}

Expr random_expr(std::mt19937_64& rng, int depth) {
  int pick = static_cast<int>(rng() % 10);
  if (depth == 0 || pick < 3) return pick == 0 ? Expr::z() : Expr::c(1 + static_cast<int>(rng() % 12));
  if (pick == 3) return Expr::scaled(1 + static_cast<std::int64_t>(rng() % 9), random_expr(rng, depth - 1));
  return Expr::bracket(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
}

}  // namespace

TEST(ExprParserTest, ParsesAndFoldsCommaLists) {
  EXPECT_EQ(parse_expr("z"), Expr::z());
  EXPECT_EQ(parse_expr(" c12 "), Expr::c(12));
  EXPECT_EQ(parse_expr("[z,c1,c2]"), Expr::bracket(Expr::bracket(Expr::z(), Expr::c(1)), Expr::c(2)));
  EXPECT_EQ(parse_expr("[ [z, c1],\n 3*[z,c2] ]"),
            Expr::bracket(Expr::bracket(Expr::z(), Expr::c(1)), Expr::scaled(3, Expr::bracket(Expr::z(), Expr::c(2)))));
  EXPECT_EQ(to_string(parse_expr("[z,c1,c2]")), "[[z,c1],c2]");
}

TEST(ExprParserTest, ReportsPositionOfFirstError) {
  try {
    parse_expr("[z,,");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 4);
    EXPECT_NE(std::string(e.what()).find("expected an expression but found ','"), std::string::npos);
  }
  try {
    parse_expr("[z,\n  x]");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
    EXPECT_NE(std::string(e.what()).find("unknown symbol 'x'"), std::string::npos);
  }
  for (const char* bad : {"", "[z]", "[z,c1", "c0", "c99", "z z", "3*", "[z,c1]]"})
    EXPECT_THROW(parse_expr(bad), ParseError) << bad;
  EXPECT_THROW(parse_expr(std::string(600, '[')), ParseError);
}

TEST(ExprParserTest, RoundTripOnRandomExpressions) {
  std::mt19937_64 rng(20240901);
  for (int i = 0; i < 500; ++i) {
    Expr e = random_expr(rng, 5);
    std::string s = to_string(e);
    ASSERT_EQ(parse_expr(s), e) << s;
  }
}

TEST(ExprEvaluateTest, MatchesTheModel) {
  FreeMetabelian alg(PrimeField(5));
  auto v = evaluate(alg, parse_expr("[z,c2,c1]"));
  ASSERT_EQ(v.kind(), ModelValue::Kind::kIdeal);
  EXPECT_EQ(v.element(), alg.generator(IndexSet{1, 2}));
  EXPECT_EQ(evaluate(alg, parse_expr("[c1,z]")).element(), alg.generator(IndexSet{1}, -1));
  EXPECT_EQ(evaluate(alg, parse_expr("[c1,c2]")).kind(), ModelValue::Kind::kCCommutator);
  EXPECT_TRUE(evaluate(alg, parse_expr("[[c1,c2],z]")).is_zero());
  EXPECT_EQ(evaluate(alg, parse_expr("c3")).kind(), ModelValue::Kind::kGenerator);
  EXPECT_TRUE(evaluate(alg, parse_expr("[z,c1,c1]")).is_zero());
  EXPECT_EQ(evaluate(alg, parse_expr("2*[z,c1]")).element(), alg.generator(IndexSet{1}, 2));
}

TEST(CliTest, ExpressionCommands) {
  auto nf = run({"normal-form", "[z,c1,c2]"});
  EXPECT_EQ(nf.code, kExitPass);
  EXPECT_EQ(nf.out, "1 [z|1,2]\n");
  auto jm = run({"j-member", "[z,c1,c2,c3,c4]"});
  EXPECT_EQ(jm.code, kExitPass);
  EXPECT_EQ(jm.out, "true\n");
  EXPECT_EQ(run({"j-member", "[z,c1,c2,c3]"}).out, "false\n");
  EXPECT_EQ(run({"j-member", "c1"}).out, "false\n");
  auto cl = run({"classify", "[[z,c1],[z,c2,c3]]"});
  EXPECT_EQ(cl.code, kExitPass);
  EXPECT_NE(cl.out.find("ZETA1"), std::string::npos);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run({"verify", "--check", "thm5.4", "--m", "2", "--p", "5"}).code, kExitPass);
  auto engel = run({"verify", "--check", "engel", "--r", "3"});
  EXPECT_EQ(engel.code, kExitPass);
  EXPECT_NE(engel.out.find("verify engel: pass"), std::string::npos);
  // The relator lists without the two-block families miss part of J on (2; 1,2,3).
  auto listed = run({"verify", "--check", "lemma3.2", "--n", "3", "--families", "listed"});
  EXPECT_EQ(listed.code, kExitDiscrepancy);
  EXPECT_NE(listed.out.find("FAIL  lemma3.2  (2; 1,2,3)"), std::string::npos);
  EXPECT_EQ(run({"verify", "--check", "lemma3.2", "--n", "3"}).code, kExitPass);

  EXPECT_EQ(run({"normal-form", "[z,,"}).code, kExitUsage);
  EXPECT_NE(run({"normal-form", "[z,,"}).err.find("column 4"), std::string::npos);
  EXPECT_EQ(run({"--p", "4", "dims"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--check", "lemma9.9"}).code, kExitUsage);
  EXPECT_EQ(run({"verify"}).code, kExitUsage);
  EXPECT_EQ(run({"witness", "--m", "0"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);

  ::setenv("ENGEL_LAB_MAX_DIM", "5", 1);
  EXPECT_EQ(run({"verify", "--check", "thm5.4", "--m", "1"}).code, kExitResource);
  ::unsetenv("ENGEL_LAB_MAX_DIM");
}

TEST(CliTest, GlobalOptionsMayFollowTheSubcommand) {
  auto a = run({"--output", "json", "--p", "7", "normal-form", "[z,c1]"});
  auto b = run({"normal-form", "[z,c1]", "--output", "json", "--p", "7"});
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out).at("p"), 7);
}

TEST(SchemaTest, ValidatorRejectsMalformedDocuments) {
  auto doc = json::parse(run({"--output", "json", "dims", "--n", "2"}).out);
  EXPECT_TRUE(validator().validate(doc).empty());
  auto extra = doc;
  extra["unexpected"] = 1;
  EXPECT_FALSE(validator().validate(extra).empty());
  auto negative = doc;
  negative["slices"][0]["dims"]["slice"] = -1;
  EXPECT_FALSE(validator().validate(negative).empty());
  auto missing = doc;
  missing.erase("tool");
  EXPECT_FALSE(validator().validate(missing).empty());
}

class JsonOutputTest : public ::testing::TestWithParam<std::vector<std::string>> {};

TEST_P(JsonOutputTest, ValidatesAgainstSchema) {
  std::vector<std::string> args{"--output", "json"};
  args.insert(args.end(), GetParam().begin(), GetParam().end());
  auto r = run(args);
  ASSERT_TRUE(r.code == kExitPass || r.code == kExitDiscrepancy) << r.err;
  json doc = json::parse(r.out);
  if (doc.contains("pass")) {
    EXPECT_EQ(doc["pass"].get<bool>(), r.code == kExitPass);
  }
  for (const auto& e : validator().validate(doc)) ADD_FAILURE() << e;
}

INSTANTIATE_TEST_SUITE_P(
    Commands, JsonOutputTest,
    ::testing::Values(std::vector<std::string>{"normal-form", "[[z,c1],[z,c2,c3]]"},
                      std::vector<std::string>{"classify", "[z,c1,c2,c3]"},
                      std::vector<std::string>{"j-member", "[z,c1,c2,c3,c4]"},
                      std::vector<std::string>{"j-member", "[c1,c2]"},
                      std::vector<std::string>{"dims", "--n", "3"},
                      std::vector<std::string>{"verify", "--check", "prop3.1", "--n", "2", "--weight", "3"},
                      std::vector<std::string>{"verify", "--check", "lemma3.2", "--n", "3"},
                      std::vector<std::string>{"verify", "--check", "lemma3.2", "--n", "3", "--families", "listed"},
                      std::vector<std::string>{"verify", "--check", "cases", "--case", "B6"},
                      std::vector<std::string>{"verify", "--check", "thm4.1", "--m", "4"},
                      std::vector<std::string>{"verify", "--check", "lemma5.1", "--n", "4", "--samples", "10"},
                      std::vector<std::string>{"verify", "--check", "lemma5.2", "--n", "4", "--samples", "10"},
                      std::vector<std::string>{"verify", "--check", "prop5.3", "--n", "4", "--samples", "10"},
                      std::vector<std::string>{"verify", "--check", "engel", "--n", "4", "--samples", "10"},
                      std::vector<std::string>{"verify", "--check", "prop2.2", "--r", "2"},
                      std::vector<std::string>{"verify", "--check", "thm5.4", "--m", "1"},
                      std::vector<std::string>{"witness", "--m", "3"},
                      std::vector<std::string>{"witness", "--m", "2", "--mode", "rowreduce"}));
