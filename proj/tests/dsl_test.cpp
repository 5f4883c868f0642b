#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "jacal/dsl/executor.hpp"
#include "jacal/dsl/parser.hpp"
#include "jacal/harness.hpp"
#include "support.hpp"

using namespace jacal;
using namespace jacal::dsl;

namespace {

const char* kPlaneCurve = R"(ring R = poly(QQ, [x, y]) / ideal(x^5, x*y)
module M = coker(R, [[x^3]])
assert_not acts_zero(x, ext(R, 2, M, M))
)";

RunReport run(const std::string& text, RunOptions options = {}) { return run_script(text, options); }

// Random polynomial-shaped expressions over names a, b and small integers.
ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  auto e = std::make_unique<Expr>();
  int pick = depth <= 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 7);
  switch (pick) {
    case 0:
      e->kind = Expr::Kind::Integer;
      e->text = std::to_string(rng() % 20);
      break;
    case 1:
      e->kind = Expr::Kind::Name;
      e->text = rng() % 2 ? "a" : "b";
      break;
    case 2:
      e->kind = Expr::Kind::Negate;
      e->text = "-";
      e->args.push_back(random_expr(rng, depth - 1));
      break;
    case 3:
      e->kind = Expr::Kind::Call;
      e->text = "f";
      for (int i = static_cast<int>(rng() % 3); i > 0; --i) e->args.push_back(random_expr(rng, depth - 1));
      break;
    default: {
      static const char* ops[] = {"+", "-", "*", "/", "^"};
      e->kind = Expr::Kind::Binary;
      e->text = ops[rng() % 5];
      e->args.push_back(random_expr(rng, depth - 1));
      e->args.push_back(random_expr(rng, depth - 1));
    }
  }
  return e;
}

}  // namespace

TEST(Parser, SpansOnTokens) {
  auto tokens = tokenize("ring R =\n  poly(QQ, [x])");
  ASSERT_GE(tokens.size(), 5u);
  EXPECT_EQ(tokens[0].span.line, 1u);
  EXPECT_EQ(tokens[3].text, "poly");
  EXPECT_EQ(tokens[3].span.line, 2u);
  EXPECT_EQ(tokens[3].span.column, 3u);
  EXPECT_EQ(tokens[3].span.offset, 11u);
  EXPECT_EQ(tokens.back().kind, Token::Kind::End);
}

TEST(Parser, ImplicitCoefficientRejected) {
  try {
    parse("ring R = poly(QQ, [x]) / ideal(5x^4)");
    FAIL() << "expected a diagnostic";
  } catch (const Diagnostic& d) {
    EXPECT_NE(d.message().find("write 5*x"), std::string::npos);
    EXPECT_EQ(d.span().column, 32u);
  }
}

TEST(Parser, ExpectedTokenSet) {
  try {
    parse("ring R = poly(QQ, [x, y]\nmodule M = coker(R, [[x]])");
    FAIL() << "expected a diagnostic";
  } catch (const Diagnostic& d) {
    EXPECT_EQ(d.span().line, 2u);
    EXPECT_EQ(d.expected(), (std::vector<std::string>{"','", "')'"}));
  }
  try {
    parse("assert_equal jacobian(R) ideal(x)");
    FAIL();
  } catch (const Diagnostic& d) {
    EXPECT_EQ(d.expected(), (std::vector<std::string>{"','"}));
  }
}

TEST(Parser, StatementShapes) {
  Script s = parse(R"(field F = GF(13)
ring R = poly(F, [x, y, z], order=lex) / ideal(x*y)
normalization A = (R; z)
primes P = [(R; x), (R; y)]
let K = kaehler_different(R, A)
assert label: contains(K, x)
assert_equal jacobian(R), ideal(x, y)
jacobian(R))");
  ASSERT_EQ(s.statements.size(), 8u);
  EXPECT_EQ(s.statements[0].kind, Stmt::Kind::Field);
  EXPECT_EQ(s.statements[2].value->kind, Expr::Kind::IdealLit);
  EXPECT_EQ(s.statements[3].value->kind, Expr::Kind::List);
  EXPECT_EQ(s.statements[5].name, "label");
  EXPECT_TRUE(s.statements[6].name.empty());
  EXPECT_EQ(s.statements[6].kind, Stmt::Kind::AssertEqual);
  EXPECT_EQ(s.statements[7].kind, Stmt::Kind::Command);
  EXPECT_EQ(s.statements[1].value->args[0]->args.back()->kind, Expr::Kind::Keyword);
}

TEST(Parser, RoundTripCorpus) {
  for (const auto& script : example_corpus()) {
    Script first = parse(script.source);
    std::string printed = print(first);
    Script second = parse(printed);
    EXPECT_EQ(dump(first), dump(second)) << script.name;
    EXPECT_EQ(print(second), printed) << script.name;
  }
}

TEST(Parser, RoundTripRandomExpressions) {
  std::mt19937_64 rng(jacal::testing::test_seed());
  for (int i = 0; i < 500; ++i) {
    Script s;
    s.statements.push_back({Stmt::Kind::Command, "", random_expr(rng, 4), nullptr, {}});
    std::string text = print(s);
    Script back = parse(text);
    ASSERT_EQ(dump(back), dump(s)) << text;
  }
}

TEST(Parser, DeletionFuzz) {
  std::mt19937_64 rng(jacal::testing::test_seed());
  std::vector<std::string> sources;
  for (const auto& s : example_corpus()) sources.push_back(s.source);
  int diagnostics = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string& src = sources[rng() % sources.size()];
    auto tokens = tokenize(src);
    std::string text = src;
    // Delete one to three tokens, back to front so offsets stay valid.
    std::vector<std::size_t> picks;
    for (int k = 1 + static_cast<int>(rng() % 3); k > 0; --k) picks.push_back(rng() % (tokens.size() - 1));
    std::sort(picks.rbegin(), picks.rend());
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
    for (std::size_t p : picks) text.erase(tokens[p].span.offset, tokens[p].span.length);
    try {
      Script s = parse(text);
      (void)dump(s);
    } catch (const Diagnostic& d) {
      ++diagnostics;
      EXPECT_LE(d.span().offset, text.size());
      EXPECT_LE(d.span().offset + d.span().length, text.size() + 1);
      EXPECT_GE(d.span().line, 1u);
    }
  }
  EXPECT_GT(diagnostics, 100);
}

TEST(Executor, PlaneCurveScript) {
  auto r = run(kPlaneCurve);
  EXPECT_EQ(r.exit_code(), 0) << r.text();
  ASSERT_EQ(r.assertions().size(), 1u);
  EXPECT_EQ(r.assertions()[0].to_string(), "PASS script.acts_zero expected=false got=false");
}

TEST(Executor, ModuleDeclaration) {
  auto r = run("ring R = poly(QQ, [x, y]) / ideal(x^5, x*y)\nmodule M = coker(R, [[x^3]])\nannihilator(M)");
  ASSERT_EQ(r.exit_code(), 0) << r.text();
  EXPECT_EQ(r.commands[1].value, "M = coker [x^3]");
  EXPECT_EQ(r.commands[2].value, "(x^3)");
}

TEST(Executor, FieldMustBePrime) {
  auto r = run("field F = GF(4)");
  EXPECT_EQ(r.exit_code(), 2);
  ASSERT_TRUE(r.diagnostic.has_value());
  EXPECT_NE(r.diagnostic->find("not prime"), std::string::npos);
  EXPECT_EQ(r.diagnostic->rfind("1:14:", 0), 0u) << *r.diagnostic;
}

TEST(Executor, UndeclaredNameHasSpan) {
  auto r = run("ring R = poly(QQ, [x])\njacobian(S)");
  EXPECT_EQ(r.exit_code(), 2);
  ASSERT_TRUE(r.diagnostic.has_value());
  EXPECT_EQ(r.diagnostic->rfind("2:10:", 0), 0u) << *r.diagnostic;
  EXPECT_EQ(r.status(), "error");
}

TEST(Executor, JacobianOfCurveUnion) {
  auto r = run("ring R = poly(GF(13), [x, y, z]) / ideal(x*y, x^5 - x*z^4)\njacobian(R)");
  ASSERT_EQ(r.exit_code(), 0) << r.text();
  EXPECT_EQ(r.commands[1].value, "(z^4, x, y)");
}

TEST(Executor, FailingAssertionExitsOne) {
  auto r = run("ring R = poly(QQ, [x, y]) / ideal(x^2)\nassert_equal dim: krull_dimension(R), 2\nassert_equal dim: krull_dimension(R), 1");
  EXPECT_EQ(r.exit_code(), 1);
  auto lines = r.assertions();
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].to_string(), "FAIL script.dim expected=2 got=1");
  EXPECT_EQ(lines[1].assertion, "dim_2");
  EXPECT_TRUE(lines[1].pass);
}

TEST(Executor, RuntimeErrorsCarryTheCommandSpan) {
  auto r = run("ring R = poly(QQ, [x, y]) / ideal(x^5, x*y)\nnormalization A = (R; x)\n\n  kaehler_different(R, A)");
  EXPECT_EQ(r.exit_code(), 2);
  ASSERT_TRUE(r.diagnostic.has_value());
  EXPECT_EQ(r.diagnostic->rfind("4:3:", 0), 0u) << *r.diagnostic;
  EXPECT_NE(r.diagnostic->find("pure power"), std::string::npos) << *r.diagnostic;
}

TEST(Executor, RingInferenceAndArithmetic) {
  auto r = run(R"(ring R = poly(QQ, [x, y])
normal_form(x^2*y - 1/2*y, ideal(x^2 - 1))
partial_derivative(x^3*y, x)
ideal_colon(ideal(x*y), y)
contains(ideal(x, y), (x + y)^3))");
  ASSERT_EQ(r.exit_code(), 0) << r.text();
  EXPECT_EQ(r.commands[1].value, "1/2*y");
  EXPECT_EQ(r.commands[2].value, "3*x^2*y");
  EXPECT_EQ(r.commands[3].value, "(x)");
  EXPECT_EQ(r.commands[4].value, "true");
}

TEST(Executor, AmbiguousRingIsADiagnostic) {
  auto r = run("radical_member(x, ideal(x))");
  EXPECT_EQ(r.exit_code(), 2);
  EXPECT_NE(r.diagnostic->find("cannot tell which ring"), std::string::npos);
}

TEST(Executor, LatestRingIsTheDefault) {
  auto r = run("ring R = poly(QQ, [x])\nring S = poly(QQ, [x, y]) / ideal(x*y)\nradical_member(x, ideal(x^2))\nx + y\nacts_zero(x, free(R, 1))");
  ASSERT_EQ(r.exit_code(), 0) << r.text();
  EXPECT_EQ(r.commands[2].value, "true");
  EXPECT_EQ(r.commands[3].value, "x + y");
  EXPECT_EQ(r.commands[4].value, "false");
}

TEST(Executor, OrderOption) {
  RunOptions lex;
  lex.order = MonomialOrder::lex();
  auto r = run("ring R = poly(QQ, [x, y])\ngroebner(ideal(x - y^2, y^3 - 1))", lex);
  ASSERT_EQ(r.exit_code(), 0) << r.text();
  EXPECT_EQ(r.commands[0].value, "R = QQ[x,y] (lex)");
  EXPECT_EQ(r.commands[1].value, "[x - y^2, y^3 - 1]");
}

TEST(Executor, JsonMatchesText) {
  auto r = run(std::string(kPlaneCurve) + "jacobian(R)\nfree_resolution(M, 2)\n");
  ASSERT_EQ(r.exit_code(), 0);
  auto j = nlohmann::ordered_json::parse(r.json());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys[0], "commands");
  EXPECT_EQ(keys[1], "status");
  EXPECT_EQ(j["status"], "ok");
  ASSERT_EQ(j["commands"].size(), r.commands.size());
  std::string text = r.text();
  for (const auto& c : j["commands"]) {
    EXPECT_TRUE(c.contains("cmd") && c.contains("span") && c.contains("result"));
    if (c["result"].contains("value")) {
      EXPECT_NE(text.find(c["result"]["value"].get<std::string>()), std::string::npos);
    } else {
      EXPECT_NE(text.find(c["result"]["got"].get<std::string>()), std::string::npos);
    }
  }
}

TEST(Executor, CharacteristicNote) {
  auto r = run("ring R = poly(GF(5), [x, y]) / ideal(x^5, x*y)");
  ASSERT_EQ(r.exit_code(), 0);
  ASSERT_EQ(r.commands[0].notes.size(), 1u);
  EXPECT_NE(r.commands[0].notes[0].find("divisible by the characteristic"), std::string::npos);
}
