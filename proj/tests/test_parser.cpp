#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace tamecheck;
using testutil::P;

TEST_CASE("tokenizer basics") {
  auto toks = tokenize("x1^2 - 3/2*y + (t)");
  REQUIRE(toks.size() == 14);  // incl. End
  CHECK(toks[0].kind == Token::Ident);
  CHECK(toks[0].text == "x1");
  CHECK(toks[1].kind == Token::Caret);
  CHECK(toks[3].kind == Token::Minus);
  CHECK(toks[4].kind == Token::Int);
  CHECK(toks[5].kind == Token::Slash);
  CHECK(toks.back().kind == Token::End);
}

TEST_CASE("tokenizer rejects illegal characters") {
  CHECK_THROWS_AS(tokenize("x @ y"), ParseError);
}

TEST_CASE("expression expansion") {
  auto c = testutil::ctx_xy();
  CHECK(P(c, "(x + y)*(x - y)") == P(c, "x^2 - y^2"));
  CHECK(P(c, "-x^2") == P(c, "0 - x^2"));
  CHECK(P(c, "2^3*x") == P(c, "8*x"));
  CHECK(P(c, "x*(y*(t + 1))") == P(c, "x*y*t + x*y"));
  CHECK(P(c, "1/2*x + 1/2*x") == P(c, "x"));
  CHECK(P(c, "(y - t)^2") == P(c, "y^2 - 2*y*t + t^2"));
}

TEST_CASE("parser error positions and limits") {
  auto c = testutil::ctx_xy();
  CHECK_THROWS_AS(P(c, "x +"), ParseError);
  CHECK_THROWS_AS(P(c, "w + 1"), ParseError);     // unknown variable
  CHECK_THROWS_AS(P(c, "x^(2)"), ParseError);     // exponent must be a literal
  CHECK_THROWS_AS(P(c, "x^100"), ParseError);     // exceeds max_exponent
  CHECK_NOTHROW(parse_polynomial("x^100", c, 128));
  try {
    P(c, "x + + y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col > 1);
  }
}

TEST_CASE("var context validation") {
  VarContext c;
  c.spatial = {};
  CHECK_THROWS(c.validate());
  c.spatial = {"x", "x"};
  CHECK_THROWS(c.validate());
  c.spatial = {"x", "t"};
  CHECK_THROWS(c.validate());
  c.spatial = {"x", "y"};
  CHECK_NOTHROW(c.validate());
  auto r = c.ring();
  REQUIRE(r->size() == 3);
  CHECK(r->vars.back() == "t");
}

TEST_CASE("problem file parsing") {
  auto prob = parse_problem_file(
      "# a comment\n"
      "vars = x y z\n"
      "param = t\n"
      "F = (x^2 + y^2*z)*(x - t)\n"
      "witness = 0 0 1\n"
      "max_power = 4\n");
  CHECK(prob.vars.spatial == std::vector<std::string>{"x", "y", "z"});
  CHECK(prob.vars.param == "t");
  REQUIRE(prob.witness_points.size() == 1);
  CHECK(prob.witness_points[0] == Point{Rational(0), Rational(0), Rational(1)});
  CHECK(prob.option_overrides.at("max_power") == "4");
  auto c = testutil::ctx_xyz();
  CHECK(prob.F == P(c, "(x^2 + y^2*z)*(x - t)"));
}

TEST_CASE("problem file rejects bad input") {
  CHECK_THROWS(parse_problem_file("param = t\nF = x*t\n"));            // missing vars
  CHECK_THROWS(parse_problem_file("vars = x\nparam = t\n"));           // missing F
  CHECK_THROWS(parse_problem_file("vars = x\nF = x\nwitness = 1 2\n"));  // arity
  CHECK_THROWS(parse_problem_file("vars = x\nF = x + t\n"));           // F(0,t) != 0
  CHECK_NOTHROW(parse_problem_file("vars = x\nF = x*t\n"));
}

TEST_CASE("canonical printing round-trips") {
  auto c = testutil::ctx_xy();
  auto f = P(c, "-3/2*x^2*y + t - 1/7*y^3");
  CHECK(P(c, f.str()) == f);
}
