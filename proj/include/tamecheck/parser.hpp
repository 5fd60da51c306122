#ifndef TAMECHECK_PARSER_HPP
#define TAMECHECK_PARSER_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tamecheck/polynomial.hpp"

namespace tamecheck {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

struct VarContext {
  std::vector<std::string> spatial;
  std::string param = "t";

  int arity() const { return static_cast<int>(spatial.size()); }
  // spatial variables followed by the parameter
  RingPtr ring() const;
  void validate() const;  // distinct nonempty names, param not spatial, n >= 1
};

struct Token {
  enum Kind { Ident, Int, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
  Kind kind;
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(const std::string& text);

// Expands to a sparse polynomial over ctx.ring(). max_exponent caps literal
// exponents (default 64).
Polynomial parse_polynomial(const std::string& text, const VarContext& ctx,
                            int max_exponent = 64);
Polynomial parse_polynomial(const std::vector<Token>& tokens, const VarContext& ctx,
                            int max_exponent = 64);

struct DeformationProblem {
  VarContext vars;
  Polynomial F;                      // in vars.ring(), F(0,t) = 0
  std::vector<Point> witness_points; // spatial points, arity n
  std::map<std::string, std::string> option_overrides;  // max_power, ...
};

// Line-oriented problem file:
//   vars = x y z
//   param = t
//   F = (x^2 + y^2*z)*(x - t)
//   witness = 0 0 1
//   max_power = 6
DeformationProblem parse_problem_file(const std::string& text);

}  // namespace tamecheck

#endif
