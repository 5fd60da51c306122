#include "tamecheck/parser.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace tamecheck {

RingPtr VarContext::ring() const {
  std::vector<std::string> v = spatial;
  v.push_back(param);
  return make_ring(std::move(v));
}

void VarContext::validate() const {
  if (spatial.empty()) throw std::invalid_argument("need at least one spatial variable");
  std::set<std::string> seen;
  for (const auto& s : spatial) {
    if (s.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(s).second)
      throw std::invalid_argument("duplicate variable name: " + s);
  }
  if (param.empty()) throw std::invalid_argument("empty parameter name");
  if (seen.count(param))
    throw std::invalid_argument("parameter name collides with a spatial variable: " + param);
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> toks;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string s) {
    toks.push_back({k, std::move(s), line, col});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      push(Token::Ident, text.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Token::Int, text.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    switch (c) {
      case '+': push(Token::Plus, "+"); break;
      case '-': push(Token::Minus, "-"); break;
      case '*': push(Token::Star, "*"); break;
      case '^': push(Token::Caret, "^"); break;
      case '/': push(Token::Slash, "/"); break;
      case '(': push(Token::LParen, "("); break;
      case ')': push(Token::RParen, ")"); break;
      default:
        throw ParseError(std::string("illegal character '") + c + "'", line, col);
    }
    ++i;
    ++col;
  }
  toks.push_back({Token::End, "", line, col});
  return toks;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::vector<Token>& toks, const VarContext& ctx, int max_exp)
      : toks_(toks), ring_(ctx.ring()), max_exp_(max_exp) {}

  Polynomial parse() {
    Polynomial p = expr();
    expect(Token::End, "trailing input");
    return p;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  void advance() { ++pos_; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur().line, cur().col);
  }
  void expect(Token::Kind k, const std::string& what) {
    if (cur().kind != k) fail("expected " + what);
    advance();
  }

  Polynomial expr() {
    bool neg = false;
    if (cur().kind == Token::Plus) advance();
    else if (cur().kind == Token::Minus) { neg = true; advance(); }
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
      bool sub = cur().kind == Token::Minus;
      advance();
      Polynomial t = term();
      if (sub) acc -= t; else acc += t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (cur().kind == Token::Star || cur().kind == Token::Slash) {
      bool div = cur().kind == Token::Slash;
      advance();
      Polynomial f = factor();
      if (div) {
        if (!acc.is_constant() || !f.is_constant())
          fail("division is only allowed between rational literals");
        if (f.constant_term() == 0) fail("division by zero");
        acc = Polynomial::constant(ring_, acc.constant_term() / f.constant_term());
      } else {
        acc = acc * f;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (cur().kind == Token::Caret) {
      advance();
      if (cur().kind == Token::Minus) fail("negative exponent");
      if (cur().kind != Token::Int) fail("expected integer exponent");
      long e = std::stol(cur().text);
      if (e > max_exp_)
        fail("exponent " + cur().text + " exceeds cap " + std::to_string(max_exp_));
      advance();
      b = b.pow(static_cast<int>(e));
    }
    return b;
  }

  Polynomial base() {
    if (cur().kind == Token::LParen) {
      advance();
      Polynomial p = expr();
      expect(Token::RParen, "')'");
      return p;
    }
    if (cur().kind == Token::Int) {
      Rational c(cur().text);
      advance();
      return Polynomial::constant(ring_, c);
    }
    if (cur().kind == Token::Ident) {
      int idx = ring_->index(cur().text);
      if (idx < 0) fail("unknown variable '" + cur().text + "'");
      advance();
      return Polynomial::variable(ring_, idx);
    }
    fail("expected expression");
  }

  const std::vector<Token>& toks_;
  RingPtr ring_;
  int max_exp_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

Polynomial parse_polynomial(const std::vector<Token>& tokens, const VarContext& ctx,
                            int max_exponent) {
  ctx.validate();
  return PolyParser(tokens, ctx, max_exponent).parse();
}

Polynomial parse_polynomial(const std::string& text, const VarContext& ctx,
                            int max_exponent) {
  return parse_polynomial(tokenize(text), ctx, max_exponent);
}

DeformationProblem parse_problem_file(const std::string& text) {
  DeformationProblem prob;
  std::string f_text;
  bool have_vars = false, have_f = false;
  std::vector<std::vector<std::string>> witness_raw;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'key = value'", lineno, 1);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "vars") {
      prob.vars.spatial = split_ws(value);
      have_vars = true;
    } else if (key == "param") {
      prob.vars.param = value;
    } else if (key == "F") {
      f_text = value;
      have_f = true;
    } else if (key == "witness") {
      witness_raw.push_back(split_ws(value));
    } else {
      prob.option_overrides[key] = value;
    }
  }
  if (!have_vars) throw std::invalid_argument("problem file: missing 'vars' section");
  if (!have_f) throw std::invalid_argument("problem file: missing 'F' section");
  prob.vars.validate();

  int max_exp = 64;
  if (auto it = prob.option_overrides.find("max_power"); it != prob.option_overrides.end())
    max_exp = std::max(max_exp, static_cast<int>(std::stol(it->second)));
  prob.F = parse_polynomial(f_text, prob.vars, max_exp);

  for (const auto& w : witness_raw) {
    if (static_cast<int>(w.size()) != prob.vars.arity())
      throw std::invalid_argument("witness point has wrong arity");
    Point p;
    for (const auto& c : w) p.push_back(rational_from_string(c));
    prob.witness_points.push_back(std::move(p));
  }

  // standing assumption: F(0, t) = 0 identically
  Polynomial at0 = prob.F;
  for (int i = 0; i < prob.vars.arity(); ++i) at0 = at0.set_var(i, 0);
  if (!at0.is_zero())
    throw std::invalid_argument("F(0,t) != 0: got " + at0.str());
  return prob;
}

}  // namespace tamecheck
