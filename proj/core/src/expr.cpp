#include "wwgm/expr.hpp"

#include <cctype>
#include <climits>
#include <functional>
#include <optional>
#include <utility>

#include "wwgm/errors.hpp"

namespace wwgm {

namespace {

struct Token {
  enum class Kind { number, ident, op, end };
  Kind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view in) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < in.size()) {
    const unsigned char c = static_cast<unsigned char>(in[pos]);
    if (std::isspace(c)) {
      ++pos;
    } else if (std::isdigit(c)) {
      std::size_t start = pos;
      auto digits = [&] {
        while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) ++pos;
      };
      digits();
      if (pos + 1 < in.size() && in[pos] == '.' && std::isdigit(static_cast<unsigned char>(in[pos + 1]))) {
        ++pos;
        digits();
      }
      out.push_back({Token::Kind::number, std::string(in.substr(start, pos - start)), start});
    } else if (std::isalpha(c) || c == '_') {
      std::size_t start = pos;
      while (pos < in.size() &&
             (std::isalnum(static_cast<unsigned char>(in[pos])) || in[pos] == '_')) {
        ++pos;
      }
      out.push_back({Token::Kind::ident, std::string(in.substr(start, pos - start)), start});
    } else if (std::string_view("+-*/^()").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Kind::op, std::string(1, static_cast<char>(c)), pos});
      ++pos;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", pos);
    }
  }
  out.push_back({Token::Kind::end, "", in.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view in) : tokens_(tokenize(in)) {}

  Expr parse() {
    Expr e = expr();
    if (peek().kind != Token::Kind::end) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_op(char c) const { return peek().kind == Token::Kind::op && peek().text[0] == c; }
  const Token& take() { return tokens_[pos_++]; }

  Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t offset) {
    Expr e{kind, "", 0, offset, {}};
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (at_op('+') || at_op('-')) {
      const Token& t = take();
      Expr rhs = term();
      lhs = binary(t.text[0] == '+' ? Expr::Kind::add : Expr::Kind::sub, std::move(lhs), std::move(rhs), t.offset);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (at_op('*') || at_op('/')) {
      const Token& t = take();
      if (t.text[0] == '*') {
        lhs = binary(Expr::Kind::mul, std::move(lhs), unary(), t.offset);
        continue;
      }
      if (peek().kind != Token::Kind::number) {
        throw ParseError("division is only defined by a numeric literal", peek().offset);
      }
      const Token& d = take();
      if (d.text.find_first_not_of("0.") == std::string::npos) throw ParseError("division by zero", d.offset);
      lhs = binary(Expr::Kind::div, std::move(lhs), Expr{Expr::Kind::number, d.text, 0, d.offset, {}}, t.offset);
    }
    return lhs;
  }

  Expr unary() {
    if (at_op('-') || at_op('+')) {
      const Token& t = take();
      Expr inner = unary();
      if (t.text[0] == '+') return inner;
      Expr e{Expr::Kind::neg, "", 0, t.offset, {}};
      e.args.push_back(std::move(inner));
      return e;
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!at_op('^')) return base;
    const Token& caret = take();
    if (at_op('-')) throw ParseError("negative exponent", peek().offset);
    if (peek().kind != Token::Kind::number || peek().text.find('.') != std::string::npos) {
      throw ParseError("expected a nonnegative integer exponent", peek().offset);
    }
    const Token& t = take();
    if (t.text.size() > 4 || std::stol(t.text) > kMaxDegree) {
      throw ParseError("exponent exceeds degree cap " + std::to_string(kMaxDegree), t.offset);
    }
    Expr e{Expr::Kind::pow, "", static_cast<int>(std::stol(t.text)), caret.offset, {}};
    e.args.push_back(std::move(base));
    return e;
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::number:
        take();
        return Expr{Expr::Kind::number, t.text, 0, t.offset, {}};
      case Token::Kind::ident:
        take();
        return Expr{Expr::Kind::symbol, t.text, 0, t.offset, {}};
      case Token::Kind::op:
        if (t.text[0] == '(') {
          take();
          Expr inner = expr();
          if (!at_op(')')) throw ParseError("expected ')'", peek().offset);
          take();
          return inner;
        }
        throw ParseError("unexpected '" + t.text + "'", t.offset);
      case Token::Kind::end:
        throw ParseError("unexpected end of input", t.offset);
    }
    throw ParseError("unexpected token", t.offset);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::optional<Scalar> scalar_symbol(const std::string& name) {
  if (name == "i") return Scalar::i();
  if (name == "hbar") return Scalar::hbar();
  if (name == "s") return Scalar::s();
  if (name == "r") return Scalar::r();
  return std::nullopt;
}

// Decimal literals are exact: "0.25" is 1/4.
GaussRat number_value(const Expr& e) {
  const auto dot = e.text.find('.');
  if (dot == std::string::npos) return GaussRat(mpq_class(mpz_class(e.text, 10)));
  const std::string frac = e.text.substr(dot + 1);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  mpq_class q(mpz_class(e.text.substr(0, dot) + frac, 10), den);
  q.canonicalize();
  return GaussRat(q);
}

// Evaluates `e` in a ring T whose unit is `one`; `leaf` resolves identifiers
// that are not scalar units.
template <typename T>
T evaluate(const Expr& e, const T& one, const std::function<T(const Expr&)>& leaf) {
  switch (e.kind) {
    case Expr::Kind::number: return Scalar(number_value(e)) * one;
    case Expr::Kind::symbol:
      if (auto s = scalar_symbol(e.text)) return *s * one;
      return leaf(e);
    case Expr::Kind::add: return evaluate(e.args[0], one, leaf) + evaluate(e.args[1], one, leaf);
    case Expr::Kind::sub: return evaluate(e.args[0], one, leaf) - evaluate(e.args[1], one, leaf);
    case Expr::Kind::mul: return evaluate(e.args[0], one, leaf) * evaluate(e.args[1], one, leaf);
    case Expr::Kind::div:
      return Scalar(number_value(e.args[1]).inverse()) * evaluate(e.args[0], one, leaf);
    case Expr::Kind::neg: return Scalar(-1) * evaluate(e.args[0], one, leaf);
    case Expr::Kind::pow: {
      const T base = evaluate(e.args[0], one, leaf);
      T out = one;
      for (int j = 0; j < e.exponent; ++j) out = out * base;
      return out;
    }
  }
  throw ParseError("malformed expression", e.offset);
}

}  // namespace

Expr parse_expr(std::string_view input) { return Parser(input).parse(); }

PhasePoly parse_phase(std::string_view input, VarPair vp) {
  const Expr e = parse_expr(input);
  const VarNames names = var_names(vp);
  const PhasePoly one(vp, Scalar(1));
  return evaluate<PhasePoly>(e, one, [&](const Expr& leaf) {
    if (leaf.text == names.first) return PhasePoly::monomial(vp, 1, 0);
    if (leaf.text == names.second) return PhasePoly::monomial(vp, 0, 1);
    throw ParseError("unknown symbol '" + leaf.text + "'", leaf.offset);
  });
}

OpPoly parse_operator(std::string_view input, const Algebra& alg) {
  const Expr e = parse_expr(input);
  const OpPoly one(alg, Scalar(1));
  return evaluate<OpPoly>(e, one, [&](const Expr& leaf) {
    if (leaf.text == alg.x_name()) return OpPoly::x(alg);
    if (leaf.text == alg.y_name()) return OpPoly::y(alg);
    throw ParseError("unknown symbol '" + leaf.text + "'", leaf.offset);
  });
}

Scalar parse_scalar(std::string_view input) {
  const Expr e = parse_expr(input);
  return evaluate<Scalar>(e, Scalar(1), [](const Expr& leaf) -> Scalar {
    throw ParseError("unknown symbol '" + leaf.text + "'", leaf.offset);
  });
}

}  // namespace wwgm
