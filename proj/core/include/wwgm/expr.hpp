#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wwgm/op_poly.hpp"
#include "wwgm/phase_poly.hpp"
#include "wwgm/scalar.hpp"

namespace wwgm {

/// Parse tree of the expression grammar
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' unary) | ('/' NUMBER))*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' INTEGER)?
///   atom   := NUMBER | IDENT | '(' expr ')'
///
/// NUMBER is an integer or an exact decimal such as 0.25.
/// Identifiers are resolved only at evaluation time: `i` is the imaginary
/// unit, `hbar`, `s`, `r` are formal units, and the remaining names depend on
/// the target (phase-space coordinates or operator generators).
struct Expr {
  enum class Kind { number, symbol, add, sub, mul, div, neg, pow };

  Kind kind = Kind::number;
  std::string text;      // numeric literal or identifier
  int exponent = 0;      // pow only
  std::size_t offset = 0;
  std::vector<Expr> args;
};

// Throws ParseError with the byte offset of the offending token.
Expr parse_expr(std::string_view input);

/// Commutative polynomial in the coordinates of `vp` (plus i, hbar, s, r).
PhasePoly parse_phase(std::string_view input, VarPair vp = VarPair::qp);

/// Operator polynomial; factor order is significant and the result is
/// rewritten to standard order. Generators are Q, P (qp) or Ad, A (aadag).
OpPoly parse_operator(std::string_view input, const Algebra& alg = Algebra::qp());

/// Coefficient expression in i, hbar, s, r.
Scalar parse_scalar(std::string_view input);

}  // namespace wwgm
