#pragma once

#include <map>
#include <string>
#include <utility>

#include "wwgm/phase_poly.hpp"
#include "wwgm/scalar.hpp"

namespace wwgm {

/// How Hermitian conjugation acts on the two generators.
enum class Involution {
  self_adjoint,  // X^dagger = X, Y^dagger = Y   (q, p)
  swap,          // X^dagger = Y                 (a^dagger, a)
};

/// A two-generator algebra with central commutator [X, Y] = lambda * I.
class Algebra {
 public:
  enum class Kind { qp, aadag, custom };

  // X = q, Y = p, lambda = i*hbar.
  static Algebra qp();
  // X = a^dagger, Y = a, lambda = -1.
  static Algebra aadag();
  static Algebra custom(const Scalar& lambda, Involution inv);

  Kind kind() const { return kind_; }
  const Scalar& lambda() const { return lambda_; }
  Involution involution() const { return involution_; }
  // Generator names used by the printer and parser: Q/P, Ad/A or X/Y.
  const char* x_name() const;
  const char* y_name() const;
  // Phase-space pair that quantizes onto this algebra.
  VarPair phase_pair() const;
  const char* name() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.kind_ == b.kind_ && a.involution_ == b.involution_ && a.lambda_ == b.lambda_;
  }

 private:
  Algebra(Kind kind, Scalar lambda, Involution inv)
      : kind_(kind), lambda_(std::move(lambda)), involution_(inv) {}

  Kind kind_;
  Scalar lambda_;
  Involution involution_;
};

/// Noncommutative polynomial sum c_nm X^n Y^m, always in standard order
/// (every X to the left of every Y).
class OpPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Scalar>;

  explicit OpPoly(Algebra alg = Algebra::qp()) : alg_(std::move(alg)) {}
  OpPoly(Algebra alg, const Scalar& c);

  static OpPoly monomial(const Algebra& alg, int n, int m, const Scalar& c = Scalar(1));
  static OpPoly x(const Algebra& alg) { return monomial(alg, 1, 0); }
  static OpPoly y(const Algebra& alg) { return monomial(alg, 0, 1); }

  const Algebra& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int n, int m) const;
  int total_degree() const;

  void add_term(int n, int m, const Scalar& c);

  OpPoly& operator+=(const OpPoly& o);
  OpPoly& operator-=(const OpPoly& o);
  friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
  friend OpPoly operator-(OpPoly a, const OpPoly& b) { return a -= b; }
  friend OpPoly operator*(const OpPoly& a, const OpPoly& b);
  friend OpPoly operator*(const Scalar& c, const OpPoly& a);
  OpPoly operator-() const;

  OpPoly pow(int e) const;

  // Reverses every word and conjugates every coefficient (hbar real). With
  // `real_params` the formal s and r are treated as real; without it they
  // must be absent.
  OpPoly adjoint(bool real_params = false) const;

  // Image under X -> X + dx, Y -> Y + dy.
  OpPoly shifted(const Scalar& dx, const Scalar& dy) const;

  OpPoly substitute(Unit u, const Scalar& value) const;

  friend bool operator==(const OpPoly& a, const OpPoly& b) {
    return a.alg_ == b.alg_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Algebra alg_;
  Terms terms_;
};

OpPoly commutator(const OpPoly& a, const OpPoly& b);

// Throws AlgebraMismatch if the algebras differ.
void require_same_algebra(const Algebra& a, const Algebra& b, const char* op);

}  // namespace wwgm
