#pragma once

#include <compare>
#include <map>
#include <string>

#include "wwgm/phase_poly.hpp"
#include "wwgm/scalar.hpp"

namespace wwgm {

/// Exponents of one canonical term v1^a v2^b d1^c d2^d.
struct DiffKey {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  auto operator<=>(const DiffKey&) const = default;
};

/// Polynomial-coefficient differential operator on a phase-space pair, kept
/// with every multiplication to the left of every derivative.
class DiffOp {
 public:
  using Terms = std::map<DiffKey, Scalar>;

  explicit DiffOp(VarPair vp = VarPair::qp) : vars_(vp) {}
  DiffOp(VarPair vp, const Scalar& c);

  static DiffOp term(VarPair vp, DiffKey key, const Scalar& c = Scalar(1));
  // Multiplication by the first (which = 0) or second coordinate.
  static DiffOp coordinate(VarPair vp, int which);
  static DiffOp partial(VarPair vp, int which);

  VarPair var_pair() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(DiffKey key) const;
  // Highest total derivative order c + d.
  int order() const;

  void add_term(DiffKey key, const Scalar& c);

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  // Composition: (a * b)(f) = a(b(f)).
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator*(const Scalar& c, const DiffOp& op);
  DiffOp operator-() const;

  PhasePoly apply(const PhasePoly& f) const;

  DiffOp substitute(Unit u, const Scalar& value) const;

  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // e.g. "-2*i*hbar*q*dp + s*hbar^2*dp^2"
  std::string to_string() const;

 private:
  VarPair vars_;
  Terms terms_;
};

DiffOp commutator(const DiffOp& a, const DiffOp& b);

}  // namespace wwgm
