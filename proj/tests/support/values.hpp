#pragma once

#include "wwgm/diff_op.hpp"
#include "wwgm/op_poly.hpp"
#include "wwgm/phase_poly.hpp"
#include "wwgm/scalar.hpp"

namespace tv {

using namespace wwgm;

inline Scalar ih() { return Scalar::i() * Scalar::hbar(); }
inline Scalar half() { return Scalar::rational(1, 2); }

inline OpPoly Q() { return OpPoly::x(Algebra::qp()); }
inline OpPoly P() { return OpPoly::y(Algebra::qp()); }
inline OpPoly I(const Algebra& alg = Algebra::qp()) { return OpPoly(alg, Scalar(1)); }

inline PhasePoly mono(int a, int b, const Scalar& c = Scalar(1), VarPair vp = VarPair::qp) {
  return PhasePoly::monomial(vp, a, b, c);
}
inline PhasePoly cst(const Scalar& c, VarPair vp = VarPair::qp) { return PhasePoly(vp, c); }

inline DiffOp dterm(int a, int b, int c, int d, const Scalar& k = Scalar(1),
                    VarPair vp = VarPair::qp) {
  return DiffOp::term(vp, DiffKey{a, b, c, d}, k);
}

}  // namespace tv
