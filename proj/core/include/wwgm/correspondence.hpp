#pragma once

#include "wwgm/diff_op.hpp"
#include "wwgm/op_poly.hpp"
#include "wwgm/ordering.hpp"
#include "wwgm/phase_poly.hpp"
#include "wwgm/scalar.hpp"

namespace wwgm {

// Symbol bookkeeping
// ------------------
// symbol(A, s) expands A in the s-ordered basis and replaces t_ab^(s) by
// q^a p^b, so quantize(., s) and symbol(., s) are mutually inverse. In trace
// language, symbol(A, s) is Tr[A Delta(-s)]: the function obtained by tracing
// against the basis Delta(s) is symbol(A, -s). This is the only place where
// the sign flip lives; bopp_symbol(n, m, r, s) therefore equals
// symbol(t_nm^(r), -s).

/// Linear extension of q^a p^b -> t_ab^(s) (or Zb^a Z^b -> y_ab^(s) for the
/// a^dagger, a algebra; see VarPair::Z_Zbar for the coordinate scaling).
OpPoly quantize(const PhasePoly& f, const Scalar& s, const Algebra& alg = Algebra::qp());

/// Inverse of quantize at the same s.
PhasePoly symbol(const OpPoly& a, const Scalar& s);

enum class BoppBasis { D, Delta };
enum class BoppSide { L, R };
enum class BoppWhich { Q, P };

/// One s-parametrized Bopp operator. The D basis lives on xi_eta or z_zbar,
/// the Delta basis on qp or Z_Zbar.
struct BoppSpec {
  BoppBasis basis = BoppBasis::Delta;
  BoppSide side = BoppSide::L;
  BoppWhich which = BoppWhich::Q;
  Scalar s;
  VarPair var_pair = VarPair::qp;
};

/// With s- = hbar(1-s)/2, s+ = hbar(1+s)/2:
///   Delta, qp:     Q_L = q - i s- dp      Q_R = q + i s+ dp
///                  P_L = p + i s+ dq      P_R = p - i s- dq
///   D, xi_eta:     Q_L = -i dxi - s- eta  Q_R = -i dxi + s+ eta
///                  P_L = -i deta + s+ xi  P_R = -i deta - s- xi
///   D, z_zbar:     Q_L = dz + (1-s)/2 zbar   Q_R = dz - (1+s)/2 zbar
///                  P_L = dzbar - (1+s)/2 z   P_R = dzbar + (1-s)/2 z
///   Delta, Z_Zbar: Q_L = Zb + (1-s)/2 dZ     Q_R = Zb - (1+s)/2 dZ
///                  P_L = Z - (1+s)/2 dZb     P_R = Z + (1-s)/2 dZb
DiffOp bopp(const BoppSpec& spec);

/// {Q_L^n P_L^m}_(-r) applied to 1 (route L) or {Q_R^n P_R^m}_(r) applied to 1
/// (route R), with Delta-basis Bopp operators on (q, p). Both routes agree.
PhasePoly bopp_symbol(int n, int m, const Scalar& r, const Scalar& s,
                      BoppSide route = BoppSide::L);

/// {Q_L^n P_L^m}_(-r) - {Q_R^n P_R^m}_(r) for the Bopp operators of `basis`
/// on `vars`.
DiffOp ordered_bopp_difference(BoppBasis basis, VarPair vars, int n, int m, const Scalar& r,
                               const Scalar& s);

/// Weyl-basis generator T_nm^(r)(s) on (xi, eta) (or (z, zbar)).
DiffOp t_generator(int n, int m, const Scalar& r, const Scalar& s,
                   VarPair vars = VarPair::xi_eta);

/// Wigner-basis generator Gamma_nm^(r)(s) on (q, p) (or Z_Zbar).
DiffOp gamma_generator(int n, int m, const Scalar& r, const Scalar& s,
                       VarPair vars = VarPair::qp);

/// Relation between star products and operator products of quantized symbols.
enum class ProductDirection {
  homomorphic,       // quantize(f * g) == quantize(f) quantize(g)
  anti_homomorphic,  // quantize(f * g) == quantize(g) quantize(f)
  both,              // f and g quantize to commuting operators
  neither,
};

const char* direction_name(ProductDirection d);

/// Compares quantize(star(f, g, s), s) with the two operator products.
ProductDirection star_direction(const PhasePoly& f, const PhasePoly& g, const Scalar& s);

}  // namespace wwgm
