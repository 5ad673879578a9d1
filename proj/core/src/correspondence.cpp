#include "wwgm/correspondence.hpp"

#include <map>
#include <string>
#include <utility>

#include "wwgm/errors.hpp"
#include "wwgm/star_moyal.hpp"

namespace wwgm {

OpPoly quantize(const PhasePoly& f, const Scalar& s, const Algebra& alg) {
  require_same_pair(f.var_pair(), alg.phase_pair(), "quantize");
  OpPoly out(alg);
  for (const auto& [k, c] : f.terms()) out += c * s_ordered(k.first, k.second, s, alg);
  return out;
}

PhasePoly symbol(const OpPoly& a, const Scalar& s) {
  const Algebra& alg = a.algebra();
  PhasePoly out(alg.phase_pair());
  for (const auto& [k, c] : a.terms()) {
    // X^n Y^m is the standard-ordered (s = 1) product.
    OrderExpansion e = convert_order(k.first, k.second, Scalar(1), s, alg);
    for (const auto& [j, w] : e.terms) out.add_term(k.first - j, k.second - j, c * w);
  }
  return out;
}

namespace {

Scalar s_minus(const Scalar& s) { return Scalar::rational(1, 2) * Scalar::hbar() * (Scalar(1) - s); }
Scalar s_plus(const Scalar& s) { return Scalar::rational(1, 2) * Scalar::hbar() * (Scalar(1) + s); }

void require_basis_pair(BoppBasis basis, VarPair vars) {
  bool ok = basis == BoppBasis::D ? (vars == VarPair::xi_eta || vars == VarPair::z_zbar)
                                  : (vars == VarPair::qp || vars == VarPair::Z_Zbar);
  if (!ok) {
    throw VarPairMismatch(std::string("Bopp operators of the ") +
                          (basis == BoppBasis::D ? "D" : "Delta") + " basis do not live on " +
                          var_pair_name(vars));
  }
}

}  // namespace

DiffOp bopp(const BoppSpec& spec) {
  require_basis_pair(spec.basis, spec.var_pair);
  const VarPair vp = spec.var_pair;
  const Scalar& s = spec.s;
  const bool left = spec.side == BoppSide::L;
  const bool is_q = spec.which == BoppWhich::Q;
  const int own = is_q ? 0 : 1;    // variable the operator multiplies / differentiates
  const int other = is_q ? 1 : 0;  // its conjugate partner
  const Scalar i = Scalar::i();
  const DiffOp mul_own = DiffOp::coordinate(vp, own);
  const DiffOp mul_other = DiffOp::coordinate(vp, other);
  const DiffOp d_own = DiffOp::partial(vp, own);
  const DiffOp d_other = DiffOp::partial(vp, other);
  const Scalar half_minus = Scalar::rational(1, 2) * (Scalar(1) - s);
  const Scalar half_plus = Scalar::rational(1, 2) * (Scalar(1) + s);

  switch (vp) {
    case VarPair::qp:
      if (is_q) {
        return left ? mul_own - (i * s_minus(s)) * d_other : mul_own + (i * s_plus(s)) * d_other;
      }
      return left ? mul_own + (i * s_plus(s)) * d_other : mul_own - (i * s_minus(s)) * d_other;
    case VarPair::xi_eta:
      if (is_q) {
        return left ? -i * d_own - s_minus(s) * mul_other : -i * d_own + s_plus(s) * mul_other;
      }
      return left ? -i * d_own + s_plus(s) * mul_other : -i * d_own - s_minus(s) * mul_other;
    case VarPair::z_zbar:
      if (is_q) {
        return left ? d_own + half_minus * mul_other : d_own - half_plus * mul_other;
      }
      return left ? d_own - half_plus * mul_other : d_own + half_minus * mul_other;
    case VarPair::Z_Zbar:
      if (is_q) {
        return left ? mul_own + half_minus * d_other : mul_own - half_plus * d_other;
      }
      return left ? mul_own - half_plus * d_other : mul_own + half_minus * d_other;
  }
  throw DomainError("unknown variable pair");
}

PhasePoly bopp_symbol(int n, int m, const Scalar& r, const Scalar& s, BoppSide route) {
  const VarPair vp = VarPair::qp;
  const DiffOp q_op = bopp({BoppBasis::Delta, route, BoppWhich::Q, s, vp});
  const DiffOp p_op = bopp({BoppBasis::Delta, route, BoppWhich::P, s, vp});
  const Scalar order = route == BoppSide::L ? -r : r;
  DiffOp product = s_ordered_pair(q_op, p_op, n, m, order, DiffOp(vp, Scalar(1)));
  return product.apply(PhasePoly(vp, Scalar(1)));
}

DiffOp ordered_bopp_difference(BoppBasis basis, VarPair vars, int n, int m, const Scalar& r,
                               const Scalar& s) {
  require_basis_pair(basis, vars);
  const DiffOp id(vars, Scalar(1));
  auto op = [&](BoppSide side, BoppWhich which) { return bopp({basis, side, which, s, vars}); };
  DiffOp left = s_ordered_pair(op(BoppSide::L, BoppWhich::Q), op(BoppSide::L, BoppWhich::P), n, m,
                               -r, id);
  DiffOp right = s_ordered_pair(op(BoppSide::R, BoppWhich::Q), op(BoppSide::R, BoppWhich::P), n,
                                m, r, id);
  return left - right;
}

DiffOp t_generator(int n, int m, const Scalar& r, const Scalar& s, VarPair vars) {
  return ordered_bopp_difference(BoppBasis::D, vars, n, m, r, s);
}

DiffOp gamma_generator(int n, int m, const Scalar& r, const Scalar& s, VarPair vars) {
  return ordered_bopp_difference(BoppBasis::Delta, vars, n, m, r, s);
}

const char* direction_name(ProductDirection d) {
  switch (d) {
    case ProductDirection::homomorphic: return "homomorphic";
    case ProductDirection::anti_homomorphic: return "anti-homomorphic";
    case ProductDirection::both: return "both";
    case ProductDirection::neither: return "neither";
  }
  return "?";
}

ProductDirection star_direction(const PhasePoly& f, const PhasePoly& g, const Scalar& s) {
  const OpPoly qf = quantize(f, s);
  const OpPoly qg = quantize(g, s);
  const OpPoly lhs = quantize(star(f, g, s), s);
  const bool hom = lhs == qf * qg;
  const bool anti = lhs == qg * qf;
  if (hom && anti) return ProductDirection::both;
  if (hom) return ProductDirection::homomorphic;
  if (anti) return ProductDirection::anti_homomorphic;
  return ProductDirection::neither;
}

}  // namespace wwgm
