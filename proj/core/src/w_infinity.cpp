#include "wwgm/w_infinity.hpp"

#include <algorithm>
#include <string>

#include "wwgm/correspondence.hpp"
#include "wwgm/errors.hpp"
#include "wwgm/ordering.hpp"
#include "wwgm/star_moyal.hpp"

namespace wwgm {

Scalar StructureExpansion::central() const {
  auto it = terms.find({0, 0});
  return it == terms.end() ? Scalar() : it->second;
}

StructureExpansion structure_expand(int n, int m, int k, int l, const Scalar& r,
                                    const Algebra& alg) {
  const OpPoly bracket = commutator(s_ordered(n, m, r, alg), s_ordered(k, l, r, alg));
  // Coordinates in the r-ordered basis are exactly the r-symbol coefficients.
  const PhasePoly coords = symbol(bracket, r);
  StructureExpansion out{{n, m}, {k, l}, r, {}};
  for (const auto& [key, c] : coords.terms()) out.terms.emplace(key, c);
  return out;
}

GammaSet::GammaSet(const Scalar& r, const Scalar& s, int max_total)
    : r_(r), s_(s), max_total_(max_total) {
  for (int total = 0; total <= max_total; ++total) {
    for (int a = 0; a <= total; ++a) gammas_.emplace(IndexPair{a, total - a}, gamma_generator(a, total - a, r, s));
  }
}

const DiffOp& GammaSet::at(int a, int b) const {
  auto it = gammas_.find({a, b});
  if (it == gammas_.end()) {
    throw DomainError("generator (" + std::to_string(a) + "," + std::to_string(b) +
                      ") outside precomputed range " + std::to_string(max_total_));
  }
  return it->second;
}

IsomorphismReport isomorphism_check(int n, int m, int k, int l, const GammaSet& gammas) {
  if (gammas.s() != -gammas.r()) {
    throw DomainError("isomorphism_check needs generators built with s = -r, got r = " +
                      gammas.r().to_string() + ", s = " + gammas.s().to_string());
  }
  IsomorphismReport out;
  out.n = n;
  out.m = m;
  out.k = k;
  out.l = l;
  out.s = gammas.r();
  const PhasePoly target = PhasePoly::monomial(VarPair::qp, k, l);
  out.generator_side = gammas.at(n, m).apply(target);
  out.bracket_side = moyal(PhasePoly::monomial(VarPair::qp, n, m), target, out.s);
  out.difference = out.generator_side - out.bracket_side;
  out.passed = out.difference.is_zero();
  return out;
}

IsomorphismReport isomorphism_check(int n, int m, int k, int l, const Scalar& s) {
  // Gamma_nm^(s)(-s) pairs with the bracket built from star_(-s), i.e. star(., ., s).
  const Scalar minus_s = -s;
  IsomorphismReport out;
  out.n = n;
  out.m = m;
  out.k = k;
  out.l = l;
  out.s = s;
  const PhasePoly target = PhasePoly::monomial(VarPair::qp, k, l);
  out.generator_side = gamma_generator(n, m, s, minus_s).apply(target);
  out.bracket_side = moyal(PhasePoly::monomial(VarPair::qp, n, m), target, s);
  out.difference = out.generator_side - out.bracket_side;
  out.passed = out.difference.is_zero();
  return out;
}

namespace {

CentralExtensionReport central_extension_impl(int n, int m, int k, int l, const Scalar& r,
                                              const Scalar& s, const DiffOp& g_nm,
                                              const DiffOp& g_kl, auto&& gamma_at) {
  CentralExtensionReport out;
  out.n = n;
  out.m = m;
  out.k = k;
  out.l = l;
  out.r = r;
  out.s = s;
  out.classical_commutator = commutator(g_nm, g_kl);
  const StructureExpansion e = structure_expand(n, m, k, l, r);
  out.expected = DiffOp(VarPair::qp);
  for (const auto& [key, c] : e.terms) {
    if (key == IndexPair{0, 0}) continue;
    out.expected -= c * gamma_at(key.first, key.second);
  }
  out.central_charge = e.central();
  out.passed = out.classical_commutator == out.expected;
  return out;
}

}  // namespace

CentralExtensionReport central_extension_report(int n, int m, int k, int l, const Scalar& r,
                                                const Scalar& s) {
  return central_extension_impl(n, m, k, l, r, s, gamma_generator(n, m, r, s),
                                gamma_generator(k, l, r, s),
                                [&](int a, int b) { return gamma_generator(a, b, r, s); });
}

CentralExtensionReport central_extension_report(int n, int m, int k, int l,
                                                const GammaSet& gammas) {
  return central_extension_impl(n, m, k, l, gammas.r(), gammas.s(), gammas.at(n, m),
                                gammas.at(k, l),
                                [&](int a, int b) -> const DiffOp& { return gammas.at(a, b); });
}

std::vector<GeneratorRow> generator_table(const Scalar& r, const Scalar& s, int max_n, int max_m,
                                          int max_total, GeneratorBasis basis) {
  if (max_n < 0 || max_m < 0) throw DomainError("generator_table: negative bound");
  std::vector<GeneratorRow> rows;
  const int top = max_total >= 0 ? std::min(max_total, max_n + max_m) : max_n + max_m;
  for (int total = 0; total <= top; ++total) {
    for (int n = std::min(total, max_n); n >= 0 && total - n <= max_m; --n) {
      const int m = total - n;
      DiffOp gen = basis == GeneratorBasis::wigner ? gamma_generator(n, m, r, s)
                                                   : t_generator(n, m, r, s);
      rows.push_back({n, m, s_ordered(n, m, r), std::move(gen)});
    }
  }
  return rows;
}

}  // namespace wwgm
