#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wwgm/diff_op.hpp"
#include "wwgm/op_poly.hpp"
#include "wwgm/phase_poly.hpp"
#include "wwgm/scalar.hpp"

namespace wwgm {

using IndexPair = std::pair<int, int>;

/// [t_nm^(r), t_kl^(r)] = sum coeff_ab t_ab^(r)
struct StructureExpansion {
  IndexPair lhs_left;
  IndexPair lhs_right;
  Scalar r;
  std::map<IndexPair, Scalar> terms;

  // Coefficient of t_00 = I.
  Scalar central() const;
};

StructureExpansion structure_expand(int n, int m, int k, int l, const Scalar& r,
                                    const Algebra& alg = Algebra::qp());

/// Precomputed Gamma_ab^(r)(s) for a + b <= max_total. Immutable after
/// construction, so one instance can serve many concurrent checks.
class GammaSet {
 public:
  GammaSet(const Scalar& r, const Scalar& s, int max_total);

  const Scalar& r() const { return r_; }
  const Scalar& s() const { return s_; }
  int max_total() const { return max_total_; }
  // Throws DomainError outside the precomputed range.
  const DiffOp& at(int a, int b) const;

 private:
  Scalar r_;
  Scalar s_;
  int max_total_;
  std::map<IndexPair, DiffOp> gammas_;
};

/// Gamma_nm^(s)(-s) (q^k p^l) against moyal(q^n p^m, q^k p^l, s).
struct IsomorphismReport {
  int n = 0, m = 0, k = 0, l = 0;
  Scalar s;
  PhasePoly generator_side;
  PhasePoly bracket_side;
  PhasePoly difference;
  bool passed = false;
};

IsomorphismReport isomorphism_check(int n, int m, int k, int l, const Scalar& s);
// `gammas` must be built with r = s and s = -s.
IsomorphismReport isomorphism_check(int n, int m, int k, int l, const GammaSet& gammas);

/// C = [Gamma_nm, Gamma_kl] against E = -sum_{(a,b) != (0,0)} coeff_ab Gamma_ab
/// where coeff_ab comes from structure_expand. The dropped identity component
/// is the central charge.
struct CentralExtensionReport {
  int n = 0, m = 0, k = 0, l = 0;
  Scalar r;
  Scalar s;
  DiffOp classical_commutator;
  DiffOp expected;
  Scalar central_charge;
  bool passed = false;
};

CentralExtensionReport central_extension_report(int n, int m, int k, int l, const Scalar& r,
                                                const Scalar& s);
CentralExtensionReport central_extension_report(int n, int m, int k, int l,
                                                const GammaSet& gammas);

enum class GeneratorBasis {
  weyl,    // T_nm^(r)(s) on (xi, eta)
  wigner,  // Gamma_nm^(r)(s) on (q, p)
};

struct GeneratorRow {
  int n = 0;
  int m = 0;
  OpPoly ordered;
  DiffOp generator;
};

/// Rows (t_nm^(r), generator_nm^(r)(s)) for n <= max_n, m <= max_m and, when
/// max_total >= 0, n + m <= max_total. Ordered by total degree, then by
/// descending n.
std::vector<GeneratorRow> generator_table(const Scalar& r, const Scalar& s, int max_n, int max_m,
                                          int max_total = -1,
                                          GeneratorBasis basis = GeneratorBasis::wigner);

}  // namespace wwgm
