#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "wwgm/scalar.hpp"

namespace wwgm {

/// Which pair of phase-space coordinates a polynomial lives on.
///
///   qp      real phase space (q, p)
///   xi_eta  Weyl phase space (xi, eta) of the displacement basis
///   z_zbar  complex Weyl coordinates (z, zbar)
///   Z_Zbar  complex phase space, stored in the normalized coordinates
///           Zb = conj(Z)/sqrt(2), Z = Z/sqrt(2) (length unit a0 = 1), so that
///           Zb^a Z^b quantizes directly to the s-ordered product y_ab.
///
/// The first coordinate of every pair corresponds to the first generator of
/// the operator algebra (q for qp, a^dagger for Z_Zbar).
enum class VarPair { qp, xi_eta, z_zbar, Z_Zbar };

struct VarNames {
  const char* first;
  const char* second;
};

VarNames var_names(VarPair vp);
const char* var_pair_name(VarPair vp);
std::optional<VarPair> parse_var_pair(std::string_view name);

// Throws VarPairMismatch if a != b.
void require_same_pair(VarPair a, VarPair b, const char* op);

/// Commutative polynomial sum c_ab v1^a v2^b with Scalar coefficients.
class PhasePoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Scalar>;

  explicit PhasePoly(VarPair vp = VarPair::qp) : vars_(vp) {}
  PhasePoly(VarPair vp, const Scalar& c);

  static PhasePoly monomial(VarPair vp, int a, int b, const Scalar& c = Scalar(1));

  VarPair var_pair() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int a, int b) const;
  int total_degree() const;

  void add_term(int a, int b, const Scalar& c);

  PhasePoly& operator+=(const PhasePoly& o);
  PhasePoly& operator-=(const PhasePoly& o);
  friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
  friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
  friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);
  friend PhasePoly operator*(const Scalar& c, const PhasePoly& f);
  PhasePoly operator-() const;

  // d^order/dv^order for the first (which = 0) or second (which = 1) variable.
  PhasePoly derivative(int which, int order = 1) const;

  PhasePoly substitute(Unit u, const Scalar& value) const;

  // Applies `fn` to every coefficient, dropping zeros.
  template <typename Fn>
  PhasePoly map_coefficients(Fn&& fn) const {
    PhasePoly out(vars_);
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, fn(c));
    return out;
  }

  friend bool operator==(const PhasePoly& a, const PhasePoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  VarPair vars_;
  Terms terms_;
};

}  // namespace wwgm
