#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>

#include "wwgm/op_poly.hpp"
#include "wwgm/ordering.hpp"

namespace wwgm::fock {

using Matrix = Eigen::MatrixXcd;
using cplx = std::complex<double>;

/// Truncated Fock space of dimension n. Comparisons look only at the top-left
/// rank() x rank() block, where products of truncated ladder matrices are
/// still exact. a0 = 1.
struct Config {
  int n = 64;
  double hbar = 1.0;
  int proj_rank = -1;  // -1 selects n - 8
  int exp_dim = -1;    // space the exponentials are taken in; -1 selects 2n + 32
  double tol = 1e-10;               // algebraic identities
  double displacement_tol = 1e-8;   // conjugation by exponentials
  double fd_tol = 1e-6;             // finite-difference identities

  int rank() const { return proj_rank < 0 ? n - 8 : proj_rank; }
  int exponential_dim() const { return exp_dim < 0 ? 2 * n + 32 : exp_dim; }
  // Throws DomainError for n < 4, rank() outside [1, n) or hbar <= 0.
  void validate() const;
};

struct Generators {
  Matrix a;
  Matrix adag;
  Matrix q;
  Matrix p;
};

/// a[k-1, k] = sqrt(k); q = sqrt(hbar/2)(a + a^dagger), p = -i sqrt(hbar/2)(a - a^dagger).
Generators build_generators(const Config& cfg);

/// Values substituted for the formal ordering parameters.
struct ParamValues {
  std::optional<cplx> s;
  std::optional<cplx> r;
};

/// Matrix of a standard-order polynomial; hbar is taken from cfg. Throws
/// SymbolicScalar if s or r is present without a value.
Matrix matrix_of(const OpPoly& a, const Config& cfg, const ParamValues& params = {});

double projected_max_abs(const Matrix& m, int rank);
// max |lhs - rhs| / max |rhs| over the projected block (absolute when rhs vanishes there).
double projected_deviation(const Matrix& lhs, const Matrix& rhs, int rank);

/// exp(-i hbar s xi eta / 2) exp(i (xi q + eta p)); s = 0 gives the plain
/// displacement operator. The exponential is taken on the enlarged space of
/// dimension cfg.exponential_dim() and cropped to n x n, so the returned
/// entries are free of truncation error from the exponent.
Matrix displacement(double xi, double eta, cplx s, const Config& cfg);

/// The s-ordered product summed directly as matrix words (no symbolic
/// normal ordering).
Matrix ordered_word_matrix(int n, int m, cplx s, OrderingRoute route, const Config& cfg);

struct DisplacementReport {
  double xi = 0;
  double eta = 0;
  double deviation = 0;
  double tol = 0;
  bool passed = false;
};

/// D f D^-1 = f(q + hbar eta, p - hbar xi), checked in the intertwining form
/// D f = f' D: on the projected block it involves only entries of D within
/// rank() + deg f, whereas D f D^-1 there depends on states beyond n. The
/// shift is done exactly on the polynomial (xi, eta converted to exact
/// rationals). qp algebra only.
DisplacementReport displacement_check(double xi, double eta, const OpPoly& f, const Config& cfg);

struct DerivativeReport {
  int n = 0;
  int m = 0;
  double h = 0;
  // d/dxi D(s) against (i/2)[(1+s) q D + (1-s) D q]
  double first_order_error = 0;
  double first_order_error_half = 0;  // same at h/2
  // T_nm^(r)(s) D(s) against [t_nm^(r), D(s)]
  double generator_error = 0;
  double generator_error_half = 0;
  // Highest derivative order in T_nm^(r)(s); 0 means no finite differences.
  int generator_derivative_order = 0;
  double tol = 0;
  bool passed = false;

  double first_order_ratio() const { return first_order_error / first_order_error_half; }
  double generator_ratio() const { return generator_error / generator_error_half; }
};

/// Finite-difference check of the derivative identities of D(s) at
/// (xi0, eta0). Derivatives of up to fourth order use central O(h^2) stencils.
DerivativeReport derivative_check(cplx s, double xi0, double eta0, double h, int n, int m, cplx r,
                                  const Config& cfg);

}  // namespace wwgm::fock
