#include "wwgm/star_moyal.hpp"

#include <algorithm>
#include <string>

#include "wwgm/combinatorics.hpp"
#include "wwgm/errors.hpp"

namespace wwgm {

namespace {

constexpr int kQ = 0;
constexpr int kP = 1;

void require_qp(const PhasePoly& f, const PhasePoly& g, const char* op) {
  require_same_pair(f.var_pair(), g.var_pair(), op);
  require_same_pair(f.var_pair(), VarPair::qp, op);
}

int degree_in(const PhasePoly& f, int which) {
  int d = 0;
  for (const auto& [k, c] : f.terms()) d = std::max(d, which == kQ ? k.first : k.second);
  return d;
}

PhasePoly d(const PhasePoly& f, int dq, int dp) { return f.derivative(kQ, dq).derivative(kP, dp); }

Scalar inverse_factorial(int n) { return Scalar(GaussRat(mpq_class(mpz_class(1), factorial(n)))); }

}  // namespace

PhasePoly poisson(const PhasePoly& f, const PhasePoly& g, PoissonConvention convention) {
  require_same_pair(f.var_pair(), g.var_pair(), "poisson");
  PhasePoly pb = d(f, 0, 1) * d(g, 1, 0) - d(f, 1, 0) * d(g, 0, 1);
  return convention == PoissonConvention::paper ? pb : -pb;
}

PhasePoly star(const PhasePoly& f, const PhasePoly& g, const Scalar& s) {
  require_qp(f, g, "star");
  const Scalar half_ih = Scalar::rational(1, 2) * Scalar::i() * Scalar::hbar();
  const Scalar a = half_ih * (Scalar(1) - s);
  const Scalar b = -half_ih * (Scalar(1) + s);
  const int jmax = std::min(degree_in(f, kP), degree_in(g, kQ));
  const int kmax = std::min(degree_in(f, kQ), degree_in(g, kP));
  PhasePoly out(VarPair::qp);
  Scalar a_pow(1);
  for (int j = 0; j <= jmax; ++j) {
    Scalar b_pow(1);
    for (int k = 0; k <= kmax; ++k) {
      Scalar w = a_pow * b_pow * inverse_factorial(j) * inverse_factorial(k);
      out += w * (d(f, k, j) * d(g, j, k));
      b_pow *= b;
    }
    a_pow *= a;
  }
  return out;
}

PhasePoly moyal(const PhasePoly& f, const PhasePoly& g, const Scalar& s) {
  return star(f, g, s) - star(g, f, s);
}

PhasePoly moyal_series(const PhasePoly& f, const PhasePoly& g, const Scalar& s, int max_order) {
  require_qp(f, g, "moyal_series");
  if (max_order < 0 || max_order > kMaxSeriesOrder) {
    throw DomainError("moyal_series: order " + std::to_string(max_order) + " outside 0.." +
                      std::to_string(kMaxSeriesOrder));
  }
  const Scalar ih = Scalar::i() * Scalar::hbar();
  const Scalar half_ih = Scalar::rational(1, 2) * ih;
  PhasePoly out(VarPair::qp);
  if (max_order >= 1) out += ih * poisson(f, g, PoissonConvention::paper);
  if (max_order >= 2) {
    Scalar w = Scalar::rational(1, 2) * half_ih.pow(2) * Scalar(4) * s;
    out += w * (d(f, 2, 0) * d(g, 0, 2) - d(g, 2, 0) * d(f, 0, 2));
  }
  if (max_order >= 3) {
    const Scalar one_minus = Scalar(1) - s;
    const Scalar one_plus = Scalar(1) + s;
    const Scalar cubes = one_minus.pow(3) + one_plus.pow(3);
    const Scalar mixed = Scalar(6) * (Scalar(1) - s * s);
    auto brace = [&](const PhasePoly& u, const PhasePoly& v) {
      return cubes * (d(u, 0, 3) * d(v, 3, 0)) - mixed * (d(u, 1, 2) * d(v, 2, 1));
    };
    Scalar w = Scalar::rational(1, 6) * half_ih.pow(3);
    out += w * (brace(f, g) - brace(g, f));
  }
  return out;
}

std::vector<PhasePoly> evolve(const PhasePoly& hamiltonian, const PhasePoly& f, const Scalar& s,
                              int order) {
  if (order < 0) throw DomainError("evolve: negative order");
  std::vector<PhasePoly> coeffs{f};
  PhasePoly current = f;
  const Scalar minus_i = -Scalar::i();
  for (int k = 1; k <= order; ++k) {
    PhasePoly bracket = moyal(hamiltonian, current, s);
    // (i hbar)^-1 applied coefficientwise; exact because every term carries hbar.
    current = bracket.map_coefficients(
        [&](const Scalar& c) { return minus_i * c.divided_by_hbar(); });
    coeffs.push_back(inverse_factorial(k) * current);
  }
  return coeffs;
}

}  // namespace wwgm
