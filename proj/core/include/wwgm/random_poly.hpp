#pragma once

#include <random>

#include "wwgm/diff_op.hpp"
#include "wwgm/op_poly.hpp"
#include "wwgm/phase_poly.hpp"
#include "wwgm/scalar.hpp"

namespace wwgm::random {

/// Small Gaussian rational with numerators in [-3, 3] and denominators in [1, 3].
template <typename Rng>
GaussRat gauss_rat(Rng& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  auto draw = [&] {
    const long n = num(rng);
    mpq_class q(n, den(rng));
    q.canonicalize();
    return q;
  };
  mpq_class re = draw();
  mpq_class im = draw();
  return GaussRat(re, im);
}

/// Random Scalar with up to `terms` terms and unit powers up to 2; symbolic
/// s and r appear only when requested.
template <typename Rng>
Scalar scalar(Rng& rng, bool with_s = false, bool with_r = false, int terms = 2) {
  std::uniform_int_distribution<int> pow(0, 2);
  Scalar out;
  for (int t = 0; t < terms; ++t) {
    UnitPowers up;
    up.set(Unit::hbar, pow(rng));
    if (with_s) up.set(Unit::s, pow(rng));
    if (with_r) up.set(Unit::r, pow(rng));
    out += Scalar::term(up, gauss_rat(rng));
  }
  return out;
}

template <typename Rng>
PhasePoly phase_poly(Rng& rng, int max_degree, VarPair vp = VarPair::qp, bool with_s = false,
                     int terms = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  PhasePoly out(vp);
  for (int t = 0; t < terms; ++t) {
    const int a = deg(rng);
    std::uniform_int_distribution<int> rest(0, max_degree - a);
    out += PhasePoly::monomial(vp, a, rest(rng), scalar(rng, with_s, false, 1));
  }
  return out;
}

template <typename Rng>
OpPoly op_poly(Rng& rng, int max_degree, const Algebra& alg = Algebra::qp(), bool with_s = false,
               int terms = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  OpPoly out(alg);
  for (int t = 0; t < terms; ++t) {
    const int n = deg(rng);
    std::uniform_int_distribution<int> rest(0, max_degree - n);
    out += OpPoly::monomial(alg, n, rest(rng), scalar(rng, with_s, false, 1));
  }
  return out;
}

/// Total multiplication degree and total derivative order each at most max_degree.
template <typename Rng>
DiffOp diff_op(Rng& rng, int max_degree, VarPair vp = VarPair::qp, int terms = 3) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  DiffOp out(vp);
  for (int t = 0; t < terms; ++t) {
    const int a = deg(rng);
    const int b = std::uniform_int_distribution<int>(0, max_degree - a)(rng);
    const int c = deg(rng);
    const int d = std::uniform_int_distribution<int>(0, max_degree - c)(rng);
    out += DiffOp::term(vp, DiffKey{a, b, c, d}, scalar(rng, false, false, 1));
  }
  return out;
}

}  // namespace wwgm::random
