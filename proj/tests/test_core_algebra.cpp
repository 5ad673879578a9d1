#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "support/values.hpp"
#include "wwgm/errors.hpp"
#include "wwgm/random_poly.hpp"

using namespace tv;

TEST(Scalar, RingAxiomsOnRandomValues) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Scalar a = random::scalar(rng, true, true, 3);
    const Scalar b = random::scalar(rng, true, true, 3);
    const Scalar c = random::scalar(rng, true, false, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Scalar, PowAndSubstitute) {
  const Scalar x = Scalar(1) + Scalar::s();
  EXPECT_EQ(x.pow(2), Scalar(1) + Scalar(2) * Scalar::s() + Scalar::s() * Scalar::s());
  EXPECT_EQ(x.pow(3).substitute(Unit::s, Scalar(1)), Scalar(8));
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
}

TEST(Scalar, ConjugationNeedsRealParameters) {
  EXPECT_EQ(ih().conj(), -ih());
  EXPECT_THROW((void)(Scalar::s() * Scalar::i()).conj(), ConjugationUndefined);
  EXPECT_EQ((Scalar::s() * Scalar::i()).conj(true), -(Scalar::s() * Scalar::i()));
}

TEST(Scalar, DividedByHbar) {
  EXPECT_EQ((ih() * Scalar::s()).divided_by_hbar(), Scalar::i() * Scalar::s());
  EXPECT_THROW((void)Scalar(2).divided_by_hbar(), DomainError);
}

TEST(Scalar, DegreeCap) {
  EXPECT_NO_THROW((void)Scalar::hbar().pow(kMaxDegree));
  EXPECT_THROW((void)Scalar::hbar().pow(kMaxDegree + 1), DegreeOverflow);
}

TEST(OpPoly, DefiningRelation) {
  const Algebra alg = Algebra::custom(Scalar::rational(3, 7) * Scalar::s(), Involution::self_adjoint);
  const OpPoly x = OpPoly::x(alg), y = OpPoly::y(alg);
  EXPECT_EQ(y * x, x * y - OpPoly(alg, alg.lambda()));
  EXPECT_EQ(x * x, OpPoly::monomial(alg, 2, 0));
}

TEST(OpPoly, PTimesQSquared) {
  EXPECT_EQ(P() * Q() * Q(), OpPoly::monomial(Algebra::qp(), 2, 1) - Scalar(2) * ih() * Q());
}

TEST(OpPoly, ProductMatchesWordRewriting) {
  std::mt19937 rng(3);
  for (const Algebra& alg : {Algebra::qp(), Algebra::aadag()}) {
    for (int t = 0; t < 60; ++t) {
      const OpPoly a = random::op_poly(rng, 3, alg, true);
      const OpPoly b = random::op_poly(rng, 3, alg, true);
      EXPECT_EQ(a * b, oracle::multiply(a, b)) << a.to_string() << " * " << b.to_string();
    }
  }
}

TEST(OpPoly, Associativity) {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    const OpPoly a = random::op_poly(rng, 3), b = random::op_poly(rng, 3), c = random::op_poly(rng, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(OpPoly, AdjointExamples) {
  EXPECT_EQ((Q() * P()).adjoint(), Q() * P() - OpPoly(Algebra::qp(), ih()));
  EXPECT_EQ(Q().adjoint(), Q());
  EXPECT_EQ((Scalar::i() * Q()).adjoint(), -(Scalar::i() * Q()));
  const Algebra b = Algebra::aadag();
  EXPECT_EQ(OpPoly::x(b).adjoint(), OpPoly::y(b));
}

TEST(OpPoly, AdjointIsAnInvolutionAndReversesProducts) {
  std::mt19937 rng(8);
  for (const Algebra& alg : {Algebra::qp(), Algebra::aadag()}) {
    for (int t = 0; t < 40; ++t) {
      const OpPoly a = random::op_poly(rng, 3, alg), b = random::op_poly(rng, 3, alg);
      EXPECT_EQ(a.adjoint().adjoint(), a);
      EXPECT_EQ((a * b).adjoint(), b.adjoint() * a.adjoint());
    }
  }
}

TEST(OpPoly, MixedAlgebrasAreRejected) {
  EXPECT_THROW((void)(Q() * OpPoly::x(Algebra::aadag())), AlgebraMismatch);
  EXPECT_THROW((void)(Q() + OpPoly::x(Algebra::aadag())), AlgebraMismatch);
}

TEST(OpPoly, ShiftMatchesSubstitution) {
  // (Q + 1)(P - 2) expanded by hand
  const OpPoly f = Q() * P();
  const OpPoly expected = Q() * P() - Scalar(2) * Q() + P() - Scalar(2) * I();
  EXPECT_EQ(f.shifted(Scalar(1), Scalar(-2)), expected);
}

TEST(DiffOp, ApplyExamples) {
  EXPECT_EQ(DiffOp::partial(VarPair::qp, 0).apply(mono(2, 0)), mono(1, 0, Scalar(2)));
  EXPECT_EQ(dterm(1, 0, 0, 1).apply(mono(0, 2)), mono(1, 1, Scalar(2)));
  const DiffOp g20 = dterm(1, 0, 0, 1, Scalar(-2) * ih()) +
                     dterm(0, 0, 0, 2, Scalar::s() * Scalar::hbar() * Scalar::hbar());
  EXPECT_EQ(g20.apply(mono(0, 2)),
            mono(1, 1, Scalar(-4) * ih()) + cst(Scalar(2) * Scalar::s() * Scalar::hbar().pow(2)));
}

TEST(DiffOp, CommutatorExamples) {
  const DiffOp dq = DiffOp::partial(VarPair::qp, 0), q = DiffOp::coordinate(VarPair::qp, 0);
  EXPECT_EQ(commutator(dq, q), DiffOp(VarPair::qp, Scalar(1)));
  EXPECT_TRUE(commutator(dterm(1, 0, 1, 0), dterm(0, 1, 0, 1)).is_zero());
}

TEST(DiffOp, CompositionActsAsSequentialApplication) {
  std::mt19937 rng(13);
  for (int t = 0; t < 60; ++t) {
    const DiffOp a = random::diff_op(rng, 2), b = random::diff_op(rng, 2);
    const PhasePoly f = random::phase_poly(rng, 4);
    EXPECT_EQ((a * b).apply(f), a.apply(b.apply(f)));
  }
}

TEST(DiffOp, LeibnizOnProducts) {
  std::mt19937 rng(17);
  const DiffOp dp = DiffOp::partial(VarPair::qp, 1);
  for (int t = 0; t < 40; ++t) {
    const PhasePoly f = random::phase_poly(rng, 3), g = random::phase_poly(rng, 3);
    EXPECT_EQ(dp.apply(f * g), dp.apply(f) * g + f * dp.apply(g));
  }
}

TEST(PhasePoly, ProductMatchesOracle) {
  std::mt19937 rng(19);
  for (int t = 0; t < 60; ++t) {
    const PhasePoly f = random::phase_poly(rng, 4, VarPair::qp, true);
    const PhasePoly g = random::phase_poly(rng, 4, VarPair::qp, true);
    EXPECT_EQ(f * g, oracle::multiply(f, g));
  }
}

TEST(PhasePoly, VarPairsDoNotMix) {
  EXPECT_THROW((void)(mono(1, 0) + mono(1, 0, Scalar(1), VarPair::xi_eta)), VarPairMismatch);
}
