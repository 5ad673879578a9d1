#include <gtest/gtest.h>

#include <random>

#include "support/values.hpp"
#include "wwgm/errors.hpp"
#include "wwgm/expr.hpp"
#include "wwgm/random_poly.hpp"

using namespace tv;

namespace {

std::size_t error_offset(std::string_view input) {
  try {
    (void)parse_phase(input);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no error for \"" << input << "\"";
  return std::string_view::npos;
}

}  // namespace

TEST(Parse, PhaseExample) {
  EXPECT_EQ(parse_phase("q^2*p - i*hbar*q"), mono(2, 1) + mono(1, 0, -ih()));
}

TEST(Parse, OperatorExample) {
  EXPECT_EQ(parse_operator("P*Q"), Q() * P() - ih() * I());
  EXPECT_EQ(parse_operator("A*Ad", Algebra::aadag()),
            OpPoly::x(Algebra::aadag()) * OpPoly::y(Algebra::aadag()) + I(Algebra::aadag()));
}

TEST(Parse, Arithmetic) {
  EXPECT_EQ(parse_phase("(q + p)^2"), mono(2, 0) + mono(1, 1, Scalar(2)) + mono(0, 2));
  EXPECT_EQ(parse_phase("-q/2 + 0.25*p"), mono(1, 0, -half()) + mono(0, 1, Scalar::rational(1, 4)));
  EXPECT_EQ(parse_scalar("(1 - s)*hbar/2"), half() * Scalar::hbar() * (Scalar(1) - Scalar::s()));
  EXPECT_EQ(parse_phase("xi*eta^2", VarPair::xi_eta), mono(1, 2, Scalar(1), VarPair::xi_eta));
}

TEST(Parse, Errors) {
  EXPECT_EQ(error_offset("q^-1"), 2u);
  EXPECT_EQ(error_offset("q + * p"), 4u);
  EXPECT_EQ(error_offset("x + q"), 0u);
  EXPECT_EQ(error_offset("(q + p"), 6u);
  EXPECT_EQ(error_offset("q^1.5"), 2u);
  EXPECT_THROW((void)parse_phase("q/p"), ParseError);
  EXPECT_THROW((void)parse_operator("q*P"), ParseError);
}

TEST(Parse, ExponentCap) {
  EXPECT_NO_THROW((void)parse_phase("q^64"));
  EXPECT_THROW((void)parse_phase("q^65"), Error);
}

TEST(Parse, PrettyPrintRoundTrips) {
  std::mt19937 rng(43);
  for (int t = 0; t < 100; ++t) {
    const PhasePoly f = random::phase_poly(rng, 4, VarPair::qp, true);
    EXPECT_EQ(parse_phase(f.to_string()), f) << f.to_string();
    const OpPoly a = random::op_poly(rng, 4, Algebra::qp(), true);
    EXPECT_EQ(parse_operator(a.to_string()), a) << a.to_string();
    const OpPoly b = random::op_poly(rng, 3, Algebra::aadag());
    EXPECT_EQ(parse_operator(b.to_string(), Algebra::aadag()), b) << b.to_string();
    const Scalar c = random::scalar(rng, true, true, 3);
    EXPECT_EQ(parse_scalar(c.to_string()), c) << c.to_string();
  }
}
