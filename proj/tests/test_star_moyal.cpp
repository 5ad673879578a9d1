#include <gtest/gtest.h>

#include <random>
#include <utility>
#include <vector>

#include "support/oracles.hpp"
#include "support/values.hpp"
#include "wwgm/errors.hpp"
#include "wwgm/random_poly.hpp"
#include "wwgm/star_moyal.hpp"

using namespace tv;

namespace {

using Pair = std::pair<PhasePoly, PhasePoly>;

// exp(L) applied to f (x) g, with
// L = (i hbar / 2)[(1-s) dp (x) dq - (1+s) dq (x) dp], summed by iterating L.
PhasePoly star_by_iteration(const PhasePoly& f, const PhasePoly& g, const Scalar& s) {
  const Scalar a = half() * ih() * (Scalar(1) - s);
  const Scalar b = -(half() * ih() * (Scalar(1) + s));
  std::vector<Pair> level{{f, g}};
  PhasePoly out = oracle::multiply(f, g);
  Scalar inv_fact(1);
  for (int k = 1; !level.empty(); ++k) {
    std::vector<Pair> next;
    for (const auto& [u, v] : level) {
      PhasePoly u1 = a * u.derivative(1), v1 = v.derivative(0);
      PhasePoly u2 = b * u.derivative(0), v2 = v.derivative(1);
      if (!u1.is_zero() && !v1.is_zero()) next.emplace_back(u1, v1);
      if (!u2.is_zero() && !v2.is_zero()) next.emplace_back(u2, v2);
    }
    inv_fact = inv_fact * Scalar::rational(1, k);
    for (const auto& [u, v] : next) out += inv_fact * oracle::multiply(u, v);
    level = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Poisson, Conventions) {
  const PhasePoly q = mono(1, 0), p = mono(0, 1);
  EXPECT_EQ(poisson(q, p), cst(Scalar(-1)));
  EXPECT_EQ(poisson(q, p, PoissonConvention::standard), cst(Scalar(1)));
  EXPECT_EQ(poisson(mono(2, 0), mono(0, 2)), mono(1, 1, Scalar(-4)));
}

TEST(Star, Examples) {
  const PhasePoly q = mono(1, 0), p = mono(0, 1);
  EXPECT_EQ(star(q, p, Scalar(0)), mono(1, 1) - cst(half() * ih()));
  EXPECT_EQ(star(q, p, Scalar::s()), mono(1, 1) - cst(half() * ih() * (Scalar(1) + Scalar::s())));
  const PhasePoly c = cst(Scalar::rational(2, 3) * Scalar::s());
  const PhasePoly g = mono(2, 3) + mono(0, 1, Scalar::i());
  EXPECT_EQ(star(c, g, Scalar::s()), c * g);
  EXPECT_EQ(star(g, c, Scalar::s()), c * g);
}

TEST(Star, MatchesIteratedBidifferentialOracle) {
  std::mt19937 rng(23);
  for (int t = 0; t < 60; ++t) {
    const PhasePoly f = random::phase_poly(rng, 3), g = random::phase_poly(rng, 3);
    EXPECT_EQ(star(f, g, Scalar::s()), star_by_iteration(f, g, Scalar::s()))
        << f.to_string() << " ; " << g.to_string();
  }
}

TEST(Star, AssociativeWithSymbolicS) {
  std::mt19937 rng(29);
  for (int t = 0; t < 20; ++t) {
    const PhasePoly f = random::phase_poly(rng, 3), g = random::phase_poly(rng, 3),
                    h = random::phase_poly(rng, 3);
    const Scalar s = Scalar::s();
    EXPECT_EQ(star(star(f, g, s), h, s), star(f, star(g, h, s), s));
  }
}

TEST(Star, RejectsOtherVarPairs) {
  const PhasePoly xi = mono(1, 0, Scalar(1), VarPair::xi_eta);
  EXPECT_THROW((void)star(xi, xi, Scalar(0)), Error);
}

TEST(Moyal, Examples) {
  const PhasePoly q = mono(1, 0), p = mono(0, 1);
  const PhasePoly f = mono(3, 1) + mono(0, 2, Scalar::s());
  EXPECT_TRUE(moyal(f, f, Scalar::s()).is_zero());
  EXPECT_EQ(moyal(q, p, Scalar(0)), cst(-ih()));
  EXPECT_EQ(moyal(mono(2, 0), mono(0, 2), Scalar::s()),
            mono(1, 1, Scalar(-4) * ih()) - cst(Scalar(2) * Scalar::s() * Scalar::hbar().pow(2)));
}

TEST(Moyal, DivisibleByHbarWithPoissonLimit) {
  std::mt19937 rng(31);
  for (int t = 0; t < 40; ++t) {
    // hbar-free coefficients, so the hbar order of a term is that of the bracket
    const PhasePoly f = random::phase_poly(rng, 3).substitute(Unit::hbar, Scalar(1));
    const PhasePoly g = random::phase_poly(rng, 3).substitute(Unit::hbar, Scalar(1));
    const PhasePoly m = moyal(f, g, Scalar::s());
    const PhasePoly reduced = m.map_coefficients([](const Scalar& c) {
      Scalar lead;
      for (const auto& [up, v] : c.terms()) {
        EXPECT_GE(up.get(Unit::hbar), 1);
        if (up.get(Unit::hbar) == 1) lead += Scalar::term(up, v);
      }
      return lead.divided_by_hbar() * (-Scalar::i());
    });
    EXPECT_EQ(reduced, poisson(f, g));
  }
}

TEST(MoyalSeries, Examples) {
  const PhasePoly q = mono(1, 0), p = mono(0, 1);
  EXPECT_EQ(moyal_series(q, p, Scalar::s(), 1), cst(-ih()));
  EXPECT_EQ(moyal_series(mono(2, 0), mono(0, 2), Scalar::s(), 2),
            moyal(mono(2, 0), mono(0, 2), Scalar::s()));
  EXPECT_EQ(moyal_series(mono(0, 3), mono(3, 0), Scalar(0), 3),
            moyal(mono(0, 3), mono(3, 0), Scalar(0)));
}

TEST(MoyalSeries, AgreesWithBracketThroughCubicPairs) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) {
        for (int d = 0; c + d <= 3; ++d) {
          EXPECT_EQ(moyal_series(mono(a, b), mono(c, d), Scalar::s(), 3),
                    moyal(mono(a, b), mono(c, d), Scalar::s()));
        }
      }
    }
  }
}

TEST(Moyal, LeadingCorrectionDependsOnS) {
  const PhasePoly f = mono(2, 0), g = mono(0, 2);
  // (i hbar)^-1 moyal - PB: order hbar^2 at s = 0, order hbar at s = +-1
  auto first_order_correction = [&](const Scalar& s) {
    const PhasePoly bracket = moyal(f, g, s).map_coefficients(
        [](const Scalar& c) { return -(Scalar::i() * c.divided_by_hbar()); });
    const PhasePoly rest = bracket - poisson(f, g);
    bool any = false;
    for (const auto& [k, c] : rest.terms()) any = any || c.min_degree(Unit::hbar) == 1;
    return any;
  };
  EXPECT_FALSE(first_order_correction(Scalar(0)));
  EXPECT_TRUE(first_order_correction(Scalar(1)));
  EXPECT_TRUE(first_order_correction(Scalar(-1)));
}

TEST(Moyal, JacobiAtFixedS) {
  std::mt19937 rng(37);
  const Scalar s = half();
  for (int t = 0; t < 10; ++t) {
    const PhasePoly f = random::phase_poly(rng, 3), g = random::phase_poly(rng, 3),
                    h = random::phase_poly(rng, 3);
    const PhasePoly sum = moyal(f, moyal(g, h, s), s) + moyal(g, moyal(h, f, s), s) +
                          moyal(h, moyal(f, g, s), s);
    EXPECT_TRUE(sum.is_zero());
  }
}

TEST(Evolve, Examples) {
  const PhasePoly q = mono(1, 0), p = mono(0, 1);
  const PhasePoly c = cst(Scalar(5));
  const auto constant = evolve(mono(2, 0), c, Scalar(0), 3);
  ASSERT_EQ(constant.size(), 4u);
  EXPECT_EQ(constant[0], c);
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(constant[k].is_zero());

  const PhasePoly h = half() * (mono(2, 0) + mono(0, 2));
  const auto osc = evolve(h, q, Scalar(0), 2);
  ASSERT_EQ(osc.size(), 3u);
  EXPECT_EQ(osc[0], q);
  EXPECT_EQ(osc[1], p);
  EXPECT_EQ(osc[2], -(half() * q));

  const auto free = evolve(p, q, Scalar(0), 1);
  ASSERT_EQ(free.size(), 2u);
  EXPECT_EQ(free[1], cst(Scalar(1)));
}
