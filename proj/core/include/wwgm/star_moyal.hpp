#pragma once

#include <vector>

#include "wwgm/phase_poly.hpp"
#include "wwgm/scalar.hpp"

namespace wwgm {

/// Sign convention of the Poisson bracket.
///   paper:    {f, g} = d_p f d_q g - d_q f d_p g   ({q, p} = -1)
///   standard: {f, g} = d_q f d_p g - d_p f d_q g   ({q, p} = +1)
/// `paper` is the sign for which the hbar expansion of the
/// s-Moyal bracket starts with i*hbar*{f, g}.
enum class PoissonConvention { paper, standard };

PhasePoly poisson(const PhasePoly& f, const PhasePoly& g,
                  PoissonConvention convention = PoissonConvention::paper);

/// s-parametrized star product on (q, p):
///   f * g = sum_{j,k} (i hbar/2)^(j+k) (1-s)^j (-(1+s))^k / (j! k!)
///           (d_p^j d_q^k f)(d_q^j d_p^k g).
/// The series is finite for polynomials. Associative for every s.
PhasePoly star(const PhasePoly& f, const PhasePoly& g, const Scalar& s);

/// star(f, g, s) - star(g, f, s)
PhasePoly moyal(const PhasePoly& f, const PhasePoly& g, const Scalar& s);

// Highest order of the closed-form hbar expansion.
inline constexpr int kMaxSeriesOrder = 3;

/// The first `max_order` (<= 3) terms of the hbar expansion of moyal(f, g, s):
/// i hbar PB + (1/2!)(i hbar/2)^2 4s [...] + (1/3!)(i hbar/2)^3 {...}.
PhasePoly moyal_series(const PhasePoly& f, const PhasePoly& g, const Scalar& s, int max_order);

/// Taylor coefficients c_0..c_K of f(t) under df/dt = (i hbar)^-1 moyal(H, f, s).
/// Requires hbar to be symbolic so the division by i*hbar stays exact.
std::vector<PhasePoly> evolve(const PhasePoly& hamiltonian, const PhasePoly& f, const Scalar& s,
                              int order);

}  // namespace wwgm
