#include "wwgm/verify.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "wwgm/correspondence.hpp"
#include "wwgm/errors.hpp"
#include "wwgm/fock_oracle.hpp"
#include "wwgm/ordering.hpp"
#include "wwgm/random_poly.hpp"
#include "wwgm/star_moyal.hpp"
#include "wwgm/w_infinity.hpp"

namespace wwgm {

namespace {

class Recorder {
 public:
  // Counts one case; keeps the first failing description.
  bool expect(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (!ok && passed_) {
      passed_ = false;
      detail_ = describe();
    }
    return ok;
  }
  void note(std::string text) {
    if (passed_) detail_ = std::move(text);
  }

  long cases() const { return cases_; }
  bool passed() const { return passed_; }
  const std::string& detail() const { return detail_; }

 private:
  long cases_ = 0;
  bool passed_ = true;
  std::string detail_;
};

struct Check {
  const char* module;
  const char* name;
  std::function<void(Recorder&, std::mt19937&)> body;
};

CheckResult run_check(const Check& c, std::uint32_t seed) {
  Recorder rec;
  std::mt19937 rng(seed);
  CheckResult out{c.module, c.name, false, 0, ""};
  try {
    c.body(rec, rng);
    out.passed = rec.passed();
    out.detail = rec.detail();
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.cases = rec.cases();
  return out;
}

std::string idx(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }
std::string idx(int n, int m, int k, int l) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) + "," +
         std::to_string(l) + ")";
}

const Scalar kS = Scalar::s();
const Scalar kR = Scalar::r();
const Scalar kHbar = Scalar::hbar();
const Scalar kI = Scalar::i();

// ---- core_algebra --------------------------------------------------------

void op_associativity(Recorder& rec, std::mt19937& rng) {
  for (const Algebra& alg : {Algebra::qp(), Algebra::aadag()}) {
    for (int t = 0; t < 25; ++t) {
      const OpPoly a = random::op_poly(rng, 4, alg, true);
      const OpPoly b = random::op_poly(rng, 4, alg, true);
      const OpPoly c = random::op_poly(rng, 4, alg, true);
      rec.expect((a * b) * c == a * (b * c), [&] { return "A=" + a.to_string() + " B=" + b.to_string() + " C=" + c.to_string(); });
      rec.expect(a * (b + c) == a * b + a * c, [&] { return "distributivity fails for A=" + a.to_string(); });
    }
  }
}

void adjoint_involution(Recorder& rec, std::mt19937& rng) {
  for (const Algebra& alg : {Algebra::qp(), Algebra::aadag()}) {
    for (int t = 0; t < 30; ++t) {
      const OpPoly a = random::op_poly(rng, 4, alg);
      rec.expect(a.adjoint().adjoint() == a, [&] { return "A=" + a.to_string(); });
    }
  }
}

void diffop_composition(Recorder& rec, std::mt19937& rng) {
  for (VarPair vp : {VarPair::qp, VarPair::xi_eta}) {
    for (int t = 0; t < 30; ++t) {
      const DiffOp d1 = random::diff_op(rng, 4, vp);
      const DiffOp d2 = random::diff_op(rng, 4, vp);
      const PhasePoly f = random::phase_poly(rng, 4, vp);
      rec.expect((d1 * d2).apply(f) == d1.apply(d2.apply(f)), [&] {
        return "D1=" + d1.to_string() + " D2=" + d2.to_string() + " f=" + f.to_string();
      });
    }
  }
}

void scalar_ring(Recorder& rec, std::mt19937& rng) {
  for (int t = 0; t < 60; ++t) {
    const Scalar a = random::scalar(rng, true, true, 3);
    const Scalar b = random::scalar(rng, true, true, 3);
    const Scalar c = random::scalar(rng, true, true, 3);
    auto who = [&] { return "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string(); };
    rec.expect(a + b == b + a, who);
    rec.expect(a * b == b * a, who);
    rec.expect((a + b) + c == a + (b + c), who);
    rec.expect((a * b) * c == a * (b * c), who);
    rec.expect(a * (b + c) == a * b + a * c, who);
    rec.expect(a - a == Scalar() && a * Scalar(1) == a, who);
  }
}

// ---- ordering -------------------------------------------------------------

void route_equality(Recorder& rec, std::mt19937&) {
  for (const Algebra& alg : {Algebra::qp(), Algebra::aadag()}) {
    for (int n = 0; n <= 5; ++n) {
      for (int m = 0; m <= 5; ++m) {
        rec.expect(s_ordered(n, m, kS, alg, OrderingRoute::split_x) ==
                       s_ordered(n, m, kS, alg, OrderingRoute::split_y),
                   [&] { return std::string(alg.name()) + " " + idx(n, m); });
      }
    }
  }
}

void symmetrization(Recorder& rec, std::mt19937&) {
  for (int total = 0; total <= 8; ++total) {
    for (int n = 0; n <= total; ++n) {
      const int m = total - n;
      rec.expect(symmetrize_oracle(n, m) == s_ordered(n, m, Scalar(0)), [&] { return idx(n, m); });
    }
  }
}

void hermiticity_t(Recorder& rec, std::mt19937&) {
  const std::array<GaussRat, 6> values{GaussRat(0), GaussRat(1), GaussRat(-1), GaussRat::i(),
                                       -GaussRat::i(), GaussRat::rational(1, 2)};
  for (const GaussRat& s : values) {
    for (int n = 0; n <= 4; ++n) {
      for (int m = 0; m <= 4; ++m) {
        rec.expect(s_ordered(n, m, Scalar(s)).adjoint() == s_ordered(n, m, Scalar(-s.conj())),
                   [&] { return "s=" + s.to_string() + " " + idx(n, m); });
      }
    }
  }
}

void hermiticity_y(Recorder& rec, std::mt19937&) {
  const Algebra alg = Algebra::aadag();
  for (const GaussRat& s : {GaussRat(0), GaussRat(1), GaussRat(-1), GaussRat::rational(1, 2)}) {
    for (int n = 0; n <= 4; ++n) {
      for (int m = 0; m <= 4; ++m) {
        rec.expect(s_ordered(n, m, Scalar(s), alg).adjoint() == s_ordered(m, n, Scalar(s.conj()), alg),
                   [&] { return "s=" + s.to_string() + " " + idx(n, m); });
      }
    }
  }
  // Symbolic real s under the real-parameter convention.
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      rec.expect(s_ordered(n, m, kS, alg).adjoint(true) == s_ordered(m, n, kS, alg),
                 [&] { return "symbolic s " + idx(n, m); });
    }
  }
}

void conversion(Recorder& rec, std::mt19937&) {
  for (const Algebra& alg : {Algebra::qp(), Algebra::aadag()}) {
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; m <= 6; ++m) {
        const OrderExpansion forward = convert_order(n, m, kS, kR, alg);
        rec.expect(expand(forward, alg) == s_ordered(n, m, kS, alg),
                   [&] { return std::string(alg.name()) + " s->r " + idx(n, m); });
        // s -> r -> s at coefficient level: the composite must be the identity.
        std::map<int, Scalar> composite;
        for (const auto& [k, c] : forward.terms) {
          for (const auto& [j, d] : convert_order(n - k, m - k, kR, kS, alg).terms) composite[k + j] += c * d;
        }
        std::erase_if(composite, [](const auto& kv) { return kv.second.is_zero(); });
        rec.expect(composite == std::map<int, Scalar>{{0, Scalar(1)}},
                   [&] { return std::string(alg.name()) + " s->r->s " + idx(n, m); });
      }
    }
  }
}

// ---- star_moyal -----------------------------------------------------------

void star_associativity(Recorder& rec, std::mt19937& rng) {
  for (int t = 0; t < 20; ++t) {
    const PhasePoly f = random::phase_poly(rng, 3, VarPair::qp, false, 3);
    const PhasePoly g = random::phase_poly(rng, 3, VarPair::qp, false, 3);
    const PhasePoly h = random::phase_poly(rng, 3, VarPair::qp, false, 3);
    rec.expect(star(star(f, g, kS), h, kS) == star(f, star(g, h, kS), kS), [&] {
      return "f=" + f.to_string() + " g=" + g.to_string() + " h=" + h.to_string();
    });
  }
}

template <typename Fn>
void for_monomial_pairs(int max_degree, Fn&& fn) {
  for (int d1 = 0; d1 <= max_degree; ++d1) {
    for (int a = 0; a <= d1; ++a) {
      for (int d2 = 0; d2 <= max_degree; ++d2) {
        for (int c = 0; c <= d2; ++c) fn(a, d1 - a, c, d2 - c);
      }
    }
  }
}

bool every_term_has_hbar(const PhasePoly& f, int power) {
  for (const auto& [key, c] : f.terms()) {
    for (const auto& [up, v] : c.terms()) {
      if (up.get(Unit::hbar) < power) return false;
    }
  }
  return true;
}

// Terms of f whose hbar power is exactly zero.
PhasePoly hbar_free_part(const PhasePoly& f) {
  return f.map_coefficients([](const Scalar& c) { return c.substitute(Unit::hbar, Scalar(0)); });
}

void moyal_hbar_structure(Recorder& rec, std::mt19937&) {
  for_monomial_pairs(3, [&](int n, int m, int k, int l) {
    const PhasePoly f = PhasePoly::monomial(VarPair::qp, n, m);
    const PhasePoly g = PhasePoly::monomial(VarPair::qp, k, l);
    const PhasePoly mb = moyal(f, g, kS);
    if (!rec.expect(every_term_has_hbar(mb, 1), [&] { return "not divisible by i*hbar " + idx(n, m, k, l); })) return;
    const PhasePoly reduced = mb.map_coefficients([](const Scalar& c) { return -kI * c.divided_by_hbar(); });
    rec.expect(hbar_free_part(reduced) == poisson(f, g), [&] { return "classical limit " + idx(n, m, k, l); });
  });
}

void moyal_series_agreement(Recorder& rec, std::mt19937&) {
  for_monomial_pairs(3, [&](int n, int m, int k, int l) {
    const PhasePoly f = PhasePoly::monomial(VarPair::qp, n, m);
    const PhasePoly g = PhasePoly::monomial(VarPair::qp, k, l);
    rec.expect(moyal(f, g, kS) == moyal_series(f, g, kS, kMaxSeriesOrder), [&] { return idx(n, m, k, l); });
  });
}

// moyal/(i hbar) - PB, i.e. the quantum correction measured relative to the bracket.
PhasePoly relative_correction(const PhasePoly& f, const PhasePoly& g, const Scalar& s) {
  const PhasePoly reduced = moyal(f, g, s).map_coefficients([](const Scalar& c) { return -kI * c.divided_by_hbar(); });
  return reduced - poisson(f, g);
}

void leading_correction(Recorder& rec, std::mt19937&) {
  for_monomial_pairs(3, [&](int n, int m, int k, int l) {
    const PhasePoly corr = relative_correction(PhasePoly::monomial(VarPair::qp, n, m),
                                               PhasePoly::monomial(VarPair::qp, k, l), Scalar(0));
    rec.expect(every_term_has_hbar(corr, 2), [&] { return "s=0 correction below hbar^2 " + idx(n, m, k, l); });
  });
  const PhasePoly f = PhasePoly::monomial(VarPair::qp, 2, 0);
  const PhasePoly g = PhasePoly::monomial(VarPair::qp, 0, 2);
  for (int sign : {1, -1}) {
    const PhasePoly corr = relative_correction(f, g, Scalar(sign));
    rec.expect(!corr.is_zero() && !every_term_has_hbar(corr, 2),
               [&] { return "no hbar^1 correction at s=" + std::to_string(sign) + ": " + corr.to_string(); });
  }
}

void moyal_jacobi(Recorder& rec, std::mt19937& rng) {
  const Scalar s = Scalar::rational(1, 2);
  for (int t = 0; t < 15; ++t) {
    const PhasePoly f = random::phase_poly(rng, 3, VarPair::qp, false, 2);
    const PhasePoly g = random::phase_poly(rng, 3, VarPair::qp, false, 2);
    const PhasePoly h = random::phase_poly(rng, 3, VarPair::qp, false, 2);
    const PhasePoly sum = moyal(f, moyal(g, h, s), s) + moyal(g, moyal(h, f, s), s) + moyal(h, moyal(f, g, s), s);
    rec.expect(sum.is_zero(), [&] { return "f=" + f.to_string() + " g=" + g.to_string() + " h=" + h.to_string(); });
  }
}

// ---- correspondence -------------------------------------------------------

void round_trip(Recorder& rec, std::mt19937&) {
  for (const Algebra& alg : {Algebra::qp(), Algebra::aadag()}) {
    const VarPair vp = alg.phase_pair();
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; m <= 6; ++m) {
        const PhasePoly f = PhasePoly::monomial(vp, n, m);
        rec.expect(symbol(quantize(f, kS, alg), kS) == f, [&] { return std::string(alg.name()) + " symbol(quantize) " + idx(n, m); });
        const OpPoly a = OpPoly::monomial(alg, n, m);
        rec.expect(quantize(symbol(a, kS), kS, alg) == a, [&] { return std::string(alg.name()) + " quantize(symbol) " + idx(n, m); });
      }
    }
  }
}

void product_direction(Recorder& rec, std::mt19937&) {
  std::optional<ProductDirection> seen;
  for (int n = 0; n <= 3; ++n) for (int m = 0; m <= 3; ++m) for (int k = 0; k <= 3; ++k) for (int l = 0; l <= 3; ++l) {
    const ProductDirection d = star_direction(PhasePoly::monomial(VarPair::qp, n, m),
                                              PhasePoly::monomial(VarPair::qp, k, l), kS);
    if (!rec.expect(d != ProductDirection::neither, [&] { return "no direction for " + idx(n, m, k, l); })) continue;
    if (d == ProductDirection::both) continue;
    if (!seen) seen = d;
    rec.expect(d == *seen, [&] {
      return std::string("direction ") + direction_name(d) + " at " + idx(n, m, k, l) + " differs from " +
             direction_name(*seen);
    });
  }
  rec.note(std::string("direction: ") + (seen ? direction_name(*seen) : direction_name(ProductDirection::both)));
}

void bopp_routes(Recorder& rec, std::mt19937&) {
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const PhasePoly left = bopp_symbol(n, m, kR, kS, BoppSide::L);
      rec.expect(left == bopp_symbol(n, m, kR, kS, BoppSide::R), [&] { return "L vs R " + idx(n, m); });
      rec.expect(left == symbol(s_ordered(n, m, kR), -kS), [&] { return "vs symbol " + idx(n, m); });
      const PhasePoly one(VarPair::qp, Scalar(1));
      rec.expect(gamma_generator(n, m, kR, kS).apply(one).is_zero(), [&] { return "Gamma(1) != 0 " + idx(n, m); });
    }
  }
}

DiffOp d_q() { return DiffOp::partial(VarPair::qp, 0); }
DiffOp d_p() { return DiffOp::partial(VarPair::qp, 1); }
DiffOp mul_q() { return DiffOp::coordinate(VarPair::qp, 0); }
DiffOp mul_p() { return DiffOp::coordinate(VarPair::qp, 1); }

void reference_table(Recorder& rec, std::mt19937&) {
  const Scalar ih = kI * kHbar;
  const Scalar h2 = kHbar * kHbar;
  const std::array<std::pair<IndexPair, DiffOp>, 6> table{{
      {{0, 0}, DiffOp(VarPair::qp)},
      {{1, 0}, -ih * d_p()},
      {{0, 1}, ih * d_q()},
      {{1, 1}, ih * (mul_q() * d_q() - mul_p() * d_p())},
      {{2, 0}, Scalar(-2) * ih * (mul_q() * d_p()) + (kS * h2) * (d_p() * d_p())},
      {{0, 2}, Scalar(2) * ih * (mul_p() * d_q()) - (kS * h2) * (d_q() * d_q())},
  }};
  const auto rows = generator_table(Scalar(0), kS, 2, 2, 2);
  rec.expect(rows.size() == table.size(), [&] { return "row count " + std::to_string(rows.size()); });
  for (const auto& [key, expected] : table) {
    rec.expect(gamma_generator(key.first, key.second, Scalar(0), kS) == expected, [&] {
      return idx(key.first, key.second) + ": " + gamma_generator(key.first, key.second, Scalar(0), kS).to_string();
    });
  }
  const std::array<OpPoly, 6> ordered{OpPoly(Algebra::qp(), Scalar(1)), OpPoly::x(Algebra::qp()),
                                      OpPoly::y(Algebra::qp()), symmetrize_oracle(1, 1),
                                      OpPoly::monomial(Algebra::qp(), 2, 0), OpPoly::monomial(Algebra::qp(), 0, 2)};
  for (std::size_t j = 0; j < table.size(); ++j) {
    const auto [n, m] = table[j].first;
    rec.expect(s_ordered(n, m, Scalar(0)) == ordered[j], [&] { return "t" + idx(n, m); });
  }
}

void bopp_commutators(Recorder& rec, std::mt19937&) {
  struct Case {
    BoppBasis basis;
    VarPair vp;
    Scalar kappa;  // [Q_L, P_L]
  };
  const std::array<Case, 4> cases{{{BoppBasis::Delta, VarPair::qp, -kI * kHbar},
                                   {BoppBasis::D, VarPair::xi_eta, -kI * kHbar},
                                   {BoppBasis::D, VarPair::z_zbar, Scalar(-1)},
                                   {BoppBasis::Delta, VarPair::Z_Zbar, Scalar(1)}}};
  for (const Case& c : cases) {
    auto op = [&](BoppSide side, BoppWhich which) { return bopp({c.basis, side, which, kS, c.vp}); };
    const DiffOp ql = op(BoppSide::L, BoppWhich::Q), pl = op(BoppSide::L, BoppWhich::P);
    const DiffOp qr = op(BoppSide::R, BoppWhich::Q), pr = op(BoppSide::R, BoppWhich::P);
    const std::string where = var_pair_name(c.vp);
    rec.expect(commutator(ql, pl) == DiffOp(c.vp, c.kappa), [&] { return where + " [Q_L,P_L] = " + commutator(ql, pl).to_string(); });
    rec.expect(commutator(qr, pr) == DiffOp(c.vp, -c.kappa), [&] { return where + " [Q_R,P_R] = " + commutator(qr, pr).to_string(); });
    for (const DiffOp* l : {&ql, &pl}) {
      for (const DiffOp* r : {&qr, &pr}) {
        rec.expect(commutator(*l, *r).is_zero(), [&] { return where + " left/right operators do not commute"; });
      }
    }
  }
}

// ---- w_infinity -----------------------------------------------------------

void isomorphism(Recorder& rec, std::mt19937&) {
  const GammaSet gammas(kS, -kS, 8);
  for (int n = 0; n <= 4; ++n) for (int m = 0; m <= 4; ++m) for (int k = 0; k <= 4; ++k) for (int l = 0; l <= 4; ++l) {
    const IsomorphismReport r = isomorphism_check(n, m, k, l, gammas);
    rec.expect(r.passed, [&] { return idx(n, m, k, l) + " difference " + r.difference.to_string(); });
  }
}

void central_extension(Recorder& rec, std::mt19937&) {
  for (int rv : {0, 1, -1}) {
    const Scalar r(rv);
    const GammaSet gammas(r, kS, 10);
    for (int n = 0; n <= 3; ++n) for (int m = 0; m <= 3; ++m) for (int k = 0; k <= 3; ++k) for (int l = 0; l <= 3; ++l) {
      const CentralExtensionReport rep = central_extension_report(n, m, k, l, gammas);
      rec.expect(rep.passed, [&] { return "r=" + std::to_string(rv) + " " + idx(n, m, k, l); });
      // The expansion must rebuild the operator commutator; its identity
      // component is the central charge.
      const StructureExpansion e = structure_expand(n, m, k, l, r);
      OpPoly rebuilt(Algebra::qp());
      for (const auto& [key, c] : e.terms) rebuilt += c * s_ordered(key.first, key.second, r);
      const OpPoly bracket = commutator(s_ordered(n, m, r), s_ordered(k, l, r));
      rec.expect(rebuilt == bracket, [&] { return "expansion r=" + std::to_string(rv) + " " + idx(n, m, k, l); });
      rec.expect(rep.central_charge == e.central(), [&] { return "central charge " + idx(n, m, k, l); });
    }
  }
}

void structure_algebra(Recorder& rec, std::mt19937& rng) {
  std::uniform_int_distribution<int> ix(0, 3);
  for (int t = 0; t < 20; ++t) {
    const int a = ix(rng), b = ix(rng), c = ix(rng), d = ix(rng), e = ix(rng), f = ix(rng);
    const StructureExpansion x = structure_expand(a, b, c, d, kR);
    const StructureExpansion y = structure_expand(c, d, a, b, kR);
    bool anti = x.terms.size() == y.terms.size();
    for (const auto& [key, v] : x.terms) {
      auto it = y.terms.find(key);
      anti = anti && it != y.terms.end() && it->second == -v;
    }
    rec.expect(anti, [&] { return "antisymmetry " + idx(a, b, c, d); });
    const OpPoly u = s_ordered(a, b, kR), v = s_ordered(c, d, kR), w = s_ordered(e, f, kR);
    const OpPoly jac = commutator(u, commutator(v, w)) + commutator(v, commutator(w, u)) + commutator(w, commutator(u, v));
    rec.expect(jac.is_zero(), [&] { return "Jacobi " + idx(a, b) + idx(c, d) + idx(e, f); });
  }
}

// ---- fock_oracle ----------------------------------------------------------

void fock_routes(Recorder& rec, const fock::Config& cfg) {
  for (double s : {0.0, 1.0, -1.0, 0.5, -0.5}) {
    for (int n = 0; n <= 4; ++n) {
      for (int m = 0; m <= 4; ++m) {
        const fock::Matrix x = fock::ordered_word_matrix(n, m, s, OrderingRoute::split_x, cfg);
        const fock::Matrix y = fock::ordered_word_matrix(n, m, s, OrderingRoute::split_y, cfg);
        const fock::Matrix sym = fock::matrix_of(s_ordered(n, m, kS), cfg, {s, std::nullopt});
        const double d1 = fock::projected_deviation(x, y, cfg.rank());
        const double d2 = fock::projected_deviation(sym, x, cfg.rank());
        std::ostringstream msg;
        msg << "s=" << s << " " << idx(n, m) << " route deviation " << d1 << ", symbolic deviation " << d2;
        rec.expect(d1 < cfg.tol && d2 < cfg.tol, [&] { return msg.str(); });
      }
    }
  }
}

void fock_commutator(Recorder& rec, const fock::Config& cfg) {
  const fock::Generators g = fock::build_generators(cfg);
  const fock::Matrix lhs = g.q * g.p - g.p * g.q;
  const fock::Matrix rhs = fock::cplx(0.0, cfg.hbar) * fock::Matrix::Identity(cfg.n, cfg.n);
  const double err = fock::projected_max_abs(lhs - rhs, cfg.rank());
  rec.expect(err < cfg.tol, [&] { return "[q,p] - i hbar deviation " + std::to_string(err); });
}

void fock_displacement(Recorder& rec, const fock::Config& cfg) {
  const Algebra qp = Algebra::qp();
  const std::array<OpPoly, 3> fs{OpPoly::x(qp), OpPoly::x(qp) * OpPoly::y(qp),
                                 OpPoly::monomial(qp, 2, 0) + OpPoly::monomial(qp, 0, 2)};
  for (const OpPoly& f : fs) {
    for (double xi : {-0.5, 0.25, 0.5}) {
      for (double eta : {-0.5, 0.0, 0.5}) {
        const fock::DisplacementReport r = fock::displacement_check(xi, eta, f, cfg);
        rec.expect(r.passed, [&] {
          std::ostringstream msg;
          msg << "f=" << f.to_string() << " xi=" << xi << " eta=" << eta << " deviation " << r.deviation;
          return msg.str();
        });
      }
    }
  }
  // Leakage control: the projected error must not grow with the truncation.
  fock::Config small = cfg;
  small.n = cfg.n / 2;
  const fock::Config& large = cfg;
  const OpPoly f = fs[2];
  const double coarse = fock::displacement_check(0.5, 0.5, f, small).deviation;
  const double fine = fock::displacement_check(0.5, 0.5, f, large).deviation;
  rec.expect(fine <= coarse || fine < 1e-13, [&] {
    std::ostringstream msg;
    msg << "deviation grew from " << coarse << " (N=" << small.n << ") to " << fine << " (N=" << large.n << ")";
    return msg.str();
  });
}

void fock_derivatives(Recorder& rec, const fock::Config& cfg) {
  const double h = 1e-4;
  for (auto [n, m] : {IndexPair{1, 0}, IndexPair{1, 1}, IndexPair{2, 0}, IndexPair{0, 2}, IndexPair{2, 1}}) {
    for (double s : {0.0, 0.5, -1.0}) {
      const fock::DerivativeReport r = fock::derivative_check(s, 0.3, -0.2, h, n, m, 0.5, cfg);
      std::ostringstream msg;
      msg << idx(n, m) << " s=" << s << " errors " << r.first_order_error << ", " << r.generator_error;
      rec.expect(r.passed, [&] { return msg.str(); });
    }
  }
  // Halving h must cut first-derivative errors by four.
  const fock::DerivativeReport coarse = fock::derivative_check(0.5, 0.3, -0.2, 1e-4, 1, 1, 0.5, cfg);
  const double ratio = coarse.first_order_ratio();
  rec.expect(ratio > 3.0 && ratio < 5.0, [&] { return "first-order h^2 ratio " + std::to_string(ratio); });
  const double gen_ratio = coarse.generator_ratio();
  rec.expect(gen_ratio > 3.0 && gen_ratio < 5.0, [&] { return "generator h^2 ratio " + std::to_string(gen_ratio); });
}

std::vector<Check> all_checks(const VerifyOptions& opts) {
  std::vector<Check> checks{
      {"core_algebra", "operator product associativity", op_associativity},
      {"core_algebra", "adjoint is an involution", adjoint_involution},
      {"core_algebra", "differential operator composition", diffop_composition},
      {"core_algebra", "scalar ring axioms", scalar_ring},
      {"ordering", "split-x route equals split-y route", route_equality},
      {"ordering", "symmetrization oracle at s=0", symmetrization},
      {"ordering", "adjoint of t_nm(s) is t_nm(-conj s)", hermiticity_t},
      {"ordering", "adjoint of y_nm(s) is y_mn(conj s)", hermiticity_y},
      {"ordering", "order conversion round trip", conversion},
      {"star_moyal", "star product associativity", star_associativity},
      {"star_moyal", "bracket divisible by i hbar with Poisson limit", moyal_hbar_structure},
      {"star_moyal", "series through third order equals bracket", moyal_series_agreement},
      {"star_moyal", "leading correction order at s=0 and s=+-1", leading_correction},
      {"star_moyal", "bracket Jacobi identity", moyal_jacobi},
      {"correspondence", "quantize/symbol round trip", round_trip},
      {"correspondence", "star to operator product direction", product_direction},
      {"correspondence", "ordered Bopp symbol routes", bopp_routes},
      {"correspondence", "reference generator table", reference_table},
      {"correspondence", "Bopp operator commutators", bopp_commutators},
      {"w_infinity", "Gamma action matches bracket", isomorphism},
      {"w_infinity", "central extension", central_extension},
      {"w_infinity", "structure constants antisymmetry and Jacobi", structure_algebra},
  };
  if (opts.include_fock) {
    fock::Config cfg;
    cfg.n = opts.fock_n;
    auto wrap = [cfg](void (*fn)(Recorder&, const fock::Config&)) {
      return [cfg, fn](Recorder& rec, std::mt19937&) { fn(rec, cfg); };
    };
    checks.push_back({"fock_oracle", "canonical commutator", wrap(fock_commutator)});
    checks.push_back({"fock_oracle", "ordered words match symbolic products", wrap(fock_routes)});
    checks.push_back({"fock_oracle", "displacement conjugation", wrap(fock_displacement)});
    checks.push_back({"fock_oracle", "displacement derivatives", wrap(fock_derivatives)});
  }
  return checks;
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  const std::vector<Check> checks = all_checks(opts);
  std::vector<CheckResult> out;
  out.reserve(checks.size());
  if (!opts.parallel) {
    for (std::size_t j = 0; j < checks.size(); ++j) out.push_back(run_check(checks[j], opts.seed + j));
    return out;
  }
  std::vector<std::future<CheckResult>> pending;
  for (std::size_t j = 0; j < checks.size(); ++j) {
    pending.push_back(std::async(std::launch::async, run_check, std::cref(checks[j]),
                                 static_cast<std::uint32_t>(opts.seed + j)));
  }
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace wwgm
