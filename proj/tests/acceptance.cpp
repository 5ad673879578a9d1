// Acceptance suite: one PASS/FAIL line per criterion, with the time limits
// and tolerances pinned below. Exit status is 0 only when every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "support/values.hpp"
#include "wwgm/correspondence.hpp"
#include "wwgm/fock_oracle.hpp"
#include "wwgm/ordering.hpp"
#include "wwgm/random_poly.hpp"
#include "wwgm/star_moyal.hpp"
#include "wwgm/w_infinity.hpp"

using namespace tv;

namespace {

// Failure notes collected while one criterion runs; the first is printed.
struct Outcome {
  long cases = 0;
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && failures.size() < 3) failures.push_back(what());
  }
};

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds; 0 means no limit
  std::function<void(Outcome&)> body;
};

std::string idx(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

std::string idx(int n, int m, int k, int l) { return idx(n, m) + idx(k, l); }

const Scalar kS = Scalar::s();
const Scalar kR = Scalar::r();

// 1. Both binomial routes and the symmetrization oracle.
void ordering_routes(Outcome& out) {
  for (int n = 0; n <= 5; ++n) {
    for (int m = 0; m <= 5; ++m) {
      const OpPoly x = s_ordered(n, m, kS, Algebra::qp(), OrderingRoute::split_x);
      const OpPoly y = s_ordered(n, m, kS, Algebra::qp(), OrderingRoute::split_y);
      out.expect(x == y, [&] { return "routes differ at " + idx(n, m); });
      const OpPoly weyl = x.substitute(Unit::s, Scalar(0));
      out.expect(weyl == symmetrize_oracle(n, m), [&] { return "symmetrize_oracle differs at " + idx(n, m); });
      out.expect(weyl == oracle::symmetrized(n, m, Algebra::qp()),
                 [&] { return "word-rewriting oracle differs at " + idx(n, m); });
    }
  }
}

// 2. s -> s' -> s composes to the identity expansion, and each expansion
// reproduces the ordered product it came from.
void conversion_round_trip(Outcome& out) {
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) {
      std::map<int, Scalar> total;
      OpPoly rebuilt;
      for (const auto& [k, c] : convert_order(n, m, kS, kR).terms) {
        rebuilt += c * s_ordered(n - k, m - k, kR);
        for (const auto& [k2, c2] : convert_order(n - k, m - k, kR, kS).terms) total[k + k2] += c * c2;
      }
      bool identity = true;
      for (const auto& [k, c] : total) identity = identity && c == (k == 0 ? Scalar(1) : Scalar(0));
      out.expect(identity, [&] { return "round trip is not the identity at " + idx(n, m); });
      out.expect(rebuilt == s_ordered(n, m, kS), [&] { return "expansion mismatch at " + idx(n, m); });
    }
  }
}

// 3. Adjoints of ordered products.
void hermiticity(Outcome& out) {
  const std::vector<GaussRat> values{GaussRat(0), GaussRat(1), GaussRat(-1), GaussRat::i(), -GaussRat::i(),
                                     GaussRat::rational(1, 2)};
  for (const GaussRat& s : values) {
    for (int n = 0; n <= 4; ++n) {
      for (int m = 0; m <= 4; ++m) {
        const bool ok = s_ordered(n, m, Scalar(s)).adjoint() == s_ordered(n, m, -Scalar(s.conj()));
        out.expect(ok, [&] { return "t" + idx(n, m) + " at s=" + s.to_string(); });
      }
    }
  }
  const Algebra b = Algebra::aadag();
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const bool ok = s_ordered(n, m, kS, b).adjoint(true) == s_ordered(m, n, kS, b);
      out.expect(ok, [&] { return "y" + idx(n, m) + " with real symbolic s"; });
    }
  }
}

// 4. Star associativity.
void star_associativity(Outcome& out) {
  std::mt19937 rng(20240601);
  for (int t = 0; t < 100; ++t) {
    const PhasePoly f = random::phase_poly(rng, 3), g = random::phase_poly(rng, 3), h = random::phase_poly(rng, 3);
    const bool ok = star(star(f, g, kS), h, kS) == star(f, star(g, h, kS), kS);
    out.expect(ok, [&] { return "triple " + f.to_string() + " ; " + g.to_string() + " ; " + h.to_string(); });
  }
}

// 5. Bracket against its hbar series, and the order of the leading correction.
void bracket_series(Outcome& out) {
  std::vector<PhasePoly> monomials;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 3; ++b) monomials.push_back(mono(a, b));
  }
  // Lowest hbar power in (i hbar)^-1 moyal - PB.
  auto correction_min_hbar = [](const PhasePoly& f, const PhasePoly& g, const Scalar& s) {
    const PhasePoly bracket =
        moyal(f, g, s).map_coefficients([](const Scalar& c) { return -(Scalar::i() * c.divided_by_hbar()); });
    const PhasePoly rest = bracket - poisson(f, g);
    int lowest = 1000;
    for (const auto& [k, c] : rest.terms()) lowest = std::min(lowest, c.min_degree(Unit::hbar));
    return lowest;
  };
  for (const PhasePoly& f : monomials) {
    for (const PhasePoly& g : monomials) {
      out.expect(moyal(f, g, kS) == moyal_series(f, g, kS, 3),
                 [&] { return "series differs for " + f.to_string() + ", " + g.to_string(); });
      out.expect(correction_min_hbar(f, g, Scalar(0)) >= 2,
                 [&] { return "s=0 correction below hbar^2 for " + f.to_string() + ", " + g.to_string(); });
    }
  }
  for (const Scalar& s : {Scalar(1), Scalar(-1)}) {
    const int lowest = correction_min_hbar(mono(2, 0), mono(0, 2), s);
    out.expect(lowest == 1, [&] { return "no hbar^1 correction at s=" + s.to_string(); });
  }
}

// 6. Quantization round trips and the star/operator product direction.
void correspondence(Outcome& out) {
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) {
      const PhasePoly f = mono(n, m);
      out.expect(symbol(quantize(f, kS), kS) == f, [&] { return "symbol(quantize) at " + idx(n, m); });
      const OpPoly a = OpPoly::monomial(Algebra::qp(), n, m);
      out.expect(quantize(symbol(a, kS), kS) == a, [&] { return "quantize(symbol) at " + idx(n, m); });
    }
  }
  std::map<ProductDirection, long> seen;
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (int k = 0; k <= 3; ++k) {
        for (int l = 0; l <= 3; ++l) ++seen[star_direction(mono(n, m), mono(k, l), kS)];
      }
    }
  }
  // Commuting pairs satisfy both relations and do not discriminate.
  std::vector<ProductDirection> strict;
  for (const auto& [d, count] : seen) {
    if (d != ProductDirection::both) strict.push_back(d);
  }
  out.expect(strict.size() == 1 && strict[0] != ProductDirection::neither, [&] {
    std::string s = "directions seen:";
    for (const auto& [d, count] : seen) s += std::string(" ") + direction_name(d) + "=" + std::to_string(count);
    return s;
  });
  if (strict.size() == 1) out.note = std::string("direction: ") + direction_name(strict[0]);
}

// 7. The printed generator table for n, m <= 2 at r = 0.
void generator_table_rows(Outcome& out) {
  const Scalar hb2 = Scalar::hbar() * Scalar::hbar();
  struct Row {
    int n, m;
    OpPoly t;
    DiffOp gamma;
  };
  const std::vector<Row> printed{
      {0, 0, I(), DiffOp()},
      {1, 0, Q(), dterm(0, 0, 0, 1, -ih())},
      {0, 1, P(), dterm(0, 0, 1, 0, ih())},
      {1, 1, half() * (Q() * P() + P() * Q()), dterm(1, 0, 1, 0, ih()) - dterm(0, 1, 0, 1, ih())},
      {2, 0, Q() * Q(), dterm(1, 0, 0, 1, Scalar(-2) * ih()) + dterm(0, 0, 0, 2, kS * hb2)},
      {0, 2, P() * P(), dterm(0, 1, 1, 0, Scalar(2) * ih()) - dterm(0, 0, 2, 0, kS * hb2)},
  };
  const auto rows = generator_table(Scalar(0), kS, 2, 2, 2);
  out.expect(rows.size() == printed.size(), [&] { return std::to_string(rows.size()) + " rows"; });
  for (const Row& want : printed) {
    bool found = false;
    for (const auto& row : rows) {
      if (row.n == want.n && row.m == want.m) {
        found = true;
        out.expect(row.ordered == want.t, [&] { return "t" + idx(want.n, want.m) + " = " + row.ordered.to_string(); });
        out.expect(row.generator == want.gamma,
                   [&] { return "Gamma" + idx(want.n, want.m) + " = " + row.generator.to_string(); });
      }
    }
    out.expect(found, [&] { return "missing row " + idx(want.n, want.m); });
  }
}

// 8. Generators against the Moyal bracket.
void isomorphism(Outcome& out) {
  const GammaSet gammas(kS, -kS, 8);
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      for (int k = 0; k <= 4; ++k) {
        for (int l = 0; l <= 4; ++l) {
          const auto rep = isomorphism_check(n, m, k, l, gammas);
          out.expect(rep.passed, [&] { return idx(n, m, k, l) + " difference " + rep.difference.to_string(); });
        }
      }
    }
  }
}

// 9. Classical commutators against the quantum structure constants.
void central_extension(Outcome& out) {
  for (const Scalar& r : {Scalar(0), Scalar(1), Scalar(-1)}) {
    const GammaSet gammas(r, kS, 10);
    for (int n = 0; n <= 3; ++n) {
      for (int m = 0; m <= 3; ++m) {
        for (int k = 0; k <= 3; ++k) {
          for (int l = 0; l <= 3; ++l) {
            const auto rep = central_extension_report(n, m, k, l, gammas);
            out.expect(rep.passed, [&] { return idx(n, m, k, l) + " r=" + r.to_string(); });
          }
        }
      }
    }
  }
  const auto unit = central_extension_report(1, 0, 0, 1, Scalar(0), kS);
  out.expect(unit.central_charge == ih() && unit.classical_commutator.is_zero(),
             [&] { return "(1,0)(0,1) central charge " + unit.central_charge.to_string(); });
}

// 10. Bopp operator commutators and the two Bopp routes to symbols.
void bopp_operators(Outcome& out) {
  struct Family {
    BoppBasis basis;
    VarPair vp;
    Scalar left;
  };
  const std::vector<Family> families{
      {BoppBasis::D, VarPair::xi_eta, -ih()},
      {BoppBasis::D, VarPair::z_zbar, Scalar(-1)},
      {BoppBasis::Delta, VarPair::qp, -ih()},
      {BoppBasis::Delta, VarPair::Z_Zbar, Scalar(1)},
  };
  for (const Family& f : families) {
    auto op = [&](BoppSide side, BoppWhich which) { return bopp(BoppSpec{f.basis, side, which, kS, f.vp}); };
    const DiffOp ql = op(BoppSide::L, BoppWhich::Q), pl = op(BoppSide::L, BoppWhich::P);
    const DiffOp qr = op(BoppSide::R, BoppWhich::Q), pr = op(BoppSide::R, BoppWhich::P);
    const std::string name = var_pair_name(f.vp);
    out.expect(commutator(ql, pl) == DiffOp(f.vp, f.left), [&] { return name + " [Q_L,P_L]"; });
    out.expect(commutator(qr, pr) == DiffOp(f.vp, -f.left), [&] { return name + " [Q_R,P_R]"; });
    for (const DiffOp* a : {&ql, &pl}) {
      for (const DiffOp* b : {&qr, &pr}) {
        out.expect(commutator(*a, *b).is_zero(), [&] { return name + " cross commutator"; });
      }
    }
  }
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const bool ok = bopp_symbol(n, m, kR, kS, BoppSide::L) == bopp_symbol(n, m, kR, kS, BoppSide::R);
      out.expect(ok, [&] { return "routes differ at " + idx(n, m); });
    }
  }
}

// 11. Truncated Fock space at N = 64, hbar = 1, rank 56.
void fock_space(Outcome& out) {
  fock::Config cfg;
  cfg.n = 64;
  cfg.hbar = 1.0;
  cfg.proj_rank = 56;
  cfg.displacement_tol = 1e-8;
  cfg.fd_tol = 1e-6;

  const auto g = fock::build_generators(cfg);
  const double comm = fock::projected_max_abs(
      g.q * g.p - g.p * g.q - fock::cplx(0, cfg.hbar) * fock::Matrix::Identity(cfg.n, cfg.n), cfg.rank());
  out.expect(comm < 1e-12, [&] { return "[q,p] deviation " + std::to_string(comm); });

  double worst_disp = 0;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; a + b <= 2; ++b) {
      const OpPoly f = OpPoly::monomial(Algebra::qp(), a, b);
      for (double xi : {-0.5, 0.0, 0.5}) {
        for (double eta : {-0.5, 0.25, 0.5}) {
          const auto rep = fock::displacement_check(xi, eta, f, cfg);
          worst_disp = std::max(worst_disp, rep.deviation);
          out.expect(rep.deviation < 1e-8, [&] {
            std::ostringstream msg;
            msg << "displacement " << f.to_string() << " at (" << xi << "," << eta << "): " << rep.deviation;
            return msg.str();
          });
        }
      }
    }
  }

  // Ratios are required only where the generator has at most one derivative;
  // higher stencils at h = 1e-4 are dominated by roundoff.
  double worst_fd = 0;
  const double h = 1e-4;
  for (auto [n, m] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{2, 0}, std::pair{0, 2},
                      std::pair{2, 1}}) {
    const auto rep = fock::derivative_check(fock::cplx(0.5), 0.2, 0.1, h, n, m, fock::cplx(0.0), cfg);
    worst_fd = std::max({worst_fd, rep.first_order_error, rep.generator_error});
    out.expect(rep.first_order_error < 1e-6 && rep.generator_error < 1e-6, [&] {
      std::ostringstream msg;
      msg << "derivative " << idx(n, m) << ": " << rep.first_order_error << ", " << rep.generator_error;
      return msg.str();
    });
    const double r1 = rep.first_order_ratio();
    out.expect(r1 > 3.0 && r1 < 5.0, [&] { return "first-order h^2 ratio " + std::to_string(r1); });
    if (rep.generator_derivative_order == 1) {
      const double r2 = rep.generator_ratio();
      out.expect(r2 > 3.0 && r2 < 5.0,
                 [&] { return "generator " + idx(n, m) + " h^2 ratio " + std::to_string(r2); });
    }
  }
  std::ostringstream note;
  note << "[q,p] " << comm << ", displacement " << worst_disp << ", derivatives " << worst_fd;
  out.note = note.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "ordering routes and symmetrization, n,m <= 5", 5, ordering_routes},
      {2, "order conversion round trip, n,m <= 6", 5, conversion_round_trip},
      {3, "hermiticity of ordered products", 0, hermiticity},
      {4, "star associativity, 100 random triples", 30, star_associativity},
      {5, "bracket vs hbar series, leading corrections", 0, bracket_series},
      {6, "quantize/symbol round trips, product direction", 0, correspondence},
      {7, "generator table n,m <= 2", 0, generator_table_rows},
      {8, "generator/bracket isomorphism, n,m,k,l <= 4", 60, isomorphism},
      {9, "central extension, n,m,k,l <= 3, r in {0,1,-1}", 0, central_extension},
      {10, "Bopp commutators and Bopp symbol routes", 0, bopp_operators},
      {11, "Fock space oracle, N=64", 10, fock_space},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(out);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit <= 0 || secs < c.time_limit;
    const bool pass = error.empty() && out.failures.empty() && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s %2d  %-50s %6ld cases  %7.2fs", pass ? "PASS" : "FAIL", c.id, c.title, out.cases, secs);
    if (c.time_limit > 0) std::printf(" (limit %.0fs)", c.time_limit);
    if (!error.empty()) std::printf("  error: %s", error.c_str());
    if (!out.failures.empty()) std::printf("  first failure: %s", out.failures.front().c_str());
    if (pass && !out.note.empty()) std::printf("  %s", out.note.c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
