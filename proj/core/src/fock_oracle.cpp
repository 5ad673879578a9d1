#include "wwgm/fock_oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wwgm/correspondence.hpp"
#include "wwgm/errors.hpp"

namespace wwgm::fock {

void Config::validate() const {
  if (n < 4) throw DomainError("Fock truncation must be at least 4, got " + std::to_string(n));
  if (rank() < 1 || rank() >= n) {
    throw DomainError("projection rank " + std::to_string(rank()) + " outside [1, " +
                      std::to_string(n) + ")");
  }
  if (!(hbar > 0)) throw DomainError("hbar must be positive");
  if (exponential_dim() < n) throw DomainError("exponential dimension below the truncation");
}

Generators build_generators(const Config& cfg) {
  cfg.validate();
  Generators g;
  g.a = Matrix::Zero(cfg.n, cfg.n);
  for (int k = 1; k < cfg.n; ++k) g.a(k - 1, k) = std::sqrt(static_cast<double>(k));
  g.adag = g.a.adjoint();
  const double scale = std::sqrt(cfg.hbar / 2.0);
  g.q = scale * (g.a + g.adag);
  g.p = cplx(0.0, -scale) * (g.a - g.adag);
  return g;
}

namespace {

cplx evaluate(const Scalar& c, const Config& cfg, const ParamValues& params) {
  if (c.has(Unit::s) && !params.s) throw SymbolicScalar("no value given for s in " + c.to_string());
  if (c.has(Unit::r) && !params.r) throw SymbolicScalar("no value given for r in " + c.to_string());
  return c.evaluate(cfg.hbar, params.s.value_or(0.0), params.r.value_or(0.0));
}

std::vector<Matrix> matrix_powers(const Matrix& base, int count) {
  std::vector<Matrix> out{Matrix::Identity(base.rows(), base.cols())};
  for (int j = 1; j <= count; ++j) out.push_back(out.back() * base);
  return out;
}

std::pair<Matrix, Matrix> generator_pair(const Algebra& alg, const Generators& g) {
  switch (alg.kind()) {
    case Algebra::Kind::qp: return {g.q, g.p};
    case Algebra::Kind::aadag: return {g.adag, g.a};
    case Algebra::Kind::custom: break;
  }
  throw DomainError("no Fock representation for a custom algebra");
}

}  // namespace

Matrix matrix_of(const OpPoly& a, const Config& cfg, const ParamValues& params) {
  const Generators g = build_generators(cfg);
  const auto [x, y] = generator_pair(a.algebra(), g);
  int max_x = 0;
  int max_y = 0;
  for (const auto& [k, c] : a.terms()) {
    max_x = std::max(max_x, k.first);
    max_y = std::max(max_y, k.second);
  }
  const auto xs = matrix_powers(x, max_x);
  const auto ys = matrix_powers(y, max_y);
  Matrix out = Matrix::Zero(cfg.n, cfg.n);
  for (const auto& [k, c] : a.terms()) out += evaluate(c, cfg, params) * (xs[k.first] * ys[k.second]);
  return out;
}

double projected_max_abs(const Matrix& m, int rank) {
  return m.topLeftCorner(rank, rank).cwiseAbs().maxCoeff();
}

double projected_deviation(const Matrix& lhs, const Matrix& rhs, int rank) {
  const double diff = projected_max_abs(lhs - rhs, rank);
  const double scale = projected_max_abs(rhs, rank);
  return scale > 0 ? diff / scale : diff;
}

Matrix displacement(double xi, double eta, cplx s, const Config& cfg) {
  cfg.validate();
  Config wide = cfg;
  wide.n = cfg.exponential_dim();
  wide.proj_rank = cfg.n;
  const Generators g = build_generators(wide);
  const Matrix exponent = cplx(0.0, 1.0) * (xi * g.q + eta * g.p);
  const cplx phase = std::exp(cplx(0.0, -0.5) * cfg.hbar * s * xi * eta);
  return phase * Matrix(exponent.exp().topLeftCorner(cfg.n, cfg.n));
}

Matrix ordered_word_matrix(int n, int m, cplx s, OrderingRoute route, const Config& cfg) {
  if (n < 0 || m < 0) throw DomainError("ordered products need nonnegative exponents");
  const Generators g = build_generators(cfg);
  const bool split_x = route == OrderingRoute::split_x;
  const int outer = split_x ? n : m;
  const auto split = matrix_powers(split_x ? g.q : g.p, outer);
  const Matrix middle = matrix_powers(split_x ? g.p : g.q, split_x ? m : n).back();
  const cplx left_w = split_x ? 1.0 + s : 1.0 - s;
  const cplx right_w = split_x ? 1.0 - s : 1.0 + s;
  Matrix out = Matrix::Zero(cfg.n, cfg.n);
  for (int j = 0; j <= outer; ++j) {
    const double binom = std::tgamma(outer + 1.0) / (std::tgamma(j + 1.0) * std::tgamma(outer - j + 1.0));
    const cplx w = binom * std::pow(left_w, j) * std::pow(right_w, outer - j);
    out += w * (split[j] * middle * split[outer - j]);
  }
  return std::pow(0.5, outer) * out;
}

DisplacementReport displacement_check(double xi, double eta, const OpPoly& f, const Config& cfg) {
  if (f.algebra().kind() != Algebra::Kind::qp) {
    throw DomainError("displacement_check needs an operator in q and p");
  }
  if (f.total_degree() > cfg.n - cfg.rank()) {
    throw DomainError("degree of f exceeds the projection margin n - rank");
  }
  const Matrix d = displacement(xi, eta, 0.0, cfg);
  const Matrix lhs = d * matrix_of(f, cfg);
  const Scalar hbar = Scalar::hbar();
  const OpPoly moved = f.shifted(hbar * Scalar(GaussRat::from_double(eta)),
                                 -hbar * Scalar(GaussRat::from_double(xi)));
  const Matrix rhs = matrix_of(moved, cfg) * d;
  DisplacementReport out;
  out.xi = xi;
  out.eta = eta;
  out.deviation = projected_deviation(lhs, rhs, cfg.rank());
  out.tol = cfg.displacement_tol;
  out.passed = out.deviation < out.tol;
  return out;
}

namespace {

// Central O(h^2) stencils: (offset, weight) with the 1/h^order factor left out.
std::vector<std::pair<int, double>> stencil(int order) {
  switch (order) {
    case 0: return {{0, 1.0}};
    case 1: return {{-1, -0.5}, {1, 0.5}};
    case 2: return {{-1, 1.0}, {0, -2.0}, {1, 1.0}};
    case 3: return {{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}};
    case 4: return {{-2, 1.0}, {-1, -4.0}, {0, 6.0}, {1, -4.0}, {2, 1.0}};
    default: break;
  }
  throw DomainError("finite differences implemented up to fourth order, got " +
                    std::to_string(order));
}

class DisplacementGrid {
 public:
  DisplacementGrid(double xi0, double eta0, double h, cplx s, const Config& cfg)
      : xi0_(xi0), eta0_(eta0), h_(h), s_(s), cfg_(cfg) {}

  const Matrix& at(int i, int j) {
    auto it = cache_.find({i, j});
    if (it == cache_.end()) {
      it = cache_.emplace(std::pair{i, j}, displacement(xi0_ + i * h_, eta0_ + j * h_, s_, cfg_)).first;
    }
    return it->second;
  }

  // d_xi^c d_eta^d D at the centre.
  Matrix derivative(int c, int d) {
    Matrix out = Matrix::Zero(cfg_.n, cfg_.n);
    for (const auto& [i, wi] : stencil(c)) {
      for (const auto& [j, wj] : stencil(d)) out += (wi * wj) * at(i, j);
    }
    return out / (std::pow(h_, c) * std::pow(h_, d));
  }

 private:
  double xi0_;
  double eta0_;
  double h_;
  cplx s_;
  Config cfg_;
  std::map<std::pair<int, int>, Matrix> cache_;
};

struct Errors {
  double first_order;
  double generator;
};

Errors derivative_errors(cplx s, double xi0, double eta0, double h, const DiffOp& t_gen,
                         const Matrix& t_matrix, cplx r, const Config& cfg) {
  const Generators g = build_generators(cfg);
  DisplacementGrid grid(xi0, eta0, h, s, cfg);
  const Matrix& d = grid.at(0, 0);

  const Matrix fd_xi = grid.derivative(1, 0);
  const Matrix eq36 = cplx(0.0, 0.5) * ((1.0 + s) * (g.q * d) + (1.0 - s) * (d * g.q));
  Errors out{projected_deviation(fd_xi, eq36, cfg.rank()), 0.0};

  Matrix lhs = Matrix::Zero(cfg.n, cfg.n);
  for (const auto& [k, c] : t_gen.terms()) {
    const cplx w = c.evaluate(cfg.hbar, s, r) * std::pow(xi0, k.a) * std::pow(eta0, k.b);
    lhs += w * grid.derivative(k.c, k.d);
  }
  const Matrix rhs = t_matrix * d - d * t_matrix;
  out.generator = projected_deviation(lhs, rhs, cfg.rank());
  return out;
}

}  // namespace

DerivativeReport derivative_check(cplx s, double xi0, double eta0, double h, int n, int m, cplx r,
                                  const Config& cfg) {
  cfg.validate();
  if (!(h > 0)) throw DomainError("finite-difference step must be positive");
  const DiffOp t_gen = t_generator(n, m, Scalar::r(), Scalar::s());
  const Matrix t_matrix = matrix_of(s_ordered(n, m, Scalar::r()), cfg, {s, r});
  const Errors full = derivative_errors(s, xi0, eta0, h, t_gen, t_matrix, r, cfg);
  const Errors half = derivative_errors(s, xi0, eta0, h / 2, t_gen, t_matrix, r, cfg);
  DerivativeReport out;
  out.n = n;
  out.m = m;
  out.h = h;
  out.first_order_error = full.first_order;
  out.first_order_error_half = half.first_order;
  out.generator_error = full.generator;
  out.generator_error_half = half.generator;
  out.generator_derivative_order = t_gen.order();
  out.tol = cfg.fd_tol;
  out.passed = full.first_order < out.tol && full.generator < out.tol;
  return out;
}

}  // namespace wwgm::fock
