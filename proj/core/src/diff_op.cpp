#include "wwgm/diff_op.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "wwgm/combinatorics.hpp"
#include "wwgm/errors.hpp"
#include "poly_format.hpp"

namespace wwgm {

DiffOp::DiffOp(VarPair vp, const Scalar& c) : vars_(vp) { add_term({}, c); }

DiffOp DiffOp::term(VarPair vp, DiffKey key, const Scalar& c) {
  DiffOp out(vp);
  out.add_term(key, c);
  return out;
}

DiffOp DiffOp::coordinate(VarPair vp, int which) {
  return term(vp, which == 0 ? DiffKey{1, 0, 0, 0} : DiffKey{0, 1, 0, 0});
}

DiffOp DiffOp::partial(VarPair vp, int which) {
  return term(vp, which == 0 ? DiffKey{0, 0, 1, 0} : DiffKey{0, 0, 0, 1});
}

Scalar DiffOp::coeff(DiffKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar() : it->second;
}

int DiffOp::order() const {
  int o = 0;
  for (const auto& [k, c] : terms_) o = std::max(o, k.c + k.d);
  return o;
}

void DiffOp::add_term(DiffKey key, const Scalar& c) {
  if (key.a < 0 || key.b < 0 || key.c < 0 || key.d < 0) {
    throw DomainError("negative exponent in differential operator");
  }
  for (int e : {key.a, key.b, key.c, key.d}) check_degree(e, "differential operator");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  require_same_pair(vars_, o.vars_, "differential operator sum");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  require_same_pair(vars_, o.vars_, "differential operator difference");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

namespace {

// d^c v^e = sum_k C(c,k) e!/(e-k)! v^(e-k) d^(c-k); returns (k, weight) pairs.
std::vector<std::pair<int, mpz_class>> commute_derivative(int c, int e) {
  std::vector<std::pair<int, mpz_class>> out;
  for (int k = 0; k <= std::min(c, e); ++k) {
    out.emplace_back(k, binomial(c, k) * falling_factorial(e, k));
  }
  return out;
}

}  // namespace

DiffOp operator*(const DiffOp& x, const DiffOp& y) {
  require_same_pair(x.vars_, y.vars_, "differential operator composition");
  DiffOp out(x.vars_);
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      Scalar c = cx * cy;
      auto first = commute_derivative(kx.c, ky.a);
      auto second = commute_derivative(kx.d, ky.b);
      for (const auto& [k1, w1] : first) {
        for (const auto& [k2, w2] : second) {
          DiffKey key{kx.a + ky.a - k1, kx.b + ky.b - k2, kx.c - k1 + ky.c, kx.d - k2 + ky.d};
          out.add_term(key, c.scaled(GaussRat(mpq_class(w1 * w2))));
        }
      }
    }
  }
  return out;
}

DiffOp operator*(const Scalar& c, const DiffOp& op) {
  DiffOp out(op.vars_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : op.terms_) out.add_term(k, c * v);
  return out;
}

DiffOp DiffOp::operator-() const { return Scalar(-1) * *this; }

PhasePoly DiffOp::apply(const PhasePoly& f) const {
  require_same_pair(vars_, f.var_pair(), "differential operator application");
  PhasePoly out(vars_);
  for (const auto& [k, c] : terms_) {
    PhasePoly g = f.derivative(0, k.c).derivative(1, k.d);
    out += PhasePoly::monomial(vars_, k.a, k.b, c) * g;
  }
  return out;
}

DiffOp DiffOp::substitute(Unit u, const Scalar& value) const {
  DiffOp out(vars_);
  for (const auto& [k, c] : terms_) out.add_term(k, c.substitute(u, value));
  return out;
}

std::string DiffOp::to_string() const {
  detail::TermJoiner out;
  VarNames names = var_names(vars_);
  std::string d1 = std::string("d") + names.first;
  std::string d2 = std::string("d") + names.second;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const DiffKey& k = it->first;
    std::string mono = detail::power(names.first, k.a);
    detail::append_factor(mono, detail::power(names.second, k.b));
    detail::append_factor(mono, detail::power(d1, k.c));
    detail::append_factor(mono, detail::power(d2, k.d));
    out.add(it->second, mono);
  }
  return out.str();
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

}  // namespace wwgm
