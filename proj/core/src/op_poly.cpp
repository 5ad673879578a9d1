#include "wwgm/op_poly.hpp"

#include <algorithm>
#include <vector>

#include "wwgm/combinatorics.hpp"
#include "wwgm/errors.hpp"
#include "poly_format.hpp"

namespace wwgm {

Algebra Algebra::qp() { return Algebra(Kind::qp, Scalar::i() * Scalar::hbar(), Involution::self_adjoint); }

Algebra Algebra::aadag() { return Algebra(Kind::aadag, Scalar(-1), Involution::swap); }

Algebra Algebra::custom(const Scalar& lambda, Involution inv) {
  return Algebra(Kind::custom, lambda, inv);
}

const char* Algebra::x_name() const {
  switch (kind_) {
    case Kind::qp: return "Q";
    case Kind::aadag: return "Ad";
    case Kind::custom: return "X";
  }
  return "X";
}

const char* Algebra::y_name() const {
  switch (kind_) {
    case Kind::qp: return "P";
    case Kind::aadag: return "A";
    case Kind::custom: return "Y";
  }
  return "Y";
}

VarPair Algebra::phase_pair() const { return kind_ == Kind::aadag ? VarPair::Z_Zbar : VarPair::qp; }

const char* Algebra::name() const {
  switch (kind_) {
    case Kind::qp: return "qp";
    case Kind::aadag: return "aadag";
    case Kind::custom: return "custom";
  }
  return "?";
}

void require_same_algebra(const Algebra& a, const Algebra& b, const char* op) {
  if (!(a == b)) {
    throw AlgebraMismatch(std::string(op) + ": operands belong to algebras with commutators " +
                          a.lambda().to_string() + " and " + b.lambda().to_string());
  }
}

OpPoly::OpPoly(Algebra alg, const Scalar& c) : alg_(std::move(alg)) { add_term(0, 0, c); }

OpPoly OpPoly::monomial(const Algebra& alg, int n, int m, const Scalar& c) {
  OpPoly out(alg);
  out.add_term(n, m, c);
  return out;
}

Scalar OpPoly::coeff(int n, int m) const {
  auto it = terms_.find({n, m});
  return it == terms_.end() ? Scalar() : it->second;
}

int OpPoly::total_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

void OpPoly::add_term(int n, int m, const Scalar& c) {
  if (n < 0 || m < 0) throw DomainError("negative exponent in operator polynomial");
  check_degree(n, alg_.x_name());
  check_degree(m, alg_.y_name());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({n, m}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OpPoly& OpPoly::operator+=(const OpPoly& o) {
  require_same_algebra(alg_, o.alg_, "operator sum");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

OpPoly& OpPoly::operator-=(const OpPoly& o) {
  require_same_algebra(alg_, o.alg_, "operator difference");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

namespace {

// Y^b X^c = sum_k k! C(b,k) C(c,k) (-lambda)^k X^(c-k) Y^(b-k)
struct Reorder {
  explicit Reorder(const Scalar& lambda) : minus_lambda_(-lambda) {}

  const Scalar& power(int k) {
    while (static_cast<int>(powers_.size()) <= k) {
      powers_.push_back(powers_.empty() ? Scalar(1) : powers_.back() * minus_lambda_);
    }
    return powers_[k];
  }

  Scalar minus_lambda_;
  std::vector<Scalar> powers_;
};

Scalar pairing_weight(int k, int b, int c) {
  return Scalar(GaussRat(mpq_class(factorial(k) * binomial(b, k) * binomial(c, k))));
}

}  // namespace

OpPoly operator*(const OpPoly& a, const OpPoly& b) {
  require_same_algebra(a.alg_, b.alg_, "operator product");
  OpPoly out(a.alg_);
  Reorder reorder(a.alg_.lambda());
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Scalar c = ca * cb;
      int ys = ka.second;
      int xs = kb.first;
      for (int k = 0; k <= std::min(ys, xs); ++k) {
        out.add_term(ka.first + xs - k, ys - k + kb.second,
                     c * pairing_weight(k, ys, xs) * reorder.power(k));
      }
    }
  }
  return out;
}

OpPoly operator*(const Scalar& c, const OpPoly& a) {
  OpPoly out(a.alg_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : a.terms_) out.add_term(k.first, k.second, c * v);
  return out;
}

OpPoly OpPoly::operator-() const { return Scalar(-1) * *this; }

OpPoly OpPoly::pow(int e) const {
  if (e < 0) throw DomainError("negative power of an operator");
  OpPoly out(alg_, Scalar(1));
  for (int j = 0; j < e; ++j) out = out * *this;
  return out;
}

OpPoly OpPoly::adjoint(bool real_params) const {
  OpPoly out(alg_);
  if (alg_.involution() == Involution::swap) {
    for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, c.conj(real_params));
    return out;
  }
  Reorder reorder(alg_.lambda());
  for (const auto& [k, c] : terms_) {
    // (X^n Y^m)^dagger = Y^m X^n
    Scalar cc = c.conj(real_params);
    int n = k.first;
    int m = k.second;
    for (int j = 0; j <= std::min(n, m); ++j) {
      out.add_term(n - j, m - j, cc * pairing_weight(j, m, n) * reorder.power(j));
    }
  }
  return out;
}

OpPoly OpPoly::shifted(const Scalar& dx, const Scalar& dy) const {
  OpPoly out(alg_);
  for (const auto& [k, c] : terms_) {
    for (int i = 0; i <= k.first; ++i) {
      Scalar cx = c * dx.pow(k.first - i) * Scalar(GaussRat(mpq_class(binomial(k.first, i))));
      for (int j = 0; j <= k.second; ++j) {
        out.add_term(i, j,
                     cx * dy.pow(k.second - j) * Scalar(GaussRat(mpq_class(binomial(k.second, j)))));
      }
    }
  }
  return out;
}

OpPoly OpPoly::substitute(Unit u, const Scalar& value) const {
  OpPoly out(alg_);
  for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, c.substitute(u, value));
  return out;
}

std::string OpPoly::to_string() const {
  detail::TermJoiner out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono = detail::power(alg_.x_name(), it->first.first);
    detail::append_factor(mono, detail::power(alg_.y_name(), it->first.second));
    out.add(it->second, mono);
  }
  return out.str();
}

OpPoly commutator(const OpPoly& a, const OpPoly& b) { return a * b - b * a; }

}  // namespace wwgm
