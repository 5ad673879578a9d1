#include "wwgm/phase_poly.hpp"

#include <algorithm>

#include "wwgm/combinatorics.hpp"
#include "wwgm/errors.hpp"
#include "poly_format.hpp"

namespace wwgm {

VarNames var_names(VarPair vp) {
  switch (vp) {
    case VarPair::qp: return {"q", "p"};
    case VarPair::xi_eta: return {"xi", "eta"};
    case VarPair::z_zbar: return {"z", "zbar"};
    case VarPair::Z_Zbar: return {"Zb", "Z"};
  }
  return {"?", "?"};
}

const char* var_pair_name(VarPair vp) {
  switch (vp) {
    case VarPair::qp: return "qp";
    case VarPair::xi_eta: return "xi_eta";
    case VarPair::z_zbar: return "z_zbar";
    case VarPair::Z_Zbar: return "Z_Zbar";
  }
  return "?";
}

std::optional<VarPair> parse_var_pair(std::string_view name) {
  for (VarPair vp : {VarPair::qp, VarPair::xi_eta, VarPair::z_zbar, VarPair::Z_Zbar}) {
    if (name == var_pair_name(vp)) return vp;
  }
  return std::nullopt;
}

void require_same_pair(VarPair a, VarPair b, const char* op) {
  if (a != b) {
    throw VarPairMismatch(std::string(op) + ": variable pairs " + var_pair_name(a) + " and " +
                          var_pair_name(b) + " differ");
  }
}

PhasePoly::PhasePoly(VarPair vp, const Scalar& c) : vars_(vp) { add_term(0, 0, c); }

PhasePoly PhasePoly::monomial(VarPair vp, int a, int b, const Scalar& c) {
  PhasePoly out(vp);
  out.add_term(a, b, c);
  return out;
}

Scalar PhasePoly::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Scalar() : it->second;
}

int PhasePoly::total_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

void PhasePoly::add_term(int a, int b, const Scalar& c) {
  if (a < 0 || b < 0) throw DomainError("negative exponent in phase-space polynomial");
  check_degree(a, var_names(vars_).first);
  check_degree(b, var_names(vars_).second);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
  require_same_pair(vars_, o.vars_, "phase polynomial sum");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
  require_same_pair(vars_, o.vars_, "phase polynomial difference");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
  require_same_pair(a.vars_, b.vars_, "phase polynomial product");
  PhasePoly out(a.vars_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

PhasePoly operator*(const Scalar& c, const PhasePoly& f) {
  PhasePoly out(f.vars_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : f.terms_) out.add_term(k.first, k.second, c * v);
  return out;
}

PhasePoly PhasePoly::operator-() const { return Scalar(-1) * *this; }

PhasePoly PhasePoly::derivative(int which, int order) const {
  PhasePoly out(vars_);
  for (const auto& [k, c] : terms_) {
    int e = which == 0 ? k.first : k.second;
    if (e < order) continue;
    Scalar f = c.scaled(GaussRat(mpq_class(falling_factorial(e, order))));
    if (which == 0) {
      out.add_term(e - order, k.second, f);
    } else {
      out.add_term(k.first, e - order, f);
    }
  }
  return out;
}

PhasePoly PhasePoly::substitute(Unit u, const Scalar& value) const {
  return map_coefficients([&](const Scalar& c) { return c.substitute(u, value); });
}

std::string PhasePoly::to_string() const {
  detail::TermJoiner out;
  VarNames names = var_names(vars_);
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono = detail::power(names.first, it->first.first);
    detail::append_factor(mono, detail::power(names.second, it->first.second));
    out.add(it->second, mono);
  }
  return out.str();
}

}  // namespace wwgm
