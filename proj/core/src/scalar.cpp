#include "wwgm/scalar.hpp"

#include <cmath>
#include <vector>

#include "wwgm/errors.hpp"

namespace wwgm {

void check_degree(long degree, const char* what) {
  if (degree > kMaxDegree) {
    throw DegreeOverflow(std::string(what) + " degree " + std::to_string(degree) +
                         " exceeds cap " + std::to_string(kMaxDegree));
  }
}

// ---------------------------------------------------------------------------
// GaussRat

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRat GaussRat::rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussRat(q);
}

GaussRat GaussRat::from_double(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) throw DomainError("non-finite value");
  return GaussRat(mpq_class(re), mpq_class(im));
}

GaussRat GaussRat::inverse() const {
  mpq_class norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw DomainError("division by zero");
  return GaussRat(re_ / norm, -im_ / norm);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussRat::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  auto imag_part = [](const mpq_class& v) -> std::string {
    if (v == 1) return "i";
    if (v == -1) return "-i";
    return v.get_str() + "*i";
  };
  if (sgn(re_) == 0) return imag_part(im_);
  if (sgn(im_) < 0) return "(" + re_.get_str() + " - " + imag_part(-im_) + ")";
  return "(" + re_.get_str() + " + " + imag_part(im_) + ")";
}

// ---------------------------------------------------------------------------
// UnitPowers

const char* unit_name(Unit u) {
  switch (u) {
    case Unit::hbar: return "hbar";
    case Unit::s: return "s";
    case Unit::r: return "r";
  }
  return "?";
}

int UnitPowers::get(Unit u) const {
  switch (u) {
    case Unit::hbar: return hbar;
    case Unit::s: return s;
    case Unit::r: return r;
  }
  return 0;
}

void UnitPowers::set(Unit u, int e) {
  check_degree(e, unit_name(u));
  switch (u) {
    case Unit::hbar: hbar = static_cast<std::uint8_t>(e); break;
    case Unit::s: s = static_cast<std::uint8_t>(e); break;
    case Unit::r: r = static_cast<std::uint8_t>(e); break;
  }
}

namespace {

constexpr Unit kUnits[] = {Unit::hbar, Unit::s, Unit::r};

UnitPowers multiply(const UnitPowers& a, const UnitPowers& b) {
  UnitPowers out;
  for (Unit u : kUnits) out.set(u, a.get(u) + b.get(u));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const GaussRat& c) {
  if (!c.is_zero()) terms_.emplace(UnitPowers{}, c);
}

Scalar Scalar::unit(Unit u) {
  UnitPowers p;
  p.set(u, 1);
  return term(p, GaussRat(1));
}

Scalar Scalar::term(const UnitPowers& powers, const GaussRat& c) {
  Scalar out;
  out.add_term(powers, c);
  return out;
}

void Scalar::add_term(const UnitPowers& powers, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(powers, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Scalar::has(Unit u) const {
  for (const auto& [p, c] : terms_) {
    if (p.get(u) > 0) return true;
  }
  return false;
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == UnitPowers{});
}

GaussRat Scalar::constant_value() const {
  if (!is_constant()) throw SymbolicScalar("scalar " + to_string() + " is not a constant");
  return terms_.empty() ? GaussRat() : terms_.begin()->second;
}

int Scalar::degree(Unit u) const {
  int d = 0;
  for (const auto& [p, c] : terms_) d = std::max(d, p.get(u));
  return d;
}

int Scalar::min_degree(Unit u) const {
  if (terms_.empty()) return 0;
  int d = kMaxDegree;
  for (const auto& [p, c] : terms_) d = std::min(d, p.get(u));
  return d;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) out.add_term(multiply(pa, pb), ca * cb);
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::operator-() const {
  Scalar out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
  return out;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) throw DomainError("negative power of a scalar");
  Scalar out(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return out;
}

Scalar Scalar::scaled(const GaussRat& c) const {
  if (c.is_zero()) return {};
  Scalar out;
  for (const auto& [p, v] : terms_) out.terms_.emplace(p, v * c);
  return out;
}

Scalar Scalar::divided_by_hbar() const {
  Scalar out;
  for (const auto& [p, c] : terms_) {
    if (p.hbar == 0) throw DomainError("scalar " + to_string() + " is not divisible by hbar");
    UnitPowers q = p;
    q.hbar = static_cast<std::uint8_t>(p.hbar - 1);
    out.terms_.emplace(q, c);
  }
  return out;
}

Scalar Scalar::conj(bool real_params) const {
  if (!real_params && !is_concrete()) {
    throw ConjugationUndefined("conjugation of symbolic ordering parameter in " + to_string());
  }
  Scalar out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, c.conj());
  return out;
}

Scalar Scalar::substitute(Unit u, const Scalar& value) const {
  Scalar out;
  std::vector<Scalar> powers{Scalar(1)};
  for (const auto& [p, c] : terms_) {
    int e = p.get(u);
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    UnitPowers rest = p;
    rest.set(u, 0);
    out += Scalar::term(rest, c) * powers[e];
  }
  return out;
}

std::complex<double> Scalar::evaluate(double hbar, std::complex<double> s,
                                      std::complex<double> r) const {
  std::complex<double> sum = 0.0;
  for (const auto& [p, c] : terms_) {
    sum += c.to_complex() * std::pow(hbar, p.hbar) * std::pow(s, static_cast<int>(p.s)) *
           std::pow(r, static_cast<int>(p.r));
  }
  return sum;
}

namespace {

std::string units_string(const UnitPowers& p) {
  std::string out;
  for (Unit u : kUnits) {
    int e = p.get(u);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += unit_name(u);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [p, c] = *it;
    std::string units = units_string(p);
    std::string t;
    if (units.empty()) {
      t = c.to_string();
    } else if (c == GaussRat(1)) {
      t = units;
    } else if (c == GaussRat(-1)) {
      t = "-" + units;
    } else {
      t = c.to_string() + "*" + units;
    }
    if (out.empty()) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

bool Scalar::is_atomic() const { return terms_.size() <= 1; }

}  // namespace wwgm
