#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace wwgm {

// Hard cap on every exponent carried by a polynomial value.
inline constexpr int kMaxDegree = 64;

// Throws DegreeOverflow when `degree` exceeds kMaxDegree.
void check_degree(long degree, const char* what);

/// Exact Gaussian rational re + i*im.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class re, mpq_class im = 0);

  static GaussRat i() { return GaussRat(0, 1); }
  static GaussRat rational(long num, long den);
  // Exact binary value of a double.
  static GaussRat from_double(double re, double im = 0.0);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  GaussRat inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // "3/2", "-i", "1/2*i", "(1 - 2*i)"; parseable by the expression grammar.
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

/// The formal units a Scalar may carry. `hbar` is Planck's constant, `s` the
/// ordering parameter and `r` a second, independent ordering parameter (used
/// wherever two orderings appear at once, e.g. s -> s' conversions or the
/// r-ordered Bopp products).
enum class Unit { hbar, s, r };

const char* unit_name(Unit u);

struct UnitPowers {
  std::uint8_t hbar = 0;
  std::uint8_t s = 0;
  std::uint8_t r = 0;

  int get(Unit u) const;
  void set(Unit u, int e);
  auto operator<=>(const UnitPowers&) const = default;
};

/// Exact coefficient: a polynomial in (hbar, s, r) over the Gaussian
/// rationals. No zero coefficients are ever stored.
class Scalar {
 public:
  using Terms = std::map<UnitPowers, GaussRat>;

  Scalar() = default;
  Scalar(long v) : Scalar(GaussRat(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const GaussRat& c);               // NOLINT(google-explicit-constructor)

  static Scalar hbar() { return unit(Unit::hbar); }
  static Scalar s() { return unit(Unit::s); }
  static Scalar r() { return unit(Unit::r); }
  static Scalar unit(Unit u);
  static Scalar i() { return Scalar(GaussRat::i()); }
  static Scalar rational(long num, long den) { return Scalar(GaussRat::rational(num, den)); }
  static Scalar term(const UnitPowers& powers, const GaussRat& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has(Unit u) const;
  // True when no formal unit other than hbar is present.
  bool is_concrete() const { return !has(Unit::s) && !has(Unit::r); }
  bool is_constant() const;
  // Requires is_constant().
  GaussRat constant_value() const;
  int degree(Unit u) const;
  int min_degree(Unit u) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar pow(int e) const;

  Scalar scaled(const GaussRat& c) const;
  // Divides by hbar; every term must carry hbar at least once.
  Scalar divided_by_hbar() const;

  // Complex conjugate with hbar real. If `real_params` is false, s and r must
  // be absent; otherwise they are treated as real formal variables.
  Scalar conj(bool real_params = false) const;

  Scalar substitute(Unit u, const Scalar& value) const;
  std::complex<double> evaluate(double hbar, std::complex<double> s = 0.0,
                                std::complex<double> r = 0.0) const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;
  // True when to_string() is a single product factor (no top-level +/-).
  bool is_atomic() const;

 private:
  void add_term(const UnitPowers& powers, const GaussRat& c);

  Terms terms_;
};

}  // namespace wwgm
