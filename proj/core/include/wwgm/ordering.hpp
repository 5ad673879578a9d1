#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "wwgm/combinatorics.hpp"
#include "wwgm/errors.hpp"
#include "wwgm/op_poly.hpp"
#include "wwgm/scalar.hpp"

namespace wwgm {

/// Number of ways to contract k of n X's with k of m Y's: C(n,k) C(m,k) k!.
mpz_class b_coeff(int k, int n, int m);

/// The two explicit binomial forms of an s-ordered product.
enum class OrderingRoute {
  split_x,  // 2^-n sum_j C(n,j)(1+s)^j (1-s)^(n-j) X^j Y^m X^(n-j)
  split_y,  // 2^-m sum_k C(m,k)(1-s)^k (1+s)^(m-k) Y^k X^n Y^(m-k)
};

namespace detail {

inline void require_nonnegative(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("ordered products need nonnegative exponents");
}

template <typename T>
std::vector<T> powers_of(const T& base, const T& identity, int count) {
  std::vector<T> out{identity};
  for (int j = 1; j <= count; ++j) out.push_back(out.back() * base);
  return out;
}

}  // namespace detail

/// {A^n B^m}_s for any pair whose commutator is central, evaluated with the
/// multiplication of T. `identity` is the unit of T. Used for operator
/// polynomials and for products of Bopp operators.
template <typename T>
T s_ordered_pair(const T& a, const T& b, int n, int m, const Scalar& s, const T& identity,
                 OrderingRoute route = OrderingRoute::split_x) {
  detail::require_nonnegative(n, m);
  const bool split_x = route == OrderingRoute::split_x;
  const int outer = split_x ? n : m;
  const T& split = split_x ? a : b;
  const T& middle = split_x ? b : a;
  // Weight of the factor standing left of the middle block.
  const Scalar left_w = split_x ? Scalar(1) + s : Scalar(1) - s;
  const Scalar right_w = split_x ? Scalar(1) - s : Scalar(1) + s;

  auto split_pow = detail::powers_of(split, identity, outer);
  T middle_pow = detail::powers_of(middle, identity, split_x ? m : n).back();
  auto left_pow = detail::powers_of(left_w, Scalar(1), outer);
  auto right_pow = detail::powers_of(right_w, Scalar(1), outer);

  T out = Scalar(0) * identity;
  for (int j = 0; j <= outer; ++j) {
    Scalar w = left_pow[j] * right_pow[outer - j] *
               Scalar(GaussRat(mpq_class(binomial(outer, j))));
    out += w * (split_pow[j] * middle_pow * split_pow[outer - j]);
  }
  mpq_class scale(1);
  scale.get_den() <<= outer;
  scale.canonicalize();
  return Scalar(GaussRat(scale)) * out;
}

/// The s-ordered product t_nm^(s) (y_nm^(s) for the a^dagger, a algebra).
OpPoly s_ordered(int n, int m, const Scalar& s, const Algebra& alg = Algebra::qp(),
                 OrderingRoute route = OrderingRoute::split_x);

/// t_nm^(from) = sum_k coeff_k t_{n-k,m-k}^(to), with
/// coeff_k = 2^-k b(k,n,m) [lambda (from - to)]^k.
struct OrderExpansion {
  int n = 0;
  int m = 0;
  Scalar s_from;
  Scalar s_to;
  std::vector<std::pair<int, Scalar>> terms;  // (k, coeff_k), zero coefficients omitted
};

OrderExpansion convert_order(int n, int m, const Scalar& s_from, const Scalar& s_to,
                             const Algebra& alg = Algebra::qp());

// Evaluates an expansion back into standard-order form.
OpPoly expand(const OrderExpansion& e, const Algebra& alg = Algebra::qp());

// Largest n + m accepted by symmetrize_oracle.
inline constexpr int kMaxSymmetrizedLength = 12;

/// Average of all distinct words with n X's and m Y's.
OpPoly symmetrize_oracle(int n, int m, const Algebra& alg = Algebra::qp());

/// alpha t^(s)_nm + conj(alpha) t^(-conj s)_nm for self-adjoint generators,
/// alpha y^(s)_nm + conj(alpha) y^(conj s)_mn for the swapping involution.
/// Always self-adjoint.
OpPoly hermitian_combo(int n, int m, const GaussRat& s, const GaussRat& alpha,
                       const Algebra& alg = Algebra::qp());

}  // namespace wwgm
