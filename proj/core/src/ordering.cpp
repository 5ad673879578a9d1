#include "wwgm/ordering.hpp"

#include <algorithm>
#include <string>

namespace wwgm {

mpz_class b_coeff(int k, int n, int m) {
  if (k < 0 || n < 0 || m < 0) throw DomainError("b_coeff arguments must be nonnegative");
  if (k > std::min(n, m)) {
    throw DomainError("b_coeff: k = " + std::to_string(k) + " exceeds min(n, m)");
  }
  return binomial(n, k) * binomial(m, k) * factorial(k);
}

OpPoly s_ordered(int n, int m, const Scalar& s, const Algebra& alg, OrderingRoute route) {
  detail::require_nonnegative(n, m);
  check_degree(n + m, "ordered product");
  return s_ordered_pair(OpPoly::x(alg), OpPoly::y(alg), n, m, s, OpPoly(alg, Scalar(1)), route);
}

OrderExpansion convert_order(int n, int m, const Scalar& s_from, const Scalar& s_to,
                             const Algebra& alg) {
  detail::require_nonnegative(n, m);
  OrderExpansion out{n, m, s_from, s_to, {}};
  const Scalar step = alg.lambda() * (s_from - s_to);
  Scalar step_pow(1);
  mpq_class half_pow(1);
  for (int k = 0; k <= std::min(n, m); ++k) {
    Scalar c = step_pow * Scalar(GaussRat(half_pow * mpq_class(b_coeff(k, n, m))));
    if (!c.is_zero()) out.terms.emplace_back(k, c);
    step_pow *= step;
    half_pow /= 2;
  }
  return out;
}

OpPoly expand(const OrderExpansion& e, const Algebra& alg) {
  OpPoly out(alg);
  for (const auto& [k, c] : e.terms) out += c * s_ordered(e.n - k, e.m - k, e.s_to, alg);
  return out;
}

OpPoly symmetrize_oracle(int n, int m, const Algebra& alg) {
  detail::require_nonnegative(n, m);
  if (n + m > kMaxSymmetrizedLength) {
    throw DomainError("symmetrize_oracle: n + m = " + std::to_string(n + m) + " exceeds " +
                      std::to_string(kMaxSymmetrizedLength));
  }
  std::string word = std::string(n, 'X') + std::string(m, 'Y');
  const OpPoly x = OpPoly::x(alg);
  const OpPoly y = OpPoly::y(alg);
  OpPoly sum(alg);
  long count = 0;
  do {
    OpPoly w(alg, Scalar(1));
    for (char c : word) w = w * (c == 'X' ? x : y);
    sum += w;
    ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return Scalar(GaussRat::rational(1, count)) * sum;
}

OpPoly hermitian_combo(int n, int m, const GaussRat& s, const GaussRat& alpha, const Algebra& alg) {
  if (alg.involution() == Involution::self_adjoint) {
    return Scalar(alpha) * s_ordered(n, m, Scalar(s), alg) +
           Scalar(alpha.conj()) * s_ordered(n, m, Scalar(-s.conj()), alg);
  }
  return Scalar(alpha) * s_ordered(n, m, Scalar(s), alg) +
         Scalar(alpha.conj()) * s_ordered(m, n, Scalar(s.conj()), alg);
}

}  // namespace wwgm
