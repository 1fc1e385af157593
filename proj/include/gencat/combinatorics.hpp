#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gencat/dyck.hpp"
#include "gencat/int_polynomial.hpp"
#include "gencat/pair_partition.hpp"

// Exact generalized Catalan polynomials
//
//   pi_n(d) = sum over Dyck paths w of order n of d^{touch_count(w)},
//
// computed four independent ways (path enumeration, first-return convolution,
// the linear step with exact division by 1 - d, and the Catalan-triangle closed
// form), plus the pair-partition statistics that produce the same polynomials
// through the outer/inner block counts.

namespace gencat {

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// c_n = C(2n, n) / (n + 1).
inline BigInt catalan(int n) {
  if (n < 0) throw DomainError("catalan: negative order");
  return binomial(2 * n, n) / (n + 1);
}

inline std::vector<BigInt> catalan_sequence(int n_max) {
  std::vector<BigInt> c;
  c.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) c.push_back(catalan(n));
  return c;
}

/// Sum over Dyck paths of d^{touch_count}, by exhaustive enumeration.
inline IntPolynomial pi_enumerate(int n, int cap = kEnumerationCap) {
  check_enumeration_cap("pi_enumerate", n, cap);
  if (n == 0) return IntPolynomial::constant(1);
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
  for (const DyckPath& w : enumerate_dyck_paths(n, cap)) ++tally[static_cast<std::size_t>(touch_count(w))];
  std::vector<BigInt> coeffs(tally.begin(), tally.end());
  return IntPolynomial(std::move(coeffs));
}

/// pi_0..pi_{n_max} from pi_n = d * sum_{k=1}^{n} c_{k-1} pi_{n-k}.
inline std::vector<IntPolynomial> pi_convolution(int n_max) {
  if (n_max < 0) throw DomainError("pi_convolution: negative n_max");
  const auto c = catalan_sequence(n_max);
  std::vector<IntPolynomial> pi;
  pi.reserve(static_cast<std::size_t>(n_max) + 1);
  pi.push_back(IntPolynomial::constant(1));
  for (int n = 1; n <= n_max; ++n) {
    IntPolynomial acc;
    for (int k = 1; k <= n; ++k) acc += pi[static_cast<std::size_t>(n - k)] * c[static_cast<std::size_t>(k - 1)];
    pi.push_back(acc.shifted(1));
  }
  return pi;
}

/// pi_n from pi_{n-1} through (1 - d) pi_n = -d^2 pi_{n-1} + d c_{n-1}.
///
/// The division by (1 - d) is carried out in Z[d] and must be exact; a nonzero
/// remainder means `prev` was not pi_{n-1} and raises NumericError.
inline IntPolynomial pi_linear_step(const IntPolynomial& prev, int n) {
  if (n < 1) throw DomainError("pi_linear_step: n must be positive");
  IntPolynomial numer = IntPolynomial::monomial(catalan(n - 1), 1) - prev.shifted(2);
  const IntPolynomial one_minus_d{1, -1};
  auto [quot, rem] = divide(numer, one_minus_d);
  if (!rem.is_zero())
    throw NumericError("pi_linear_step: division by (1 - d) left remainder " + rem.to_string());
  return quot;
}

/// pi_n by iterating pi_linear_step from pi_0 = 1.
inline IntPolynomial pi_linear(int n) {
  if (n < 0) throw DomainError("pi_linear: negative order");
  IntPolynomial p = IntPolynomial::constant(1);
  for (int k = 1; k <= n; ++k) p = pi_linear_step(p, k);
  return p;
}

/// Row n of the Catalan triangle by the partial-sum recursion
/// t_{0,k} = delta_{0,k}, t_{n,k} = sum_{j<=k} t_{n-1,j} for k <= n, zero beyond.
inline std::vector<BigInt> catalan_triangle_row(int n) {
  if (n < 0) throw DomainError("catalan_triangle_row: negative row");
  std::vector<BigInt> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(r) + 1);
    BigInt running = 0;
    for (int k = 0; k <= r; ++k) {
      if (k < static_cast<int>(row.size())) running += row[static_cast<std::size_t>(k)];
      next[static_cast<std::size_t>(k)] = running;
    }
    row = std::move(next);
  }
  return row;
}

/// Ballot-number form, valid for 0 <= k <= n.
inline BigInt catalan_triangle_binomial(int n, int k) {
  if (k > n) return 0;
  return binomial(n + k, k) - binomial(n + k, k - 1);
}

/// t_{n,k}. Both the recursion and the binomial form are evaluated and must agree.
inline BigInt catalan_triangle(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("catalan_triangle: negative index");
  const auto row = catalan_triangle_row(n);
  BigInt by_recursion = k < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(k)] : BigInt(0);
  if (n >= 1) {
    BigInt by_binomial = catalan_triangle_binomial(n, k);
    if (by_binomial != by_recursion)
      throw NumericError("catalan_triangle: recursion and binomial form disagree at (" + std::to_string(n) + "," +
                         std::to_string(k) + ")");
  }
  return by_recursion;
}

/// pi_n = sum_{k=1}^{n} t_{n-1,n-k} d^k, pi_0 = 1.
inline IntPolynomial pi_closed_form(int n) {
  if (n < 0) throw DomainError("pi_closed_form: negative order");
  if (n == 0) return IntPolynomial::constant(1);
  const auto row = catalan_triangle_row(n - 1);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(n - k)];
  return IntPolynomial(std::move(coeffs));
}

/// sum over NC_2(2n) of d^{#inner blocks}.
inline IntPolynomial c_poly(int n, int cap = kEnumerationCap) {
  check_enumeration_cap("c_poly", n, cap);
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
  enumerate_nc_pair_partitions(
      n, [&](const PairPartition& p) { ++tally[static_cast<std::size_t>(p.inner_count())]; }, cap);
  return IntPolynomial(std::vector<BigInt>(tally.begin(), tally.end()));
}

/// sum over NC_2(2n) of d^{#outer blocks}; equals pi_n.
inline IntPolynomial outer_block_poly(int n, int cap = kEnumerationCap) {
  check_enumeration_cap("outer_block_poly", n, cap);
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
  enumerate_nc_pair_partitions(
      n, [&](const PairPartition& p) { ++tally[static_cast<std::size_t>(p.outer_count())]; }, cap);
  return IntPolynomial(std::vector<BigInt>(tally.begin(), tally.end()));
}

/// a_n = 2^{-n} (1 + sum_{k<n} c_k (-2)^k), the generalized Catalan numbers
/// C(-1, n). Computed in exact rationals; the result is checked to be integral.
inline BigRational generalized_catalan_neg1(int n) {
  if (n < 0) throw DomainError("generalized_catalan_neg1: negative order");
  BigRational sum = 1;
  BigInt power = 1;  // (-2)^k
  for (int k = 0; k < n; ++k) {
    sum += BigRational(catalan(k) * power);
    power *= -2;
  }
  BigRational a = sum / BigRational(BigInt(1) << n);
  if (denominator(a) != 1) throw NumericError("generalized_catalan_neg1: non-integral a_" + std::to_string(n));
  return a;
}

}  // namespace gencat
