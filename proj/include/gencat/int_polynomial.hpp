#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gencat/errors.hpp"

namespace gencat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Univariate polynomial in d with arbitrary-precision integer coefficients.
///
/// Coefficient k multiplies d^k. The stored sequence is always trimmed so the
/// last coefficient is nonzero; the zero polynomial has no coefficients.
class IntPolynomial {
public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { trim(); }
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(const BigInt& c) { return IntPolynomial({c}); }

  /// c * d^k
  static IntPolynomial monomial(const BigInt& c, std::size_t k) {
    std::vector<BigInt> v(k + 1);
    v[k] = c;
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of d^k, zero past the stored range.
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  BigInt evaluate(const BigInt& d) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * d + *it;
    return acc;
  }

  BigRational evaluate(const BigRational& d) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * d + BigRational(*it);
    return acc;
  }

  /// Value at a double, computed exactly in rational arithmetic and rounded once.
  double evaluate(double d) const {
    return static_cast<double>(evaluate(BigRational(d)));
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator*=(const BigInt& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  /// Multiply by d^k.
  IntPolynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> v(k, BigInt(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const BigInt& c, IntPolynomial a) { return a *= c; }
  friend IntPolynomial operator-(IntPolynomial a) { return a *= BigInt(-1); }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const BigInt& c = coeffs_[k];
      if (c == 0) continue;
      bool neg = c < 0;
      BigInt mag = neg ? BigInt(-c) : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (mag != 1 || k == 0) out += mag.str();
      if (k >= 1) out += "d";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Long division in Z[d]. The divisor's leading coefficient must divide every
/// intermediate leading term; otherwise the quotient is not integral and a
/// NumericError is raised.
inline PolyDivision divide(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<BigInt> rem = num.coeffs();
  const int dd = den.degree();
  const BigInt& lead = den.coeffs().back();
  if (num.degree() < dd) return {IntPolynomial{}, num};
  std::vector<BigInt> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  for (int k = num.degree(); k >= dd; --k) {
    const BigInt& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (top % lead != 0) throw NumericError("polynomial division leaves a non-integral quotient");
    BigInt q = top / lead;
    quot[static_cast<std::size_t>(k - dd)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * den.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

/// Coefficient reversal relative to the degree bound n: a_i d^i -> a_i d^{n-i}.
inline IntPolynomial rev(const IntPolynomial& p, int n) {
  if (n < 0) throw DomainError("rev: negative degree bound");
  if (p.degree() > n)
    throw DomainError("rev: degree " + std::to_string(p.degree()) + " exceeds bound " + std::to_string(n));
  std::vector<BigInt> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= p.degree(); ++i) v[static_cast<std::size_t>(n - i)] = p.coeffs()[static_cast<std::size_t>(i)];
  return IntPolynomial(std::move(v));
}

}  // namespace gencat
