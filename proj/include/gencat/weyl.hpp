#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "gencat/combinatorics.hpp"
#include "gencat/errors.hpp"
#include "gencat/tolerances.hpp"

// Closed-form limit Weyl function
//
//   Q_d(z) = s(z) + z/d = ((2 - d) z + d sqrt(z^2 - 4)) / (2d),
//
// where s is the Stieltjes transform of the semicircle law, together with its
// expansion at infinity, the generating functions of c_n and pi_n(d), and the
// zeros of Q_d off [-2, 2].

namespace gencat::weyl {

using Complex = std::complex<double>;

inline void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError(std::string(what) + ": non-finite argument");
}

inline void require_nonzero_d(double d, const char* what) {
  if (!std::isfinite(d)) throw DomainError(std::string(what) + ": d must be finite");
  if (d == 0.0) throw DomainError(std::string(what) + ": d must be nonzero");
}

inline bool on_semicircle_cut(Complex z) { return z.imag() == 0.0 && std::abs(z.real()) <= 2.0; }

/// sqrt(z - 2) * sqrt(z + 2) with principal factors: analytic off [-2, 2]
/// and asymptotic to z at infinity.
inline Complex sqrt_branch(Complex z) {
  require_finite(z, "sqrt_branch");
  if (on_semicircle_cut(z)) throw CutError("sqrt_branch: z lies on the cut [-2, 2]");
  return std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
}

/// Stieltjes transform of the semicircle law, (-z + sqrt(z^2 - 4)) / 2.
/// Evaluated as -2 / (z + sqrt(z^2 - 4)), which has no cancellation.
inline Complex semicircle_stieltjes(Complex z) { return -2.0 / (z + sqrt_branch(z)); }

/// Q_d(z). Both forms are evaluated and checked against each other.
inline Complex q_limit(double d, Complex z) {
  require_nonzero_d(d, "q_limit");
  const Complex root = sqrt_branch(z);
  const Complex stieltjes = -2.0 / (z + root);
  const Complex sum_form = stieltjes + z / d;
  const Complex ratio_form = ((2.0 - d) * z + d * root) / (2.0 * d);
  const double scale = std::abs(stieltjes) + std::abs(z / d) + std::abs(root) / 2.0;
  if (std::abs(sum_form - ratio_form) > tol::kWeylForms * scale)
    throw NumericError("q_limit: closed forms disagree");
  return sum_form;
}

/// Catalan generating function (1 - sqrt(1 - 4z)) / (2z), evaluated as
/// 2 / (1 + sqrt(1 - 4z)); equals 1 at z = 0. The ray [1/4, inf) is the cut.
inline Complex catalan_gf(Complex z) {
  require_finite(z, "catalan_gf");
  if (z.imag() == 0.0 && z.real() >= 0.25) throw CutError("catalan_gf: z on the branch cut [1/4, inf)");
  return 2.0 / (1.0 + std::sqrt(1.0 - 4.0 * z));
}

/// Generating function of pi_n(d): 1 / (1 - z d F(z)) = 2 / (2 - d + d sqrt(1 - 4z)).
inline Complex pi_gf(double d, Complex z) {
  require_nonzero_d(d, "pi_gf");
  const Complex f = catalan_gf(z);
  const Complex root = std::sqrt(1.0 - 4.0 * z);
  const Complex den1 = 1.0 - z * d * f;
  const Complex den2 = 2.0 - d + d * root;
  if (std::abs(den1) < tol::kPole || std::abs(den2) < tol::kPole) throw PoleError("pi_gf: z at a pole");
  const Complex g1 = 1.0 / den1;
  const Complex g2 = 2.0 / den2;
  if (std::abs(g1 - g2) > tol::kIdentity * std::max(1.0, std::abs(g1)))
    throw NumericError("pi_gf: closed forms disagree");
  return g1;
}

/// Coefficients of -1/Q_d at infinity on the odd powers z^{-1}, z^{-3}, ...:
/// entry k is -d * pi_k(d). Even negative powers vanish.
inline std::vector<double> neg_inv_q_series(double d, int terms) {
  require_nonzero_d(d, "neg_inv_q_series");
  if (terms < 1) throw DomainError("neg_inv_q_series: need at least one term");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(terms));
  const BigRational exact_d(d);
  for (int k = 0; k < terms; ++k) {
    BigRational v = -exact_d * pi_closed_form(k).evaluate(exact_d);
    out.push_back(static_cast<double>(v));
  }
  return out;
}

/// Spreads odd-power coefficients onto the dense sequence gamma_1, gamma_2, ...
/// (gamma_n multiplies z^{-n}), inserting zeros at even n.
inline std::vector<double> interleave_odd(const std::vector<double>& odd) {
  std::vector<double> dense(2 * odd.size(), 0.0);
  for (std::size_t k = 0; k < odd.size(); ++k) dense[2 * k] = odd[k];
  return dense;
}

/// sum_k coeffs[k] z^{-(2k+1)}.
inline Complex sum_odd_laurent(const std::vector<double>& coeffs, Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * inv2 + *it;
  return acc * inv;
}

/// Radius outside which the expansion of -1/Q_d converges absolutely.
inline double series_radius(double d) {
  require_nonzero_d(d, "series_radius");
  const double ad = std::abs(d);
  if (ad < 2.0) return 2.0;
  return std::max(2.0, ad / std::sqrt(std::abs(d - 1.0)));
}

enum class OutlierKind { complex_pair, none, real_pair };

inline const char* to_string(OutlierKind k) {
  switch (k) {
    case OutlierKind::complex_pair: return "complex-pair";
    case OutlierKind::none: return "none";
    case OutlierKind::real_pair: return "real-pair";
  }
  return "?";
}

struct OutlierSet {
  OutlierKind kind = OutlierKind::none;
  std::vector<Complex> values;  // upper / right root first
};

/// Zeros of Q_d off [-2, 2]: +-i|d|/sqrt(1-d) for d < 0, none for 0 < d <= 2,
/// +-d/sqrt(d-1) for d > 2. Each is checked against q_limit.
inline OutlierSet limit_outliers(double d) {
  require_nonzero_d(d, "limit_outliers");
  OutlierSet out;
  if (d < 0.0) {
    const double y = std::abs(d) / std::sqrt(1.0 - d);
    out.kind = OutlierKind::complex_pair;
    out.values = {Complex(0.0, y), Complex(0.0, -y)};
  } else if (d > 2.0) {
    const double x = d / std::sqrt(d - 1.0);
    out.kind = OutlierKind::real_pair;
    out.values = {Complex(x, 0.0), Complex(-x, 0.0)};
  }
  for (const Complex& v : out.values)
    if (std::abs(q_limit(d, v)) > tol::kLimitRoot) throw NumericError("limit_outliers: root residual too large");
  return out;
}

/// Reciprocal of a Laurent series at infinity.
///
/// Given alpha_{-1} and gamma_1, gamma_2, ... (gamma_n multiplies z^{-n}),
/// returns alpha_0, alpha_1, ... with
///   sum_{i=0}^{k} alpha_{i-1} gamma_{k-i+1} = 0,   k = 1, 2, ...
/// so that (sum alpha_n z^{-n}) (sum gamma_n z^{-n}) equals the constant
/// alpha_{-1} gamma_1. With gamma = -d pi and alpha_{-1} = 1/d this recovers
/// Q_d = z/d - sum_k c_k z^{-2k-1}. Output length is gamma.size() - 1.
inline std::vector<double> invert_series(double alpha_head, const std::vector<double>& gamma) {
  if (gamma.empty()) throw DomainError("invert_series: empty gamma");
  if (gamma[0] == 0.0) throw DomainError("invert_series: zero leading coefficient gamma_1");
  if (alpha_head == 0.0) throw DomainError("invert_series: zero alpha_{-1}");
  // alpha[i] holds alpha_{i-1}
  std::vector<double> alpha{alpha_head};
  for (std::size_t k = 1; k < gamma.size(); ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) acc += alpha[i] * gamma[k - i];
    alpha.push_back(-acc / gamma[0]);
  }
  return {alpha.begin() + 1, alpha.end()};
}

/// Inverse of invert_series: rebuilds gamma_1..gamma_{K} from alpha_{-1},
/// gamma_1 and alpha_0..alpha_{K-2} through the same Cauchy-product relations.
inline std::vector<double> reconstruct_gamma(double alpha_head, double gamma_head, const std::vector<double>& alpha) {
  if (alpha_head == 0.0) throw DomainError("reconstruct_gamma: zero alpha_{-1}");
  std::vector<double> a{alpha_head};
  a.insert(a.end(), alpha.begin(), alpha.end());
  std::vector<double> gamma{gamma_head};
  for (std::size_t k = 1; k < a.size(); ++k) {
    double acc = 0.0;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * gamma[k - i];
    gamma.push_back(-acc / alpha_head);
  }
  return gamma;
}

}  // namespace gencat::weyl
