#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "gencat/errors.hpp"
#include "gencat/weyl.hpp"

namespace gencat::randmat {

/// (0,0) resolvent entry of the depth x depth truncation of the one-sided
/// Jacobi matrix with zero diagonal and off-diagonals sqrt(d), 1, 1, ...,
/// by the backward continued fraction
///   g_depth = -1/z,   g_k = 1 / (-z - beta_k^2 g_{k+1}),   beta_1^2 = d, beta_k^2 = 1.
///
/// This is e_0^T (J - z)^{-1} e_0 = -1 / (d Q_d(z)) in the limit.
inline std::complex<double> jacobi_continued_fraction(double d, std::complex<double> z, int depth) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("jacobi: requires d > 0");
  if (depth < 2) throw DomainError("jacobi: depth must be at least 2");
  weyl::require_finite(z, "jacobi");
  if (weyl::on_semicircle_cut(z)) throw CutError("jacobi: z lies on the cut [-2, 2]");

  const double tiny = 1e-14 * std::max(1.0, std::abs(z));
  for (int attempt = 0; attempt < 2; ++attempt) {
    const int m = depth - attempt;
    if (m < 2) break;
    if (std::abs(z) < tiny) break;
    std::complex<double> g = -1.0 / z;
    bool pivot_ok = true;
    for (int k = m - 1; k >= 1; --k) {
      const double beta2 = (k == 1) ? d : 1.0;
      const std::complex<double> den = -z - beta2 * g;
      if (std::abs(den) < tiny) {
        pivot_ok = false;
        break;
      }
      g = 1.0 / den;
    }
    if (pivot_ok) return g;
  }
  throw NumericError("jacobi: near-zero pivot in continued fraction at depth " + std::to_string(depth));
}

/// H-weighted resolvent entry d * e_0^T (J - z)^{-1} e_0, which converges to
/// -1/Q_d(z) as depth grows.
inline std::complex<double> jacobi_resolvent(double d, std::complex<double> z, int depth) {
  return d * jacobi_continued_fraction(d, z, depth);
}

}  // namespace gencat::randmat
