#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gencat/errors.hpp"
#include "gencat/tolerances.hpp"
#include "gencat/wigner.hpp"

namespace gencat::randmat {

/// log|det A| and arg det A of a dense complex matrix (row-major, destroyed),
/// by LU with partial pivoting. Empty when a pivot vanishes.
struct LogDet {
  double log_abs;
  double phase;  // in (-pi, pi]
};

inline double wrap_phase(double x) {
  x = std::remainder(x, 2.0 * std::numbers::pi);
  if (x <= -std::numbers::pi) x += 2.0 * std::numbers::pi;
  return x;
}

inline std::optional<LogDet> log_determinant(std::vector<std::complex<double>>& a, std::size_t n) {
  double log_abs = 0.0;
  double phase = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i * n + k]) > best) {
        best = std::abs(a[i * n + k]);
        piv = i;
      }
    if (best == 0.0 || !std::isfinite(best)) return std::nullopt;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      phase += std::numbers::pi;
    }
    const std::complex<double> pivot = a[k * n + k];
    log_abs += std::log(std::abs(pivot));
    phase += std::arg(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::complex<double> f = a[i * n + k] / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return LogDet{log_abs, wrap_phase(phase)};
}

struct SimilarityReport {
  bool agree = true;
  int points_checked = 0;
  std::vector<std::string> warnings;  // skipped points
};

/// Checks det(H_k W - z) = det(H U W U - z) at each z, where H_k scales
/// coordinate k by d, H = H_0, and U is the transposition of 0 and k
/// (so U H U = H_k).
inline SimilarityReport permutation_similarity_report(const WignerSample& w, double d, std::size_t k,
                                                      const std::vector<std::complex<double>>& zs) {
  const std::size_t n = w.dim();
  if (k > w.bulk_size()) throw DomainError("permutation_similarity_check: k must satisfy 0 <= k <= N");
  if (!std::isfinite(d) || d == 0.0) throw DomainError("permutation_similarity_check: d must be finite and nonzero");
  auto perm = [k](std::size_t i) { return i == 0 ? k : (i == k ? std::size_t{0} : i); };

  SimilarityReport rep;
  for (const auto& z : zs) {
    std::vector<std::complex<double>> lhs(n * n), rhs(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        lhs[i * n + j] = (i == k ? d : 1.0) * w(i, j);
        rhs[i * n + j] = (i == 0 ? d : 1.0) * w(perm(i), perm(j));
      }
    for (std::size_t i = 0; i < n; ++i) {
      lhs[i * n + i] -= z;
      rhs[i * n + i] -= z;
    }
    const auto l = log_determinant(lhs, n);
    const auto r = log_determinant(rhs, n);
    if (!l || !r) {
      rep.warnings.push_back("singular factorization at z = (" + std::to_string(z.real()) + ", " +
                             std::to_string(z.imag()) + "), point skipped");
      continue;
    }
    ++rep.points_checked;
    const bool mag_ok = std::abs(l->log_abs - r->log_abs) <= tol::kDeterminant * std::max(1.0, std::abs(l->log_abs));
    const bool phase_ok =
        std::abs(wrap_phase(l->phase - r->phase)) <= tol::kDeterminant * std::max(1.0, std::abs(l->phase));
    if (!mag_ok || !phase_ok) rep.agree = false;
  }
  if (rep.points_checked == 0) throw NumericError("permutation_similarity_check: every sample point was singular");
  return rep;
}

inline bool permutation_similarity_check(const WignerSample& w, double d, std::size_t k,
                                         const std::vector<std::complex<double>>& zs) {
  return permutation_similarity_report(w, d, k, zs).agree;
}

}  // namespace gencat::randmat
