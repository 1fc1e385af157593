#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "gencat/errors.hpp"
#include "gencat/symmetric_eigen.hpp"
#include "gencat/tolerances.hpp"
#include "gencat/weyl.hpp"
#include "gencat/wigner.hpp"

// Schur-complement form of the finite-N Weyl function. Writing
//
//   W = [[a, b^T], [b, C]],   X = H W = [[d a, d b^T], [b, C]],
//
// one has Q_N(z) = z/d - a + b^T (C - z)^{-1} b = z/d - a + sum_j w_j / (lambda_j - z)
// with lambda_j the eigenvalues of C and w_j the squared components of b in its
// eigenbasis. Zeros of Q_N are eigenvalues of X.

namespace gencat::randmat {

using Complex = std::complex<double>;

struct SecularModel {
  double a = 0.0;
  std::vector<double> lambdas;  // nondecreasing
  std::vector<double> weights;  // w_j >= 0
  double b_norm2 = 0.0;         // ||b||^2 computed directly from the sample

  std::size_t size() const noexcept { return lambdas.size(); }
};

/// Builds (a, lambda, w) from a sample. The Householder reduction of W fixes
/// e_0 and sends b to +-||b|| e_1, so the weights are ||b||^2 times the squared
/// first components of the eigenvectors of the reduced bulk block; only those
/// components are tracked through QL.
inline SecularModel build_secular(const WignerSample& w) {
  const std::size_t n = w.dim();
  const std::size_t bulk = n - 1;
  SecularModel m;
  m.a = w(0, 0);
  for (std::size_t j = 1; j < n; ++j) m.b_norm2 += w(0, j) * w(0, j);

  std::vector<double> dense = w.dense();
  linalg::Tridiagonal t = linalg::tridiagonalize(dense, n);
  std::vector<double> diag(t.diag.begin() + 1, t.diag.end());
  std::vector<double> off(t.off.begin() + 1, t.off.end());
  const double beta2 = t.off[0] * t.off[0];

  std::vector<double> first(bulk, 0.0);
  first[0] = 1.0;
  linalg::tridiagonal_ql(diag, off, first, 1);

  std::vector<std::size_t> order(bulk);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });
  m.lambdas.resize(bulk);
  m.weights.resize(bulk);
  for (std::size_t j = 0; j < bulk; ++j) {
    m.lambdas[j] = diag[order[j]];
    m.weights[j] = beta2 * first[order[j]] * first[order[j]];
  }
  const double wsum = std::accumulate(m.weights.begin(), m.weights.end(), 0.0);
  if (std::abs(wsum - m.b_norm2) > tol::kWeightSum * std::max(m.b_norm2, 1e-300))
    throw NumericError("build_secular: weights do not sum to ||b||^2");
  return m;
}

namespace detail {

template <class T>
T secular_value(const SecularModel& m, double d, T z) {
  T acc = z / d - m.a;
  for (std::size_t j = 0; j < m.size(); ++j) acc += m.weights[j] / (m.lambdas[j] - z);
  return acc;
}

template <class T>
T secular_derivative(const SecularModel& m, double d, T z) {
  T acc = T(1.0 / d);
  for (std::size_t j = 0; j < m.size(); ++j) {
    const T r = m.lambdas[j] - z;
    acc += m.weights[j] / (r * r);
  }
  return acc;
}

}  // namespace detail

/// Q_N(z) = z/d - a + sum_j w_j / (lambda_j - z).
inline Complex eval_weyl_N(const SecularModel& m, double d, Complex z) {
  weyl::require_nonzero_d(d, "eval_weyl_N");
  weyl::require_finite(z, "eval_weyl_N");
  for (double lam : m.lambdas)
    if (std::abs(z - lam) <= tol::kSecularPole) throw PoleError("eval_weyl_N: z within 1e-13 of a pole");
  return detail::secular_value(m, d, z);
}

/// sum_j w_j lambda_j^n, the n-th moment of the spectral measure of (C, b).
inline double measure_moments(const SecularModel& m, int n) {
  if (n < 0) throw DomainError("measure_moments: negative order");
  double acc = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j) acc += m.weights[j] * std::pow(m.lambdas[j], n);
  return acc;
}

/// Laurent coefficients of Q_N at infinity: alpha_0 = -a, alpha_n = -sum w lambda^{n-1}.
inline std::vector<double> secular_laurent(const SecularModel& m, int count) {
  std::vector<double> alpha;
  alpha.push_back(-m.a);
  for (int n = 1; n < count; ++n) alpha.push_back(-measure_moments(m, n - 1));
  return alpha;
}

/// Roots closer than this to the bulk edge are treated as merged into the bulk.
inline double default_edge_margin(std::size_t bulk) { return std::pow(static_cast<double>(bulk), -2.0 / 3.0); }

struct RealOutliers {
  std::optional<double> lower;
  std::optional<double> upper;
  double lower_residual = 0.0;
  double upper_residual = 0.0;
};

namespace detail {

inline double bisect(const SecularModel& m, double d, double lo, double hi) {
  // invariant: S(lo) < 0 < S(hi); S is increasing between consecutive poles
  while (hi - lo > tol::kBisection * std::max(1.0, std::abs(0.5 * (lo + hi)))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (secular_value(m, d, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// Real zeros of Q_N above the largest and below the smallest lambda, for d > 0.
///
/// On each side Q_N is strictly increasing (derivative 1/d + sum w/(lambda-z)^2),
/// so a sign change brackets the unique root there. The inner end of the bracket
/// sits `edge_margin` outside the bulk; the outer end grows by doubling from
/// 1 up to max(10, 2|d|). No sign change means no detached root on that side.
inline RealOutliers real_outliers(const SecularModel& m, double d, std::optional<double> edge_margin = std::nullopt) {
  if (!(d > 0.0)) throw DomainError("real_outliers: requires d > 0");
  if (m.size() == 0) throw DomainError("real_outliers: empty model");
  const double margin = edge_margin.value_or(default_edge_margin(m.size()));
  const double reach = std::max(10.0, 2.0 * std::abs(d));
  const double lmax = m.lambdas.back();
  const double lmin = m.lambdas.front();
  RealOutliers out;

  const double right_lo = lmax + margin;
  if (detail::secular_value(m, d, right_lo) < 0.0) {
    for (double offset = 1.0;; offset = std::min(2.0 * offset, reach)) {
      const double hi = lmax + offset;
      if (hi > right_lo && detail::secular_value(m, d, hi) > 0.0) {
        const double root = detail::bisect(m, d, right_lo, hi);
        out.upper = root;
        out.upper_residual = std::abs(detail::secular_value(m, d, root));
        break;
      }
      if (offset >= reach) break;
    }
  }

  const double left_hi = lmin - margin;
  if (detail::secular_value(m, d, left_hi) > 0.0) {
    for (double offset = 1.0;; offset = std::min(2.0 * offset, reach)) {
      const double lo = lmin - offset;
      if (lo < left_hi && detail::secular_value(m, d, lo) < 0.0) {
        const double root = detail::bisect(m, d, lo, left_hi);
        out.lower = root;
        out.lower_residual = std::abs(detail::secular_value(m, d, root));
        break;
      }
      if (offset >= reach) break;
    }
  }
  return out;
}

enum class NewtonStatus { converged, hit_real_axis, no_convergence };

inline const char* to_string(NewtonStatus s) {
  switch (s) {
    case NewtonStatus::converged: return "converged";
    case NewtonStatus::hit_real_axis: return "hit-real-axis";
    case NewtonStatus::no_convergence: return "no-convergence";
  }
  return "?";
}

struct ComplexOutlier {
  std::optional<Complex> root;  // upper half-plane; its conjugate is also a zero
  NewtonStatus status = NewtonStatus::no_convergence;
  int iterations = 0;
  double residual = 0.0;
};

/// Nonreal zero of Q_N in the upper half-plane for d < 0, by damped Newton from
/// the limit root i|d|/sqrt(1-d). A step is halved while it fails to reduce |Q_N|.
inline ComplexOutlier complex_outlier(const SecularModel& m, double d, int max_iter = 200) {
  if (!(d < 0.0)) throw DomainError("complex_outlier: requires d < 0");
  ComplexOutlier out;
  Complex z = weyl::limit_outliers(d).values.front();
  Complex s = detail::secular_value(m, d, z);
  for (int it = 0; it <= max_iter; ++it) {
    out.iterations = it;
    out.residual = std::abs(s);
    if (out.residual <= tol::kNewtonResidual) {
      out.status = NewtonStatus::converged;
      out.root = z;
      return out;
    }
    if (it == max_iter) break;
    const Complex step = s / detail::secular_derivative(m, d, z);
    double t = 1.0;
    Complex next = z - step;
    Complex s_next = detail::secular_value(m, d, next);
    for (int halving = 0; halving < 50 && !(std::abs(s_next) < std::abs(s)); ++halving) {
      t *= 0.5;
      next = z - t * step;
      s_next = detail::secular_value(m, d, next);
    }
    z = next;
    s = s_next;
    if (z.imag() < tol::kRealAxis) {
      out.status = NewtonStatus::hit_real_axis;
      out.residual = std::abs(s);
      return out;
    }
  }
  out.status = NewtonStatus::no_convergence;
  return out;
}

}  // namespace gencat::randmat
