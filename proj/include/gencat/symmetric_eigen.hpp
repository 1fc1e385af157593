#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "gencat/errors.hpp"

namespace gencat::linalg {

/// Symmetric tridiagonal matrix: diag[i] = T(i,i), off[i] = T(i,i+1).
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};

/// Householder reflector I - beta v v^T acting on indices start..n-1.
struct Reflector {
  std::size_t start;
  double beta;
  std::vector<double> v;
};

/// Householder reduction of a dense symmetric matrix (row-major, n x n,
/// destroyed on exit) to tridiagonal form T = Q^T A Q. Only the lower triangle
/// is read.
///
/// Column k is reduced by a reflector on indices k+1..n-1, so Q e_0 = e_0 and
/// the first reflector maps A(1..n-1, 0) onto off[0] * e_1. When `reflectors`
/// is non-null they are appended in application order (Q = H_0 H_1 ...).
///
/// The rank-2 update of step k is deferred and applied during the sweep that
/// forms the matrix-vector product of step k + 1, so each step reads and
/// writes the trailing lower triangle once.
inline Tridiagonal tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<Reflector>* reflectors = nullptr) {
  if (a.size() != n * n) throw DomainError("tridiagonalize: matrix size mismatch");
  Tridiagonal t;
  t.diag.resize(n);
  t.off.resize(n > 0 ? n - 1 : 0);
  if (n == 0) return t;

  // Pending update A -= v q^T + q v^T on indices >= pend_start.
  std::vector<double> pv, pq;
  std::size_t pend_start = 0;
  bool pending = false;
  auto apply_pending_to_column = [&](std::size_t col) {
    if (!pending) return;
    const double vc = pv[col - pend_start];
    const double qc = pq[col - pend_start];
    for (std::size_t i = col; i < n; ++i) a[i * n + col] -= pv[i - pend_start] * qc + pq[i - pend_start] * vc;
  };

  std::vector<double> v, p;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t s = k + 1;
    const std::size_t m = n - s;
    t.diag[k] = a[k * n + k];
    double sigma = 0.0;
    for (std::size_t i = s + 1; i < n; ++i) sigma += a[i * n + k] * a[i * n + k];
    const double x0 = a[s * n + k];
    double beta = 0.0;
    v.assign(m, 0.0);
    if (sigma == 0.0) {
      t.off[k] = x0;
    } else {
      const double alpha = -std::copysign(std::sqrt(x0 * x0 + sigma), x0);
      for (std::size_t i = 0; i < m; ++i) v[i] = a[(s + i) * n + k];
      v[0] = x0 - alpha;
      beta = 2.0 / (v[0] * v[0] + sigma);
      t.off[k] = alpha;
    }

    // Sweep rows s..n-1 of the lower triangle: finish the previous update and
    // accumulate p = A22 v.
    p.assign(m, 0.0);
    for (std::size_t i = s; i < n; ++i) {
      double* row = &a[i * n];
      const double vi = v[i - s];
      if (pending) {
        const double pvi = pv[i - pend_start];
        const double pqi = pq[i - pend_start];
        const double* pvj = &pv[s - pend_start];
        const double* pqj = &pq[s - pend_start];
        double* r = row + s;
        const std::size_t len = i - s + 1;
        for (std::size_t j = 0; j < len; ++j) r[j] -= pvi * pqj[j] + pqi * pvj[j];
      }
      if (beta != 0.0) {
        const double* r = row + s;
        const std::size_t len = i - s;
        double acc = 0.0;
        for (std::size_t j = 0; j < len; ++j) {
          acc += r[j] * v[j];
          p[j] += r[j] * vi;
        }
        p[i - s] += acc + r[len] * vi;
      }
    }

    if (beta != 0.0) {
      for (auto& x : p) x *= beta;
      double vp = 0.0;
      for (std::size_t i = 0; i < m; ++i) vp += v[i] * p[i];
      const double half = 0.5 * beta * vp;
      for (std::size_t i = 0; i < m; ++i) p[i] -= half * v[i];
      pv = v;
      pq = p;
      pend_start = s;
      pending = true;
      if (reflectors) reflectors->push_back({s, beta, v});
    } else {
      pending = false;
    }
    // Column s is read by the next step before its sweep.
    apply_pending_to_column(s);
  }

  if (n >= 2) {
    if (pending && n >= 3) {
      // Column n-2 was refreshed above; the last diagonal entry remains.
      const std::size_t i = n - 1;
      a[i * n + i] -= 2.0 * pv[i - pend_start] * pq[i - pend_start];
    }
    t.diag[n - 2] = a[(n - 2) * n + (n - 2)];
    t.off[n - 2] = a[(n - 1) * n + (n - 2)];
  }
  t.diag[n - 1] = a[(n - 1) * n + (n - 1)];
  return t;
}

/// Forms Q = H_0 H_1 ... explicitly (row-major n x n).
inline std::vector<double> accumulate(const std::vector<Reflector>& reflectors, std::size_t n) {
  std::vector<double> q(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
  // Apply right-to-left: Q = H_0 (H_1 (... I)).
  for (auto it = reflectors.rbegin(); it != reflectors.rend(); ++it) {
    const auto& r = *it;
    const std::size_t m = r.v.size();
    std::vector<double> w(n, 0.0);  // w = v^T Q(start.., :)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) w[j] += r.v[i] * q[(r.start + i) * n + j];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) q[(r.start + i) * n + j] -= r.beta * r.v[i] * w[j];
  }
  return q;
}

/// Implicit-shift QL on a symmetric tridiagonal matrix.
///
/// On return `diag` holds the eigenvalues (unsorted). `z` holds `rows` tracked
/// rows of the eigenvector matrix, row-major rows x n; it must be initialized by
/// the caller (identity rows for full vectors, e_0^T for first components only).
inline void tridiagonal_ql(std::vector<double>& diag, std::vector<double> off, std::vector<double>& z, std::size_t rows,
                           int max_iter = 60) {
  const std::size_t n = diag.size();
  if (n == 0) return;
  off.resize(n, 0.0);
  off[n - 1] = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
        if (std::abs(off[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == max_iter) throw NumericError("tridiagonal_ql: no convergence");
        double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
        double r = std::hypot(g, 1.0);
        g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool deflated = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * off[i];
          const double b = c * off[i];
          r = std::hypot(f, g);
          off[i + 1] = r;
          if (r == 0.0) {
            diag[i + 1] -= p;
            off[m] = 0.0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = diag[i + 1] - p;
          r = (diag[i] - g) * s + 2.0 * c * b;
          p = s * r;
          diag[i + 1] = g + p;
          g = c * r - b;
          for (std::size_t k = 0; k < rows; ++k) {
            double* zr = &z[k * n];
            f = zr[i + 1];
            zr[i + 1] = s * zr[i] + c * f;
            zr[i] = c * zr[i] - s * f;
          }
        }
        if (deflated) continue;
        diag[l] -= p;
        off[l] = g;
        off[m] = 0.0;
      }
    } while (m != l);
  }
}

struct EigenResult {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major n x n, column j is the eigenvector of values[j]
};

/// Full eigendecomposition of a dense symmetric matrix: A = V diag(values) V^T.
inline EigenResult symmetric_eigen(std::vector<double> a, std::size_t n) {
  std::vector<Reflector> refl;
  Tridiagonal t = tridiagonalize(a, n, &refl);
  std::vector<double> z = accumulate(refl, n);
  tridiagonal_ql(t.diag, t.off, z, n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return t.diag[x] < t.diag[y]; });
  EigenResult res;
  res.values.resize(n);
  res.vectors.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    res.values[j] = t.diag[order[j]];
    for (std::size_t i = 0; i < n; ++i) res.vectors[i * n + j] = z[i * n + order[j]];
  }
  return res;
}

}  // namespace gencat::linalg
