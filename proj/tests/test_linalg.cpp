#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gencat/symmetric_eigen.hpp"

using namespace gencat;

namespace {

std::vector<double> random_symmetric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> g;
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = g(eng);
  return a;
}

double frobenius(const std::vector<double>& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

// ||A - V diag(l) V^T||_F and ||V^T V - I||_F
std::pair<double, double> residuals(const std::vector<double>& a, const linalg::EigenResult& e, std::size_t n) {
  double rec = 0.0, orth = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0, o = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        s += e.vectors[i * n + k] * e.values[k] * e.vectors[j * n + k];
        o += e.vectors[k * n + i] * e.vectors[k * n + j];
      }
      rec += (a[i * n + j] - s) * (a[i * n + j] - s);
      orth += (o - (i == j ? 1.0 : 0.0)) * (o - (i == j ? 1.0 : 0.0));
    }
  return {std::sqrt(rec), std::sqrt(orth)};
}

}  // namespace

TEST(SymmetricEigen, ReconstructsRandomMatrices) {
  for (std::size_t n : {1u, 2u, 3u, 5u, 40u, 200u}) {
    const auto a = random_symmetric(n, 100 + n);
    const auto e = linalg::symmetric_eigen(a, n);
    const auto [rec, orth] = residuals(a, e, n);
    EXPECT_LE(rec, 1e-10 * frobenius(a)) << n;
    EXPECT_LE(orth, 1e-10 * std::sqrt(static_cast<double>(n))) << n;
    for (std::size_t j = 1; j < n; ++j) EXPECT_LE(e.values[j - 1], e.values[j]);
  }
}

TEST(SymmetricEigen, DegenerateSpectra) {
  // Diagonal, already tridiagonal, and a rank-one matrix with a repeated zero.
  const std::size_t n = 6;
  std::vector<double> diag(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) diag[i * n + i] = static_cast<double>(n - i);
  std::vector<double> rank1(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rank1[i * n + j] = 1.0;
  for (const auto& a : {diag, rank1}) {
    const auto e = linalg::symmetric_eigen(a, n);
    const auto [rec, orth] = residuals(a, e, n);
    EXPECT_LE(rec, 1e-12 * frobenius(a));
    EXPECT_LE(orth, 1e-12);
  }
  const auto e = linalg::symmetric_eigen(rank1, n);
  EXPECT_NEAR(e.values.back(), 6.0, 1e-12);
  for (std::size_t j = 0; j + 1 < n; ++j) EXPECT_NEAR(e.values[j], 0.0, 1e-12);
}

TEST(SymmetricEigen, TraceAndFrobeniusPreserved) {
  const std::size_t n = 120;
  const auto a = random_symmetric(n, 7);
  const auto e = linalg::symmetric_eigen(a, n);
  double tr = 0.0, sum = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) tr += a[i * n + i];
  for (double l : e.values) {
    sum += l;
    sq += l * l;
  }
  EXPECT_NEAR(sum, tr, 1e-10 * n);
  EXPECT_NEAR(std::sqrt(sq), frobenius(a), 1e-10 * frobenius(a));
}

TEST(Tridiagonalize, FixesFirstCoordinate) {
  const std::size_t n = 30;
  const auto a = random_symmetric(n, 9);
  auto work = a;
  std::vector<linalg::Reflector> refl;
  const auto t = linalg::tridiagonalize(work, n, &refl);
  const auto q = linalg::accumulate(refl, n);
  EXPECT_DOUBLE_EQ(t.diag[0], a[0]);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_DOUBLE_EQ(q[i * n + 0], i == 0 ? 1.0 : 0.0);
    EXPECT_DOUBLE_EQ(q[0 * n + i], i == 0 ? 1.0 : 0.0);
  }
  double bnorm = 0.0;
  for (std::size_t j = 1; j < n; ++j) bnorm += a[j] * a[j];
  EXPECT_NEAR(std::abs(t.off[0]), std::sqrt(bnorm), 1e-12 * std::sqrt(bnorm));
  // Q T Q^T reproduces A.
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        double tk = 0.0;  // (T Q^T)(k, j)
        for (std::size_t l = (k ? k - 1 : 0); l <= std::min(n - 1, k + 1); ++l) {
          const double tkl = l == k ? t.diag[k] : t.off[std::min(k, l)];
          tk += tkl * q[j * n + l];
        }
        s += q[i * n + k] * tk;
      }
      err = std::max(err, std::abs(s - a[i * n + j]));
    }
  EXPECT_LE(err, 1e-12 * frobenius(a));
}

TEST(Tridiagonalize, RejectsSizeMismatch) {
  std::vector<double> a(5);
  EXPECT_THROW(linalg::tridiagonalize(a, 2), DomainError);
}
