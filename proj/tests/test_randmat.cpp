#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gencat/gencat.hpp"
#include "oracles.hpp"

using namespace gencat;
using namespace gencat::randmat;

namespace {

EnsembleConfig config(std::size_t n, double d, Distribution dist = Distribution::gaussian, std::uint64_t seed = 5) {
  return EnsembleConfig{n, d, dist, seed};
}

// Dense X = H W with H = diag(d, 1, ..., 1).
std::vector<double> dense_x(const WignerSample& w, double d) {
  auto x = w.dense();
  for (std::size_t j = 0; j < w.dim(); ++j) x[j] *= d;
  return x;
}

SecularModel synthetic(double a, std::vector<double> lambdas, std::vector<double> weights) {
  SecularModel m;
  m.a = a;
  m.lambdas = std::move(lambdas);
  m.weights = std::move(weights);
  for (double w : m.weights) m.b_norm2 += w;
  return m;
}

}  // namespace

TEST(Ensemble, ValidatesConfig) {
  EXPECT_THROW(config(0, 1.0).validate(), DomainError);
  EXPECT_THROW(config(5, 0.0).validate(), DomainError);
  EXPECT_THROW(config(5, INFINITY).validate(), DomainError);
  EXPECT_THROW(parse_distribution("cauchy"), DomainError);
  EXPECT_EQ(parse_distribution("rademacher"), Distribution::rademacher);
}

TEST(Ensemble, DeterministicPerTrialAndDistinctAcrossTrials) {
  const auto cfg = config(60, 2.0);
  const auto a = sample_wigner(cfg, 3).dense();
  EXPECT_EQ(a, sample_wigner(cfg, 3).dense());
  EXPECT_NE(a, sample_wigner(cfg, 4).dense());
  EXPECT_NE(a, sample_wigner(config(60, 2.0, Distribution::gaussian, 6), 3).dense());
  EXPECT_NE(trial_seed(1, 0), trial_seed(0, 1));
}

TEST(Ensemble, SymmetricAndScaled) {
  const auto w = sample_wigner(config(50, 1.0), 0);
  EXPECT_EQ(w.dim(), 51u);
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) {
      EXPECT_EQ(w(i, j), w(j, i));
      EXPECT_DOUBLE_EQ(w(i, j), w.unscaled(i, j) / std::sqrt(50.0));
    }
}

TEST(Ensemble, RademacherSupportAndUniformRange) {
  const auto r = sample_wigner(config(80, 1.0, Distribution::rademacher), 1);
  const auto u = sample_wigner(config(80, 1.0, Distribution::uniform), 1);
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) {
      EXPECT_TRUE(r.unscaled(i, j) == 1.0 || r.unscaled(i, j) == -1.0);
      EXPECT_LE(std::abs(u.unscaled(i, j)), std::sqrt(3.0));
    }
}

TEST(Ensemble, OffDiagonalMeanAndVarianceAtN2000) {
  const std::size_t n = 2000;
  for (auto dist : {Distribution::gaussian, Distribution::uniform}) {
    const auto w = sample_wigner(config(n, 1.0, dist), 0);
    double s = 0.0, s2 = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < w.dim(); ++i)
      for (std::size_t j = i + 1; j < w.dim(); ++j) {
        s += w.unscaled(i, j);
        s2 += w.unscaled(i, j) * w.unscaled(i, j);
        ++count;
      }
    const double mean = s / static_cast<double>(count);
    EXPECT_LE(std::abs(mean), 4.0 / std::sqrt(static_cast<double>(n * (n + 1) / 2)));
    EXPECT_NEAR(s2 / static_cast<double>(count), 1.0, 0.01);
  }
}

TEST(Moments, SmallOrders) {
  const auto w = sample_wigner(config(30, -1.5), 2);
  EXPECT_EQ(moment_e0(w, -1.5, 0), 1.0);
  EXPECT_DOUBLE_EQ(moment_e0(w, -1.5, 1), -1.5 * w(0, 0));
  EXPECT_THROW(moment_e0(w, -1.5, -1), DomainError);
}

TEST(Moments, MatchDenseMatrixPowers) {
  for (double d : {-1.0, 0.5, 3.0}) {
    const auto w = sample_wigner(config(25, d), 7);
    const std::size_t n = w.dim();
    const auto x = dense_x(w, d);
    std::vector<double> p(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) p[i * n + i] = 1.0;
    const auto seq = moment_sequence(w, d, 8);
    for (int k = 0; k <= 8; ++k) {
      EXPECT_NEAR(seq[static_cast<std::size_t>(k)], p[0], 1e-12 * std::max(1.0, std::abs(p[0]))) << d << " " << k;
      std::vector<double> next(n * n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t j = 0; j < n; ++j) next[i * n + j] += p[i * n + l] * x[l * n + j];
      p = std::move(next);
    }
  }
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResults) {
  const auto cfg = config(80, 3.0);
  const auto one = monte_carlo_moments(cfg, 4, 9, 1);
  const auto three = monte_carlo_moments(cfg, 4, 9, 3);
  ASSERT_EQ(one.size(), 4u);
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].n, static_cast<int>(i) + 1);
    EXPECT_EQ(one[i].mean, three[i].mean);
    EXPECT_EQ(one[i].std_error, three[i].std_error);
  }
  EXPECT_THROW(monte_carlo_moments(cfg, 0, 9), DomainError);
  EXPECT_THROW(monte_carlo_moments(cfg, 2, 1), DomainError);
}

TEST(MonteCarlo, SummaryStatistics) {
  const auto s = summarize({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.std_error, std::sqrt(5.0 / 3.0 / 4.0));
  EXPECT_DOUBLE_EQ(median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_DOUBLE_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
  EXPECT_THROW(median({}), DomainError);
}

TEST(MonteCarlo, MeansNearLimitsAtModerateSize) {
  // n=4, d=3 tends to pi_2(3) = 12; n=2, d=1 tends to c_1 = 1.
  const auto a = monte_carlo_moments(config(400, 3.0, Distribution::gaussian, 17), 4, 30);
  EXPECT_NEAR(a[3].mean, 12.0, 0.15 * 12.0);
  const auto b = monte_carlo_moments(config(400, 1.0, Distribution::gaussian, 17), 2, 30);
  EXPECT_NEAR(b[1].mean, 1.0, 0.15);
}

TEST(MonteCarlo, RademacherAndGaussianAgree) {
  const auto r = monte_carlo_moments(config(1000, -1.0, Distribution::rademacher, 1), 6, 50);
  const auto g = monte_carlo_moments(config(1000, -1.0, Distribution::gaussian, 1), 6, 50);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double combined = std::hypot(r[i].std_error, g[i].std_error);
    EXPECT_LE(std::abs(r[i].mean - g[i].mean), 3.0 * combined) << "n=" << r[i].n;
  }
}

TEST(Secular, ScalarCase) {
  const auto w = sample_wigner(config(1, 2.0), 0);
  const auto m = build_secular(w);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_DOUBLE_EQ(m.a, w(0, 0));
  EXPECT_DOUBLE_EQ(m.lambdas[0], w(1, 1));
  EXPECT_NEAR(m.weights[0], w(0, 1) * w(0, 1), 1e-15);
}

TEST(Secular, MatchesDenseEigendecomposition) {
  const std::size_t bulk = 60;
  const auto w = sample_wigner(config(bulk, 1.0), 4);
  const auto m = build_secular(w);
  std::vector<double> c(bulk * bulk);
  std::vector<double> b(bulk);
  for (std::size_t i = 0; i < bulk; ++i) {
    b[i] = w(0, i + 1);
    for (std::size_t j = 0; j < bulk; ++j) c[i * bulk + j] = w(i + 1, j + 1);
  }
  const auto e = linalg::symmetric_eigen(c, bulk);
  double wsum = 0.0;
  for (std::size_t j = 0; j < bulk; ++j) {
    double f = 0.0;
    for (std::size_t i = 0; i < bulk; ++i) f += e.vectors[i * bulk + j] * b[i];
    EXPECT_NEAR(m.lambdas[j], e.values[j], 1e-12);
    EXPECT_NEAR(m.weights[j], f * f, 1e-12);
    wsum += m.weights[j];
  }
  EXPECT_NEAR(wsum, m.b_norm2, 1e-10 * m.b_norm2);
}

TEST(Secular, WeightSumAtLargerSizes) {
  for (std::size_t n : {300u, 1000u}) {
    const auto m = build_secular(sample_wigner(config(n, 1.0, Distribution::rademacher), 1));
    double s = 0.0;
    for (double x : m.weights) {
      EXPECT_GE(x, 0.0);
      s += x;
    }
    EXPECT_NEAR(s, m.b_norm2, 1e-10 * m.b_norm2);
    EXPECT_NEAR(measure_moments(m, 0), m.b_norm2, 1e-10 * m.b_norm2);
    for (std::size_t j = 1; j < m.size(); ++j) EXPECT_LE(m.lambdas[j - 1], m.lambdas[j]);
  }
}

TEST(Secular, EvalMatchesResolventOfX) {
  for (double d : {-1.0, 0.7, 3.0}) {
    const auto w = sample_wigner(config(40, d), 8);
    const auto m = build_secular(w);
    const auto x = dense_x(w, d);
    for (Complex z : {Complex(3, 0), Complex(0.2, 1.5), Complex(-1, -0.5), Complex(-3.5, 0)}) {
      const Complex q = eval_weyl_N(m, d, z);
      const Complex ref = -1.0 / (d * oracle::resolvent_00(x, w.dim(), z));
      EXPECT_LE(std::abs(q - ref), 1e-11 * std::max(1.0, std::abs(ref))) << d << " " << z;
    }
  }
}

TEST(Secular, EvalExamples) {
  const auto single = synthetic(0.0, {0.0}, {1.0});
  EXPECT_LE(std::abs(eval_weyl_N(single, 1.0, Complex(0, 2)) - Complex(0, 2.5)), 1e-15);
  const auto affine = synthetic(0.3, {-1.0, 1.0}, {0.0, 0.0});
  EXPECT_LE(std::abs(eval_weyl_N(affine, 2.0, Complex(1.5, 1)) - (Complex(1.5, 1) / 2.0 - 0.3)), 1e-15);
  const Complex big(1e8, 3e7);
  EXPECT_LE(std::abs(eval_weyl_N(single, 4.0, big) / (big / 4.0) - 1.0), 1e-12);
  EXPECT_THROW(eval_weyl_N(single, 1.0, Complex(1e-14, 0)), PoleError);
}

TEST(Secular, LaurentCoefficientsReproduceMoments) {
  for (double d : {-1.0, 3.0})
    for (std::size_t n : {10u, 200u}) {
      const auto w = sample_wigner(config(n, d), 11);
      const auto m = build_secular(w);
      const auto moments = moment_sequence(w, d, 6);
      // -1/Q_N = sum_{k>=1} gamma_k z^{-k}, gamma_k = -d e0^T X^{k-1} e0
      const auto gamma = weyl::reconstruct_gamma(1.0 / d, -d, secular_laurent(m, 6));
      ASSERT_EQ(gamma.size(), 7u);
      for (int k = 0; k <= 6; ++k)
        EXPECT_NEAR(gamma[static_cast<std::size_t>(k)], -d * moments[static_cast<std::size_t>(k)], 1e-8)
            << d << " " << n << " " << k;
      const auto alpha = weyl::invert_series(1.0 / d, gamma);
      const auto direct = secular_laurent(m, 6);
      for (std::size_t i = 0; i < alpha.size(); ++i) EXPECT_NEAR(alpha[i], direct[i], 1e-8);
    }
}

TEST(Secular, MeasureMomentsAtN2000) {
  const auto m = build_secular(sample_wigner(config(2000, 1.0), 0));
  EXPECT_NEAR(measure_moments(m, 0), 1.0, 0.15);
  EXPECT_NEAR(measure_moments(m, 2), 1.0, 0.2);
  EXPECT_LE(std::abs(measure_moments(m, 1)), 0.2);
  EXPECT_GE(m.lambdas.front(), -2.5);
  EXPECT_LE(m.lambdas.back(), 2.5);
}

TEST(RealOutliers, SyntheticRoots) {
  const auto m = synthetic(0.0, {0.0}, {1.0});
  const auto r = real_outliers(m, 4.0);
  ASSERT_TRUE(r.lower && r.upper);
  EXPECT_NEAR(*r.upper, 2.0, 1e-11);
  EXPECT_NEAR(*r.lower, -2.0, 1e-11);
  EXPECT_THROW(real_outliers(m, -1.0), DomainError);
}

TEST(RealOutliers, DetachedRootsForLargeD) {
  for (std::size_t t = 0; t < 3; ++t) {
    const auto m = build_secular(sample_wigner(config(500, 3.0), t));
    const auto r = real_outliers(m, 3.0);
    ASSERT_TRUE(r.lower && r.upper);
    EXPECT_GT(*r.upper, m.lambdas.back());
    EXPECT_LT(*r.lower, m.lambdas.front());
    EXPECT_LE(std::abs(eval_weyl_N(m, 3.0, *r.upper)), 1e-10);
    EXPECT_LE(std::abs(eval_weyl_N(m, 3.0, *r.lower)), 1e-10);
    EXPECT_NEAR(*r.upper, 2.1213203, 0.2);
  }
}

TEST(RealOutliers, AbsentForDEqualOneAtN2000) {
  int absent = 0;
  const int trials = 10;
  for (int t = 0; t < trials; ++t) {
    const auto r = real_outliers(build_secular(sample_wigner(config(2000, 1.0), t)), 1.0);
    if (!r.lower && !r.upper) ++absent;
  }
  EXPECT_GE(absent, 8);
}

TEST(ComplexOutlier, SyntheticRoot) {
  const auto r = complex_outlier(synthetic(0.0, {0.0}, {1.0}), -1.0);
  ASSERT_TRUE(r.root);
  EXPECT_EQ(r.status, NewtonStatus::converged);
  EXPECT_LE(std::abs(*r.root - Complex(0, 1)), 1e-11);
  EXPECT_THROW(complex_outlier(synthetic(0.0, {0.0}, {1.0}), 1.0), DomainError);
}

TEST(ComplexOutlier, ConjugatePairIsZeroAndMatchesDenseEigenvalue) {
  const auto w = sample_wigner(config(150, -1.0), 2);
  const auto m = build_secular(w);
  const auto r = complex_outlier(m, -1.0);
  ASSERT_TRUE(r.root);
  EXPECT_GT(r.root->imag(), 0.0);
  EXPECT_LE(std::abs(eval_weyl_N(m, -1.0, *r.root)), 1e-10);
  EXPECT_LE(std::abs(eval_weyl_N(m, -1.0, std::conj(*r.root))), 1e-10);
  // X - z0 is singular: its resolvent entry blows up relative to a nearby point.
  const auto x = dense_x(w, -1.0);
  const auto near = std::abs(oracle::resolvent_00(x, w.dim(), *r.root + Complex(1e-7, 0)));
  const auto far = std::abs(oracle::resolvent_00(x, w.dim(), *r.root + Complex(0.1, 0)));
  EXPECT_GT(near, 1e4 * far);
}

TEST(Jacobi, ConvergesToLimitWeylFunction) {
  EXPECT_LE(std::abs(jacobi_resolvent(1.0, 3.0, 400) - weyl::semicircle_stieltjes(3.0)), 1e-12);
  for (auto [d, z] : {std::pair{1.0, Complex(3, 0)}, {1.0, Complex(0, 2)}, {4.0, Complex(4, 0)}, {0.5, Complex(-3, 0)}})
    EXPECT_LE(std::abs(jacobi_resolvent(d, z, 400) + 1.0 / weyl::q_limit(d, z)), 1e-6) << d << " " << z;
}

TEST(Jacobi, TwoLevelValueAndErrors) {
  // g_2 = -1/z, g_1 = 1 / (-z - d g_2)
  EXPECT_LE(std::abs(jacobi_continued_fraction(4.0, 4.0, 2) - Complex(-1.0 / 3.0, 0)), 1e-15);
  EXPECT_LE(std::abs(jacobi_resolvent(4.0, 4.0, 2) - Complex(-4.0 / 3.0, 0)), 1e-15);
  EXPECT_THROW(jacobi_resolvent(-1.0, 3.0, 10), DomainError);
  EXPECT_THROW(jacobi_resolvent(1.0, 3.0, 1), DomainError);
  EXPECT_THROW(jacobi_resolvent(1.0, 1.0, 10), CutError);
}

TEST(Jacobi, MatchesDenseTruncation) {
  const int depth = 12;
  const double d = 2.5;
  std::vector<double> j(depth * depth, 0.0);
  for (int i = 0; i + 1 < depth; ++i) j[i * depth + i + 1] = j[(i + 1) * depth + i] = i == 0 ? std::sqrt(d) : 1.0;
  for (Complex z : {Complex(3, 0.5), Complex(0, 2), Complex(-2.5, 0)})
    EXPECT_LE(std::abs(jacobi_continued_fraction(d, z, depth) - oracle::resolvent_00(j, depth, z)), 1e-13);
}

TEST(PermutationSimilarity, HoldsForAllPositions) {
  const std::vector<Complex> zs{{3, 0}, {0, 2}, {-4, 0}, {1, 2}, {-2, -3}};
  for (double d : {-1.0, 3.0}) {
    const auto w = sample_wigner(config(50, d, Distribution::gaussian, 1), 0);
    for (std::size_t k : {0u, 1u, 3u, 10u, 50u}) EXPECT_TRUE(permutation_similarity_check(w, d, k, zs)) << d << " " << k;
    EXPECT_THROW(permutation_similarity_check(w, d, 51, zs), DomainError);
  }
}

TEST(PermutationSimilarity, DetectsWrongScaling) {
  // Scaling a different row than the one moved by the permutation changes the determinant.
  const auto w = sample_wigner(config(20, 3.0), 0);
  auto rep = permutation_similarity_report(w, 3.0, 4, {{3, 0}});
  EXPECT_TRUE(rep.agree);
  std::vector<std::complex<double>> lhs(w.dim() * w.dim()), rhs(w.dim() * w.dim());
  const std::size_t n = w.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      lhs[i * n + j] = (i == 4 ? 3.0 : 1.0) * w(i, j);
      rhs[i * n + j] = (i == 0 ? 3.0 : 1.0) * w(i, j);
    }
  for (std::size_t i = 0; i < n; ++i) {
    lhs[i * n + i] -= 3.0;
    rhs[i * n + i] -= 3.0;
  }
  const auto l = log_determinant(lhs, n), r = log_determinant(rhs, n);
  ASSERT_TRUE(l && r);
  EXPECT_GT(std::abs(l->log_abs - r->log_abs) + std::abs(wrap_phase(l->phase - r->phase)), 1e-3);
}
