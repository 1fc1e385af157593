#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gencat/errors.hpp"

namespace gencat::randmat {

enum class Distribution { rademacher, gaussian, uniform };

inline const char* to_string(Distribution d) {
  switch (d) {
    case Distribution::rademacher: return "rademacher";
    case Distribution::gaussian: return "gaussian";
    case Distribution::uniform: return "uniform";
  }
  return "?";
}

inline Distribution parse_distribution(const std::string& s) {
  if (s == "rademacher") return Distribution::rademacher;
  if (s == "gaussian") return Distribution::gaussian;
  if (s == "uniform") return Distribution::uniform;
  throw DomainError("unknown distribution '" + s + "' (expected rademacher, gaussian or uniform)");
}

/// One Monte Carlo ensemble. The matrix has N + 1 rows, indexed 0..N.
struct EnsembleConfig {
  std::size_t size = 1;  // N
  double d = 1.0;
  Distribution dist = Distribution::gaussian;
  std::uint64_t seed = 0;

  void validate() const {
    if (size < 1) throw DomainError("EnsembleConfig: N must be at least 1");
    if (!std::isfinite(d) || d == 0.0) throw DomainError("EnsembleConfig: d must be finite and nonzero");
  }
};

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent stream seed for one trial of an ensemble.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return mix64(mix64(master) ^ mix64(trial + 0xD1B54A32D192ED03ULL));
}

/// Symmetric (N+1) x (N+1) matrix (1/sqrt N) [x_ij]; the unscaled entries are
/// kept and the scale applied on access.
class WignerSample {
public:
  WignerSample(std::size_t n_bulk, std::vector<double> raw)
      : n_(n_bulk + 1), raw_(std::move(raw)), scale_(1.0 / std::sqrt(static_cast<double>(n_bulk))) {
    if (raw_.size() != n_ * n_) throw DomainError("WignerSample: raw entry count does not match N");
  }

  std::size_t bulk_size() const noexcept { return n_ - 1; }
  std::size_t dim() const noexcept { return n_; }
  double scale() const noexcept { return scale_; }

  double operator()(std::size_t i, std::size_t j) const { return raw_[i * n_ + j] * scale_; }
  double unscaled(std::size_t i, std::size_t j) const { return raw_[i * n_ + j]; }

  /// Row-major scaled copy.
  std::vector<double> dense() const {
    std::vector<double> out(raw_.size());
    for (std::size_t i = 0; i < raw_.size(); ++i) out[i] = raw_[i] * scale_;
    return out;
  }

  /// out = W v
  void multiply(const std::vector<double>& v, std::vector<double>& out) const {
    out.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const double* row = &raw_[i * n_];
      double acc = 0.0;
      for (std::size_t j = 0; j < n_; ++j) acc += row[j] * v[j];
      out[i] = acc * scale_;
    }
  }

private:
  std::size_t n_;
  std::vector<double> raw_;
  double scale_;
};

inline double draw_entry(Distribution dist, std::mt19937_64& eng, std::normal_distribution<double>& normal,
                         std::uniform_real_distribution<double>& uniform) {
  switch (dist) {
    case Distribution::rademacher: return (eng() >> 63) ? 1.0 : -1.0;
    case Distribution::gaussian: return normal(eng);
    case Distribution::uniform: return uniform(eng);
  }
  return 0.0;
}

/// Deterministic in (cfg.seed, trial). Entries on and above the diagonal are
/// drawn row by row from cfg.dist (zero mean, unit variance) and mirrored.
inline WignerSample sample_wigner(const EnsembleConfig& cfg, std::uint64_t trial) {
  cfg.validate();
  const std::size_t n = cfg.size + 1;
  std::mt19937_64 eng(trial_seed(cfg.seed, trial));
  std::normal_distribution<double> normal(0.0, 1.0);
  const double half_width = std::sqrt(3.0);
  std::uniform_real_distribution<double> uniform(-half_width, half_width);
  std::vector<double> raw(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double x = draw_entry(cfg.dist, eng, normal, uniform);
      raw[i * n + j] = x;
      raw[j * n + i] = x;
    }
  return WignerSample(cfg.size, std::move(raw));
}

/// e_0^T (H W)^k e_0 for k = 0..n_max, where H scales coordinate 0 by d.
/// One matrix-vector product per power.
inline std::vector<double> moment_sequence(const WignerSample& w, double d, int n_max) {
  if (n_max < 0) throw DomainError("moment_sequence: negative power");
  std::vector<double> out{1.0};
  std::vector<double> v(w.dim(), 0.0), u;
  v[0] = 1.0;
  for (int k = 1; k <= n_max; ++k) {
    w.multiply(v, u);
    u[0] *= d;
    out.push_back(u[0]);
    std::swap(u, v);
  }
  return out;
}

inline double moment_e0(const WignerSample& w, double d, int n) { return moment_sequence(w, d, n).back(); }

}  // namespace gencat::randmat
