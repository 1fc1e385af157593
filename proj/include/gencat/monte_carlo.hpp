#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "gencat/errors.hpp"
#include "gencat/wigner.hpp"

namespace gencat::randmat {

/// Runs `fn(trial)` for trial = 0..trials-1 and returns the results in trial
/// order. Trials are split across `threads` workers (0 = hardware concurrency);
/// since each trial is a pure function of its index, the output does not
/// depend on the thread count.
template <class Fn>
auto run_trials(std::size_t trials, Fn fn, unsigned threads = 0) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> out(trials);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));
  if (threads <= 1) {
    for (std::size_t t = 0; t < trials; ++t) out[t] = fn(t);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t t = w; t < trials; t += threads) out[t] = fn(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct SampleStats {
  double mean = 0.0;
  double std_error = 0.0;  // standard error of the mean
};

/// Mean and standard error, accumulated in index order.
inline SampleStats summarize(const std::vector<double>& xs) {
  SampleStats s;
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() >= 2) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.std_error = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
  }
  return s;
}

inline double median(std::vector<double> xs) {
  if (xs.empty()) throw DomainError("median of an empty sample");
  std::sort(xs.begin(), xs.end());
  const std::size_t h = xs.size() / 2;
  return xs.size() % 2 ? xs[h] : 0.5 * (xs[h - 1] + xs[h]);
}

struct MomentRow {
  int n;
  double mean;
  double std_error;
};

/// Sample mean and standard error of e_0^T X^n e_0, n = 1..n_max, over
/// independent trials of the ensemble.
inline std::vector<MomentRow> monte_carlo_moments(const EnsembleConfig& cfg, int n_max, std::size_t trials,
                                                  unsigned threads = 0) {
  cfg.validate();
  if (n_max < 1) throw DomainError("monte_carlo_moments: n_max must be at least 1");
  if (trials < 2) throw DomainError("monte_carlo_moments: need at least two trials");
  auto per_trial = run_trials(
      trials, [&](std::size_t t) { return moment_sequence(sample_wigner(cfg, t), cfg.d, n_max); }, threads);
  std::vector<MomentRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<double> xs;
    xs.reserve(trials);
    for (const auto& seq : per_trial) xs.push_back(seq[static_cast<std::size_t>(n)]);
    const auto s = summarize(xs);
    rows.push_back({n, s.mean, s.std_error});
  }
  return rows;
}

}  // namespace gencat::randmat
