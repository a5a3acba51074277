#pragma once

/**
 * @file search.hpp
 * @brief Monte Carlo search over integer degree vectors.
 *
 * Reproducibility contract. The generator is std::mt19937_64 (its output
 * sequence is fixed by the C++ standard) seeded with rng_seed. Bounded
 * integers are drawn by rejection: for a bound n, 64-bit outputs below
 * (2^64 - n) mod n are discarded and the result is (output mod n). A degree
 * vector of n terms over [lo, hi] is a partial Fisher-Yates shuffle of
 * lo, lo+1, ..., hi: for k = 0..n-1 swap slot k with slot k + bounded(width - k),
 * then the first n slots are sorted. Search step i consumes the numerator
 * draw and then (rational searches only) the denominator draw, so draw i
 * does not depend on the total number of steps.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tropfit/approx.hpp"
#include "tropfit/error.hpp"

namespace tropfit {

class DegreeRng {
 public:
  explicit DegreeRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound).
  std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// n distinct integers from [lo, hi], uniformly without replacement, sorted.
inline DegreeVector sample_degree_vector(std::int64_t lo, std::int64_t hi, std::size_t n, DegreeRng& rng) {
  if (n == 0) throw Error(ErrorCode::InvalidConfig, "degree vector needs at least one term");
  if (hi < lo || static_cast<std::uint64_t>(hi - lo) + 1 < n)
    throw Error(ErrorCode::RangeTooNarrow, "range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                               "] holds fewer than " + std::to_string(n) + " integers");
  const auto width = static_cast<std::size_t>(hi - lo) + 1;
  std::vector<std::int64_t> pool(width);
  for (std::size_t k = 0; k < width; ++k) pool[k] = lo + static_cast<std::int64_t>(k);
  for (std::size_t k = 0; k < n; ++k) std::swap(pool[k], pool[k + rng.bounded(width - k)]);
  return DegreeVector(std::vector<Rational>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n)));
}

struct SearchConfig {
  std::size_t n_terms_numerator = 1;
  std::optional<std::size_t> n_terms_denominator;  // absent: polynomial search
  std::int64_t degree_min = 0;
  std::int64_t degree_max = 0;
  std::size_t n_samples = 1;
  std::uint64_t rng_seed = 0;
  std::size_t max_iter_two_sided = kDefaultMaxIter;
  unsigned threads = 1;
  bool record_trace = false;

  bool rational() const noexcept { return n_terms_denominator.has_value(); }

  void validate() const {
    if (n_terms_numerator == 0) throw Error(ErrorCode::InvalidConfig, "numerator needs at least one term");
    if (n_terms_denominator && *n_terms_denominator == 0)
      throw Error(ErrorCode::InvalidConfig, "denominator needs at least one term");
    if (n_samples == 0) throw Error(ErrorCode::InvalidConfig, "n_samples must be at least 1");
    if (max_iter_two_sided == 0) throw Error(ErrorCode::InvalidConfig, "max_iter must be at least 1");
    const std::size_t need = std::max(n_terms_numerator, n_terms_denominator.value_or(0));
    if (degree_max < degree_min || static_cast<std::uint64_t>(degree_max - degree_min) + 1 < need)
      throw Error(ErrorCode::RangeTooNarrow, "degree range is narrower than the number of terms");
  }
};

struct DegreeDraw {
  DegreeVector numerator;
  std::optional<DegreeVector> denominator;
};

struct TracePoint {
  std::size_t index;
  double delta;
};

struct FailedDraw {
  std::size_t index;
  std::string message;
};

template <Semifield S>
struct SearchReport {
  FitReport<S> best;
  DegreeDraw best_degrees;
  std::size_t best_index = 0;
  std::size_t samples_evaluated = 0;
  std::vector<TracePoint> error_trace;
  std::vector<FailedDraw> failures;
};

/// The first config.n_samples draws of the seeded stream.
inline std::vector<DegreeDraw> draw_degree_vectors(const SearchConfig& config) {
  config.validate();
  DegreeRng rng(config.rng_seed);
  std::vector<DegreeDraw> draws;
  draws.reserve(config.n_samples);
  for (std::size_t i = 0; i < config.n_samples; ++i) {
    DegreeDraw d{sample_degree_vector(config.degree_min, config.degree_max, config.n_terms_numerator, rng), {}};
    if (config.n_terms_denominator)
      d.denominator = sample_degree_vector(config.degree_min, config.degree_max, *config.n_terms_denominator, rng);
    draws.push_back(std::move(d));
  }
  return draws;
}

/**
 * Fits every draw and keeps the one with the smallest squared error, ties
 * broken by draw index. Draws are split into contiguous blocks across
 * `threads` workers; the result does not depend on the thread count.
 * Draws whose fit throws are recorded in failures and skipped.
 */
template <Semifield S>
SearchReport<S> evaluate_draws(const SampleSet<S>& samples, const std::vector<DegreeDraw>& draws,
                               std::size_t max_iter_two_sided = kDefaultMaxIter, unsigned threads = 1,
                               bool record_trace = false) {
  if (draws.empty()) throw Error(ErrorCode::InvalidConfig, "no degree draws to evaluate");
  std::vector<std::optional<FitReport<S>>> fits(draws.size());
  std::vector<std::string> errors(draws.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        const auto& d = draws[i];
        fits[i] = d.denominator ? fit_rational(samples, d.numerator, *d.denominator, max_iter_two_sided)
                                : fit_polynomial(samples, d.numerator);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    }
  };

  const std::size_t n_workers = std::clamp<std::size_t>(threads, 1, draws.size());
  if (n_workers == 1) {
    work(0, draws.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t block = (draws.size() + n_workers - 1) / n_workers;
    for (std::size_t w = 0; w < n_workers; ++w) {
      const std::size_t begin = w * block;
      const std::size_t end = std::min(draws.size(), begin + block);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }

  SearchReport<S> report;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    if (!fits[i]) {
      report.failures.push_back({i, errors[i]});
      continue;
    }
    ++report.samples_evaluated;
    if (record_trace) report.error_trace.push_back({i, fits[i]->delta_star.value()});
    if (!best || fits[i]->delta_star < fits[*best]->delta_star) best = i;
  }
  if (!best) throw Error(ErrorCode::NonRegularInput, "every sampled degree class failed to fit");
  report.best = std::move(*fits[*best]);
  report.best_degrees = draws[*best];
  report.best_index = *best;
  return report;
}

template <Semifield S>
SearchReport<S> random_search(const SampleSet<S>& samples, const SearchConfig& config) {
  const auto draws = draw_degree_vectors(config);
  return evaluate_draws(samples, draws, config.max_iter_two_sided, config.threads, config.record_trace);
}

}  // namespace tropfit
