#pragma once

// Inner loops over materialized series prefixes. Every kernel exists twice:
// `serial::` is the reference used by tests, `parallel::` splits the index
// range into fixed-size chunks reduced in chunk order, so its result does not
// depend on the number of threads.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tauberlab/series.hpp"

namespace tauberlab::kernels {

/// c_n and lambda_n for n = 0 .. size()-1, lambda strictly increasing.
struct SeriesPrefix {
  std::vector<double> coeff;
  std::vector<double> lambda;

  std::size_t size() const noexcept { return coeff.size(); }
  /// Number of leading terms with lambda_n <= x.
  std::size_t count_at_most(double x) const;
};

/// Materializes every term with lambda_n <= x_max. Throws ConvergenceError if
/// that needs more than `n_cap` terms.
SeriesPrefix materialize(const CoefficientSequence& c, double x_max, std::int64_t n_cap);

/// Appends terms to `prefix` until it covers lambda_n <= x_max (or n_cap).
/// Returns false when the cap stopped it first.
bool extend(SeriesPrefix& prefix, const CoefficientSequence& c, double x_max, std::int64_t n_cap);

inline constexpr std::size_t kChunk = std::size_t{1} << 15;

namespace serial {
/// sum over lambda_n <= x of c_n (1 - lambda_n/x)^m
double riesz_sum(const SeriesPrefix& p, double x, int m);
/// sum over lambda_n <= X of c_n e^{-y lambda_n} (1 - lambda_n/X)^k
double damped_riesz_sum(const SeriesPrefix& p, double y, double X, int k);
}  // namespace serial

namespace parallel {
double riesz_sum(const SeriesPrefix& p, double x, int m);
double damped_riesz_sum(const SeriesPrefix& p, double y, double X, int k);
}  // namespace parallel

/// out[i] = fn(i) for i in [0, count), iterations spread over OpenMP threads.
/// Exceptions thrown by fn are rethrown (first by index) after the loop.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn);

/// Applies TAUBERLAB_THREADS, when set, as the OpenMP thread cap.
void apply_thread_cap_from_env();
void set_thread_cap(int threads);
int max_threads();

}  // namespace tauberlab::kernels
