#include "tauberlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tauberlab/compensated.hpp"
#include "tauberlab/error.hpp"

namespace tauberlab::kernels {

std::size_t SeriesPrefix::count_at_most(double x) const {
  return static_cast<std::size_t>(std::upper_bound(lambda.begin(), lambda.end(), x) - lambda.begin());
}

bool extend(SeriesPrefix& prefix, const CoefficientSequence& c, double x_max, std::int64_t n_cap) {
  auto n = static_cast<std::int64_t>(prefix.size());
  const auto len = c.length();
  double previous = prefix.lambda.empty() ? -1.0 : prefix.lambda.back();
  while (true) {
    if (len && n >= *len) return true;
    const double lam = c.exponent_at(n);
    if (!(lam > previous) || !std::isfinite(lam))
      throw DomainError("exponents not strictly increasing at n=" + std::to_string(n) + " in " + c.descriptor());
    if (lam > x_max) return true;
    if (n >= n_cap) return false;
    prefix.lambda.push_back(lam);
    prefix.coeff.push_back(c.coeff_at(n));
    previous = lam;
    ++n;
  }
}

SeriesPrefix materialize(const CoefficientSequence& c, double x_max, std::int64_t n_cap) {
  SeriesPrefix p;
  if (!extend(p, c, x_max, n_cap))
    throw ConvergenceError("materializing " + c.descriptor() + " up to " + std::to_string(x_max) +
                           " exceeds the cap of " + std::to_string(n_cap) + " terms");
  return p;
}

namespace {

template <typename Term>
double serial_reduce(std::size_t count, Term term) {
  NeumaierSum acc;
  for (std::size_t i = 0; i < count; ++i) acc += term(i);
  if (!acc.finite()) throw NonFiniteResult("kernel sum overflow", static_cast<std::int64_t>(count));
  return acc.value();
}

template <typename Term>
double chunked_reduce(std::size_t count, Term term) {
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  std::vector<NeumaierSum> partial(chunks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ci = 0; ci < static_cast<std::ptrdiff_t>(chunks); ++ci) {
    const std::size_t lo = static_cast<std::size_t>(ci) * kChunk;
    const std::size_t hi = std::min(count, lo + kChunk);
    NeumaierSum acc;
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(ci)] = acc;
  }
  NeumaierSum total;
  for (const auto& p : partial) total += p;
  if (!total.finite()) throw NonFiniteResult("kernel sum overflow", static_cast<std::int64_t>(count));
  return total.value();
}

}  // namespace

namespace serial {

double riesz_sum(const SeriesPrefix& p, double x, int m) {
  const std::size_t count = p.count_at_most(x);
  return serial_reduce(count, [&](std::size_t i) { return p.coeff[i] * ipow(1.0 - p.lambda[i] / x, m); });
}

double damped_riesz_sum(const SeriesPrefix& p, double y, double X, int k) {
  const std::size_t count = p.count_at_most(X);
  return serial_reduce(count, [&](std::size_t i) {
    return p.coeff[i] * std::exp(-y * p.lambda[i]) * ipow(1.0 - p.lambda[i] / X, k);
  });
}

}  // namespace serial

namespace parallel {

double riesz_sum(const SeriesPrefix& p, double x, int m) {
  const std::size_t count = p.count_at_most(x);
  return chunked_reduce(count, [&](std::size_t i) { return p.coeff[i] * ipow(1.0 - p.lambda[i] / x, m); });
}

double damped_riesz_sum(const SeriesPrefix& p, double y, double X, int k) {
  const std::size_t count = p.count_at_most(X);
  return chunked_reduce(count, [&](std::size_t i) {
    return p.coeff[i] * std::exp(-y * p.lambda[i]) * ipow(1.0 - p.lambda[i] / X, k);
  });
}

}  // namespace parallel

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void set_thread_cap(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

void apply_thread_cap_from_env() {
  if (const char* env = std::getenv("TAUBERLAB_THREADS")) {
    const int t = std::atoi(env);
    if (t <= 0) throw DomainError(std::string("TAUBERLAB_THREADS must be a positive integer, got '") + env + "'");
    set_thread_cap(t);
  }
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace tauberlab::kernels
