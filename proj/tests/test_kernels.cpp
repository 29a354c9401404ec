#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "tauberlab/error.hpp"
#include "tauberlab/kernels.hpp"
#include "tauberlab/summability.hpp"

using namespace tauberlab;
using namespace tauberlab::kernels;

namespace {

SeriesPrefix random_prefix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SeriesPrefix p;
  double lambda = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p.coeff.push_back(u(rng) * (1.0 + static_cast<double>(i) * 1e-3));
    p.lambda.push_back(lambda);
    lambda += 0.5 + 0.5 * (u(rng) + 1.0);
  }
  return p;
}

}  // namespace

TEST_CASE("materialize and extend") {
  const auto c = CoefficientSequence::builtin("harmonic");
  auto p = materialize(c, 10.0, 1000);
  CHECK(p.size() == 11);
  CHECK(p.count_at_most(3.0) == 4);
  CHECK(p.count_at_most(-1.0) == 0);
  CHECK(extend(p, c, 20.5, 1000));
  CHECK(p.size() == 21);
  CHECK_FALSE(extend(p, c, 1e9, 100));
  CHECK_THROWS_AS(materialize(c, 1e9, 100), ConvergenceError);
  const auto finite = materialize(CoefficientSequence::from_values({1.0, 2.0}), 1e9, 10);
  CHECK(finite.size() == 2);
}

TEST_CASE("serial and parallel kernels agree") {
  const auto p = random_prefix(3 * kChunk + 123, 42);
  const double top = p.lambda.back();
  for (int m : {0, 1, 2, 5}) {
    for (double x : {top * 0.01, top * 0.5, top * 1.01}) {
      const double s = serial::riesz_sum(p, x, m);
      const double q = parallel::riesz_sum(p, x, m);
      CHECK(std::fabs(s - q) <= 1e-12 * (1.0 + std::fabs(s)));
    }
  }
  for (int k : {0, 1, 3}) {
    const double s = serial::damped_riesz_sum(p, 1e-4, top, k);
    const double q = parallel::damped_riesz_sum(p, 1e-4, top, k);
    CHECK(std::fabs(s - q) <= 1e-12 * (1.0 + std::fabs(s)));
  }
}

TEST_CASE("parallel kernels do not depend on the thread count") {
  const auto p = random_prefix(5 * kChunk, 3);
  const double x = p.lambda.back();
  const int saved = max_threads();
  set_thread_cap(1);
  const double one = parallel::riesz_sum(p, x, 2);
  const double damped_one = parallel::damped_riesz_sum(p, 1e-3, x, 2);
  set_thread_cap(4);
  const double four = parallel::riesz_sum(p, x, 2);
  const double damped_four = parallel::damped_riesz_sum(p, 1e-3, x, 2);
  set_thread_cap(saved);
  CHECK(one == four);
  CHECK(damped_one == damped_four);
}

TEST_CASE("kernels match riesz_mean_series") {
  const auto c = CoefficientSequence::builtin("euler");
  const auto p = materialize(c, 5000.0, 10000);
  for (int m : {0, 1, 2, 3}) {
    const double direct = riesz_mean_series(c, 5000.0, m);
    CHECK(serial::riesz_sum(p, 5000.0, m) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("for_each_index visits every index and rethrows") {
  std::vector<int> hits(1000, 0);
  for_each_index(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_WITH_AS(for_each_index(100, [](std::size_t i) {
    if (i == 17 || i == 60) throw DomainError("boom " + std::to_string(i));
  }),
                       "boom 17", DomainError);
}
