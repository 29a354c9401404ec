#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "tauberlab/constants.hpp"
#include "tauberlab/error.hpp"
#include "tauberlab/summability.hpp"

using namespace tauberlab;

namespace {

std::vector<Sample> sample(std::span<const double> xs, double (*f)(double)) {
  std::vector<Sample> out;
  for (double x : xs) out.push_back({x, f(x)});
  return out;
}

}  // namespace

TEST_CASE("grids") {
  const auto g = parse_grid("geometric:1e-1:1e-5:5");
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.1);
  CHECK(g.back() == 1e-5);
  CHECK(g[2] == doctest::Approx(1e-3).epsilon(1e-14));
  CHECK(parse_grid("geometric:2:2:1").size() == 1);
  CHECK_THROWS_AS(parse_grid("linear:1:2:3"), ParseError);
  CHECK_THROWS_AS(parse_grid("geometric:1:2"), ParseError);
  CHECK_THROWS_AS(parse_grid("geometric:-1:2:3"), Error);
  CHECK_THROWS_AS(parse_grid("geometric:1:2:2.5"), ParseError);
  CHECK_THROWS_AS(parse_grid("geometric:1:x:3"), ParseError);
}

TEST_CASE("Cesaro means of sequences") {
  const auto ones = CoefficientSequence::builtin("ones");
  CHECK(cesaro_mean_sequence(ones, 4, 1) == 1.25);
  CHECK(cesaro_mean_sequence(ones, 2, 2) == 3.0);
  CHECK_THROWS_AS(cesaro_mean_sequence(ones, 0, 1), DomainError);
  CHECK_THROWS_AS(cesaro_mean_sequence(ones, 3, 0), DomainError);

  // divisor n, not n + 1
  const auto b = CoefficientSequence::from_expression("n^2 - 3");
  for (std::int64_t n = 1; n < 30; ++n) {
    double s = 0.0;
    for (std::int64_t k = 0; k <= n; ++k) s += b.coeff_at(k);
    CHECK(cesaro_mean_sequence(b, n, 1) == doctest::Approx(s / static_cast<double>(n)).epsilon(1e-14));
  }
}

TEST_CASE("C2 means of (-1)^n n(n+1) stay within [-1/2, 1/2]") {
  const auto b = CoefficientSequence::from_expression("alt(n)*n*(n+1)");
  double lo = 0.0, hi = 0.0;
  for (std::int64_t n = 1000; n <= 10000; n += 37) {
    const double v = cesaro_mean_sequence(b, n, 2);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(lo >= -0.5 - 1e-2);
  CHECK(hi <= 0.5 + 1e-2);
  CHECK(hi - lo > 0.9);
}

TEST_CASE("Cesaro means of series") {
  const auto e = CoefficientSequence::builtin("euler");
  // (C,2) of 1 - 2 + 3 - ... tends to 1/4; (C,1) alternates near 0 and 1/2
  CHECK(cesaro_mean_series(e, 10000, 2) == doctest::Approx(0.25).epsilon(1e-3));
  CHECK(std::fabs(cesaro_mean_series(e, 10000, 1) - cesaro_mean_series(e, 10001, 1)) > 0.49);
  const auto ones = CoefficientSequence::builtin("ones");
  // partial sums 1..5 averaged with divisor 4
  CHECK(cesaro_mean_series(ones, 4, 1) == doctest::Approx(15.0 / 4.0).epsilon(1e-15));
  CHECK(cesaro_mean_series(ones, 4, 0) == 5.0);
  CHECK_THROWS_AS(cesaro_mean_series(CoefficientSequence::from_expression("1", std::string_view("n^2")), 4, 1), DomainError);
}

TEST_CASE("Riesz means") {
  const auto jump = CoefficientSequence::from_values({1.0});
  for (int m = 0; m < 5; ++m) CHECK(riesz_mean_series(jump, 1.0, m) == 1.0);
  const auto e = CoefficientSequence::builtin("euler");
  CHECK(std::fabs(riesz_mean_series(e, 1e4, 2) - 0.25) <= 1e-2);
  CHECK(riesz_mean_series(e, 4.0, 0) == 3.0);
  const double even = riesz_mean_series(e, 1000.0, 1);
  const double odd = riesz_mean_series(e, 1001.0, 1);
  CHECK(std::fabs(even - odd) > 0.45);
  CHECK_THROWS_AS(riesz_mean_series(e, 0.0, 1), DomainError);
  CHECK_THROWS_AS(riesz_mean_series(e, 10.0, -1), DomainError);

  const std::vector<double> xs = {10.0, 100.0, 1000.0, 3333.3};
  const auto grid = riesz_means_on_grid(e, xs, 2);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(grid[i] == doctest::Approx(riesz_mean_series(e, xs[i], 2)).epsilon(1e-12));
}

TEST_CASE("Abel evaluation") {
  CHECK(abel_eval(CoefficientSequence::builtin("geometric"), 0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  // 1/(1 + r)^2 at r = 0.999, mpmath
  CHECK(std::fabs(abel_eval(CoefficientSequence::builtin("euler"), 0.999) - 0.250250187625078172) <= 1e-9);
  // -log(1 - e^{-y}) at y = 1e-3, mpmath
  CHECK(std::fabs(abel_eval(CoefficientSequence::builtin("harmonic"), std::exp(-1e-3)) - 6.90825523731547073) <= 1e-9);
  CHECK(abel_eval(CoefficientSequence::builtin("single_jump"), 0.0) == 5.0);
  AbelOptions tight;
  tight.n_max = 1000;
  CHECK_THROWS_AS(abel_eval(CoefficientSequence::builtin("ones"), 0.9999999, tight), ConvergenceError);
  CHECK_THROWS_AS(abel_eval(CoefficientSequence::builtin("ones"), 1.0), DomainError);
}

TEST_CASE("Laplace-Stieltjes") {
  const auto h = StieltjesObject::jumps(CoefficientSequence::builtin("harmonic"));
  const auto r = laplace_stieltjes(h, 0.01, 4);
  CHECK(std::fabs(r.value - 4.61016601932489692) <= 1e-8);
  CHECK(r.order_used == 0);

  // Absolutely convergent at y = 0.1, so no regularization is needed.
  const auto e = StieltjesObject::jumps(CoefficientSequence::builtin("euler"));
  const auto re = laplace_stieltjes(e, 0.1, 4);
  CHECK(std::fabs(re.value - 0.275603147286048018) <= 1e-6);

  const auto j = StieltjesObject::jumps(CoefficientSequence::builtin("single_jump"));
  for (double y : {1e-5, 0.3, 7.0}) {
    const auto rj = laplace_stieltjes(j, y, 2);
    CHECK(rj.value == 5.0);
    CHECK(rj.order_used == 0);
  }

  // m_max = 0 agrees with Abel at r = e^{-y}
  const auto g = CoefficientSequence::builtin("alt_inv_sqrt");
  const double y = 0.05;
  const double lap = laplace_stieltjes(StieltjesObject::jumps(g), y, 0).value;
  CHECK(lap == doctest::Approx(abel_eval(g, std::exp(-y))).epsilon(1e-9));

  CHECK_THROWS_AS(laplace_stieltjes(h, 0.0, 2), DomainError);
}

TEST_CASE("Laplace-Stieltjes needs regularization for oscillating growth") {
  // c_n = cos(sqrt n) e^{sqrt n}: every order k <= 1 fails to settle at small y
  const auto wild = StieltjesObject::jumps(CoefficientSequence::from_expression("alt(n)*exp(sqrt(n))"));
  LaplaceOptions opts;
  opts.rungs = 6;
  try {
    laplace_stieltjes(wild, 1e-3, 1, opts);
    FAIL("expected order exhaustion");
  } catch (const OrderExhausted& ex) {
    CHECK(ex.best_gaps().size() == 2);
  }
}

TEST_CASE("Laplace-Stieltjes of a sampled function") {
  // s(x) = x on [0, 10], constant after: ds = dx on (0, 10)
  const auto s = StieltjesObject::sampled({0.0, 10.0}, {0.0, 10.0});
  const double y = 0.5;
  const auto r = laplace_stieltjes(s, y, 2);
  CHECK(r.value == doctest::Approx((1.0 - std::exp(-10.0 * y)) / y).epsilon(1e-10));
  // jump at zero included
  const auto t = StieltjesObject::sampled({0.0, 1.0}, {3.0, 3.0});
  CHECK(laplace_stieltjes(t, 2.0, 1).value == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("log fit") {
  const std::vector<double> xs = {10.0, 100.0, 1000.0, 10000.0};
  const auto exact = sample(xs, [](double x) { return 2.0 + 3.0 * std::log(x); });
  const auto fit = log_asymptotic_fit(exact, Direction::TowardInfinity);
  CHECK(fit.a == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.b == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.residual_sup <= 1e-10 * 6.0);
  CHECK(fit.residual_sup >= 0.0);

  const auto ys = geometric_grid(1e-1, 1e-5, 41);
  const auto harmonic = log_asymptotic_fit(sample(ys, [](double y) { return -std::log(-std::expm1(-y)); }), Direction::TowardZero);
  CHECK(std::fabs(harmonic.a) <= 1e-3);
  CHECK(std::fabs(harmonic.b - 1.0) <= 1e-3);
  CHECK(harmonic.trend < 1.0);
  CHECK(harmonic.window_lo == doctest::Approx(1e-5));

  const auto euler = log_asymptotic_fit(sample(ys, [](double y) { return 1.0 / ((1.0 + std::exp(-y)) * (1.0 + std::exp(-y))); }),
                                        Direction::TowardZero);
  CHECK(std::fabs(euler.a - 0.25) <= 1e-3);
  CHECK(std::fabs(euler.b) <= 1e-3);
}

TEST_CASE("fit is equivariant under shifts") {
  const auto ys = geometric_grid(1e-1, 1e-5, 21);
  auto base = sample(ys, [](double y) { return std::sin(1.0 / (1.0 + y)) + std::log(1.0 / y); });
  auto shifted = base;
  for (auto& s : shifted) s.value += 7.25;
  const auto f0 = log_asymptotic_fit(base, Direction::TowardZero);
  const auto f1 = log_asymptotic_fit(shifted, Direction::TowardZero);
  CHECK(std::fabs(f1.b - f0.b) <= 1e-12);
  CHECK(std::fabs(f1.a - f0.a - 7.25) <= 1e-12);
}

TEST_CASE("fit preconditions") {
  std::vector<Sample> few = {{1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}};
  CHECK_THROWS_AS(log_asymptotic_fit(few, Direction::TowardInfinity), DomainError);
  std::vector<Sample> flat = {{2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}};
  CHECK_THROWS_AS(log_asymptotic_fit(flat, Direction::TowardInfinity), DomainError);
  std::vector<Sample> zigzag = {{1.0, 1.0}, {3.0, 2.0}, {2.0, 3.0}, {4.0, 4.0}};
  CHECK_THROWS_AS(log_asymptotic_fit(zigzag, Direction::TowardInfinity), DomainError);
}

TEST_CASE("sample csv round trip") {
  const std::vector<Sample> s = {{0.1, 1.0 / 3.0}, {1e-7, -2.5}, {3.0, 1e300}};
  std::ostringstream out;
  write_samples_csv(out, s);
  std::istringstream in(out.str());
  const auto back = read_samples_csv(in);
  REQUIRE(back.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(back[i].x == s[i].x);
    CHECK(back[i].value == s[i].value);
  }
  std::istringstream bad("x,value\n1,2,3\n");
  CHECK_THROWS_AS(read_samples_csv(bad), ParseError);
}

TEST_CASE("convergent series agree across methods") {
  for (const char* name : {"geometric", "single_jump"}) {
    const auto c = CoefficientSequence::builtin(name);
    const double direct = partial_sum(c, 2000.0);
    CHECK(std::fabs(abel_eval(c, 1.0 - 1e-7) - direct) <= 1e-6);
    CHECK(std::fabs(riesz_mean_series(c, 1e7, 1) - direct) <= 1e-6);
  }
}
