#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "tauberlab/constants.hpp"
#include "tauberlab/error.hpp"
#include "tauberlab/series.hpp"
#include "tauberlab/summability.hpp"

using namespace tauberlab;

TEST_CASE("partial sums use the strict convention") {
  const auto h = CoefficientSequence::builtin("harmonic");
  CHECK(partial_sum(h, 3.5) == doctest::Approx(1.0 + 0.5 + 1.0 / 3.0).epsilon(1e-15));
  CHECK(partial_sum(h, 3.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(partial_sum(h, 0.0) == 0.0);
  CHECK(partial_sum(h, -2.0) == 0.0);
  const auto e = CoefficientSequence::builtin("euler");
  CHECK(partial_sum(e, 4.5) == 3.0);
}

TEST_CASE("harmonic partial sum at 1e6") {
  const auto h = CoefficientSequence::builtin("harmonic");
  // H_999999 from an mpmath evaluation
  CHECK(partial_sum(h, 1e6) == doctest::Approx(14.3927257228657236).epsilon(1e-14));
  CHECK(std::fabs(partial_sum(h, 1e6) - (std::log(1e6) + kEulerGamma)) <= 1e-6);
}

TEST_CASE("partial sums are constant between jumps") {
  const auto c = CoefficientSequence::from_values({1.0, -2.0, 0.5}, {0.0, 1.5, 4.0});
  CHECK(partial_sum(c, 1.0) == 1.0);
  CHECK(partial_sum(c, 1.5) == 1.0);
  CHECK(partial_sum(c, 1.5000001) == -1.0);
  CHECK(partial_sum(c, 3.999) == -1.0);
  CHECK(partial_sum(c, 100.0) == -0.5);
}

TEST_CASE("overflow reports the index") {
  const auto c = CoefficientSequence::from_values({1e308, 1e308, 1.0});
  try {
    partial_sum(c, 10.0);
    FAIL("expected overflow");
  } catch (const NonFiniteResult& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("builtins match their expression forms") {
  const std::pair<const char*, const char*> forms[] = {
      {"harmonic", "if0(n, 0, 1/n)"},
      {"geometric", "2^-n"},
      {"single_jump", "if0(n, 5, 0)"},
      {"euler", "alt(n)*(n+1)"},
      {"inv_sqrt", "if0(n, 0, 1/sqrt(n))"},
      {"alt_inv_sqrt", "alt(n)/sqrt(n+1)"},
      {"ones", "1"},
  };
  for (const auto& [name, expr] : forms) {
    const auto b = CoefficientSequence::builtin(name);
    const auto d = CoefficientSequence::from_expression(expr);
    for (std::int64_t n = 0; n < 200; ++n) {
      INFO(name << " n=" << n);
      CHECK(b.coeff_at(n) == d.coeff_at(n));
    }
  }
  CHECK(CoefficientSequence::builtin_names().size() == std::size(forms));
  CHECK_THROWS_AS(CoefficientSequence::builtin("nope"), DomainError);
}

TEST_CASE("exponents") {
  const auto c = CoefficientSequence::from_expression("1", std::string_view("sqrt(n)"));
  CHECK(c.exponent_at(9) == 3.0);
  CHECK_FALSE(c.has_default_exponents());
  const auto w = CoefficientSequence::from_expression("alt(n)", std::string_view("n^2"));
  CHECK_FALSE(w.warnings().empty());
  const auto bad = CoefficientSequence::from_expression("1", std::string_view("1"));
  SeriesCursor cur(bad);
  CHECK_THROWS_AS(cur.next(), DomainError);
}

TEST_CASE("deterministic coefficients") {
  const auto c = CoefficientSequence::from_expression("sin(n)/sqrt(n+1)");
  for (std::int64_t n = 0; n < 50; ++n) CHECK(c.coeff_at(n) == c.coeff_at(n));
}

TEST_CASE("csv coefficients") {
  std::istringstream in("# comment\nn,lambda,c\n0,0,1\n\n1,0.5,2\n2,2.5,-1.5\n");
  const auto c = CoefficientSequence::from_csv(in, "test");
  CHECK(c.length() == 3);
  CHECK(c.exponent_at(1) == 0.5);
  CHECK(partial_sum(c, 3.0) == 1.5);
  CHECK(c.coeff_at(7) == 0.0);

  std::istringstream two("n,c\n0,4\n1,5\n");
  const auto d = CoefficientSequence::from_csv(two, "two");
  CHECK(partial_sum(d, 10.0) == 9.0);

  std::istringstream gap("n,c\n0,4\n2,5\n");
  CHECK_THROWS_AS(CoefficientSequence::from_csv(gap, "gap"), ParseError);
  std::istringstream header("a,b\n0,4\n");
  CHECK_THROWS_AS(CoefficientSequence::from_csv(header, "header"), ParseError);
  std::istringstream junk("n,c\n0,abc\n");
  CHECK_THROWS_AS(CoefficientSequence::from_csv(junk, "junk"), ParseError);
  std::istringstream decreasing("n,lambda,c\n0,1,1\n1,0.5,1\n");
  CHECK_THROWS_AS(CoefficientSequence::from_csv(decreasing, "dec"), Error);
}

TEST_CASE("primitive examples") {
  const auto jump = StieltjesObject::jumps(CoefficientSequence::from_values({1.0}));
  CHECK(primitive_m(jump, 2, 3.0) == 3.0);
  const auto ones = StieltjesObject::jumps(CoefficientSequence::from_values(std::vector<double>(10, 1.0)));
  CHECK(primitive_m(ones, 1, 2.5) == 3.0);
  CHECK(primitive_m(ones, 3, 0.0) == 0.0);
  CHECK(primitive_m(ones, 3, -1.0) == 0.0);
  CHECK_THROWS_AS(primitive_m(ones, 0, 1.0), DomainError);
  CHECK_THROWS_AS(primitive_m(ones, -2, 1.0), DomainError);
}

TEST_CASE("primitive is non-decreasing for non-negative jumps") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> c(40);
  for (auto& v : c) v = u(rng);
  const auto s = StieltjesObject::jumps(CoefficientSequence::from_values(c));
  for (int m = 1; m <= 4; ++m) {
    double prev = 0.0;
    for (double x = -1.0; x < 45.0; x += 0.37) {
      const double v = primitive_m(s, m, x);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("Riesz/primitive identity on random jump measures") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> len(1, 200);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> c(len(rng));
    for (auto& v : c) v = u(rng);
    const auto seq = CoefficientSequence::from_values(c);
    const auto s = StieltjesObject::jumps(seq);
    for (int m = 1; m <= 5; ++m) {
      const double x = static_cast<double>(c.size()) + 0.5 + 3.0 * (u(rng) + 1.0);
      const double lhs = factorial(m) / ipow(x, m) * primitive_m(s, m + 1, x);
      const double rhs = riesz_mean_series(seq, x, m);
      CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(rhs)));
    }
  }
}

TEST_CASE("sampled functions") {
  const auto s = StieltjesObject::sampled({0.0, 1.0, 3.0}, {2.0, 4.0, 0.0});
  CHECK(s.value_at(-0.5) == 0.0);
  CHECK(s.value_at(0.5) == 3.0);
  CHECK(s.value_at(2.0) == 2.0);
  CHECK(s.value_at(10.0) == 0.0);
  CHECK(s.jump_at_zero() == 2.0);
  CHECK(s.s0() == 2.0);
  CHECK(StieltjesObject::sampled({0.0, 1.0}, {2.0, 4.0}, ZeroConvention::Left).s0() == 0.0);
  CHECK(primitive_m(s, 1, 2.0) == 2.0);
  // int_0^1 (2 + 2t) dt = 3
  CHECK(primitive_m(s, 2, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
  // (ds)^(-3)(x) = int_0^x (x - t) s(t) dt; at x = 1: int (1 - t)(2 + 2t) dt = 4/3
  CHECK(primitive_m(s, 3, 1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(StieltjesObject::sampled({0.5, 1.0}, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(StieltjesObject::sampled({0.0, 1.0, 1.0}, {1.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(s.sequence(), DomainError);
}
