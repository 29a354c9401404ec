#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "tauberlab/constants.hpp"
#include "tauberlab/distributions.hpp"
#include "tauberlab/dsl.hpp"
#include "tauberlab/harness.hpp"
#include "tauberlab/series.hpp"
#include "tauberlab/summability.hpp"
#include "tauberlab/tauberian.hpp"

using namespace tauberlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    out.ok = false;
    out.detail += " over the " + fmt("%g", limit_s) + " s budget";
  }
  if (!out.ok) ++failures;
  std::printf("criterion %2d %-32s %s  %7.3f s  %s\n", id, title, out.ok ? "PASS" : "FAIL", secs, out.detail.c_str());
  std::fflush(stdout);
}

Outcome riesz_polynomial_positivity() {
  double worst_neg = 0.0, worst_sum = 0.0;
  for (int m = 1; m <= 12; ++m) {
    const auto table = riesz_polynomials(m);
    const double target = factorial(m - 1);
    for (int i = 0; i <= 1000; ++i) {
      const double theta = i * 1e-3;
      for (int k = 0; k < m; ++k) worst_neg = std::min(worst_neg, table.eval(k, theta));
      worst_sum = std::max(worst_sum, std::fabs(table.eval_sum(theta) - target));
    }
  }
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> len(1, 50), order(1, 5);
  std::uniform_real_distribution<double> th(0.0, 1.0);
  double worst_tb = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = order(rng);
    const int n = std::max(len(rng), m);
    std::vector<double> b(n + 1);
    for (auto& v : b) v = u(rng);
    const auto r = riesz_identity_check(CoefficientSequence::from_values(b), m, n, th(rng));
    worst_tb = std::max(worst_tb, std::fabs(r.lhs - r.rhs) / (1.0 + std::fabs(r.lhs)));
  }
  return {worst_neg >= -1e-12 && worst_sum <= 1e-10 && worst_tb <= 1e-9,
          "min p " + fmt("%.3g", worst_neg) + ", sum err " + fmt("%.3g", worst_sum) + ", T/B rel err " + fmt("%.3g", worst_tb)};
}

Outcome finite_part() {
  const double e1 = pf_pairing(TestFunction::exponential(1.0));
  const double g = pf_pairing(TestFunction::gaussian());
  const double d1 = std::fabs(e1 + kEulerGamma), d2 = std::fabs(g + kEulerGamma / 2.0);
  return {d1 <= 1e-8 && d2 <= 1e-8, "Pf(e^-x) " + fmt("%.12f", e1) + ", Pf(e^-x^2) " + fmt("%.12f", g)};
}

harness::CorpusEntry entry(const char* text) { return harness::entry_from_json(nlohmann::json::parse(text)); }

Outcome abelian_harmonic() {
  const auto e = entry(R"({"name": "harmonic", "source": {"builtin": "harmonic"},
    "abel_grid": "geometric:1e-1:1e-5:41"})");
  const auto fit = harness::abel_side_fit(e);
  const auto c = CoefficientSequence::builtin("harmonic");
  const double n = 1e6;
  const double drift = partial_sum(c, n + 0.5) - std::log(n);
  const bool fit_ok = std::fabs(fit.a) <= 1e-3 && std::fabs(fit.b - 1.0) <= 1e-3;
  const bool drift_ok = std::fabs(drift - kEulerGamma) <= 1e-3;
  const bool identity_ok = std::fabs(fit.a - (drift - fit.b * kEulerGamma)) <= 2e-3;
  return {fit_ok && drift_ok && identity_ok,
          "fit (" + fmt("%.6f", fit.a) + ", " + fmt("%.6f", fit.b) + "), H_n - log n " + fmt("%.6f", drift)};
}

Outcome littlewood_euler() {
  const auto corpus = harness::default_corpus();
  const auto it = std::find_if(corpus.begin(), corpus.end(), [](const auto& e) { return e.name == "euler"; });
  if (it == corpus.end()) return {false, "euler entry missing from the default corpus"};
  const auto c = CoefficientSequence::builtin("euler");
  double closed = 0.0;
  for (double r : {0.5, 0.9, 0.99}) closed = std::max(closed, std::fabs(abel_eval(c, r) - 1.0 / ((1.0 + r) * (1.0 + r))));
  const auto fit = harness::abel_side_fit(*it);
  const auto w = check_onesided_cesaro(index_weighted(c), 2, 100000);
  const double r2 = riesz_mean_series(c, 1e4, 2);
  double lo = INFINITY, hi = -INFINITY;
  for (std::int64_t n = 1000; n <= 10000; ++n) {
    const double v = cesaro_mean_series(c, n, 1);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const bool ok = closed <= 1e-12 && std::fabs(fit.a - 0.25) <= 1e-3 && std::fabs(fit.b) <= 1e-3 && w.passed &&
                  std::isfinite(w.K) && std::fabs(r2 - 0.25) <= 1e-2 && hi - lo > 0.4;
  return {ok, "fit (" + fmt("%.6f", fit.a) + ", " + fmt("%.2g", fit.b) + "), K " + fmt("%.4g", w.K) + ", R2(1e4) " +
                  fmt("%.6f", r2) + ", C1 range [" + fmt("%.4f", lo) + ", " + fmt("%.4f", hi) + "]"};
}

Outcome log_drift() {
  const auto c = CoefficientSequence::builtin("harmonic");
  const double x = 1e6;
  const double drift = riesz_mean_series(c, x, 1) - std::log(x);
  const double target = 0.0 + 1.0 * (kEulerGamma - 1.0);
  return {std::fabs(drift - target) <= 1e-3, "R1(1e6) - log x " + fmt("%.6f", drift) + " vs " + fmt("%.6f", target)};
}

Outcome distributional() {
  const auto s = StieltjesObject::jumps(CoefficientSequence::builtin("harmonic"));
  const std::vector<TestFunction> phis{TestFunction::exponential(1.0)};
  const auto grid = geometric_grid(1e1, 1e4, 7);
  const auto series = check_expansion(s, phis, kEulerGamma, 1.0, grid, 1e-2);
  const auto& r = series.front().residuals;
  bool decreasing = true;
  for (std::size_t i = r.size() / 2; i + 1 < r.size(); ++i) decreasing = decreasing && std::fabs(r[i + 1]) < std::fabs(r[i]);
  const double last = std::fabs(r.back());
  return {last <= 1e-2 && decreasing, "|r(1e4)| " + fmt("%.3g", last) + (decreasing ? ", decreasing" : ", not decreasing")};
}

Outcome primitive_identity() {
  std::mt19937_64 rng(20240612);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> len(1, 200), order(1, 5);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> c(len(rng)), lam(c.size());
    double l = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = u(rng);
      lam[i] = l;
      l += 0.05 + (u(rng) + 1.0);
    }
    const auto seq = CoefficientSequence::from_values(c, lam);
    const auto s = StieltjesObject::jumps(seq);
    const int m = order(rng);
    const double x = l * 0.5 * (u(rng) + 1.5);
    const double lhs = factorial(m) / ipow(x, m) * primitive_m(s, m + 1, x);
    const double rhs = riesz_mean(s, x, m);
    worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
  }
  return {worst <= 1e-12, "worst rel err " + fmt("%.3g", worst)};
}

Outcome stieltjes_equivalence() {
  std::mt19937_64 rng(20240613);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> len(1, 60), order(1, 5);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> c(len(rng)), lam(c.size());
    double l = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = u(rng);
      lam[i] = l;
      l += 0.1 + (u(rng) + 1.0);
    }
    const auto s = StieltjesObject::jumps(CoefficientSequence::from_values(c, lam));
    const int m = order(rng);
    const double x = l * 0.5 * (u(rng) + 1.5);
    const double lhs = stieltjes_condition_value(s, m, x);
    const double rhs = riesz_mean(s, x, m - 1) - riesz_mean(s, x, m);
    worst = std::max(worst, std::fabs(lhs - rhs) / (1.0 + std::fabs(lhs)));
  }
  return {worst <= 1e-12, "worst err " + fmt("%.3g", worst)};
}

dsl::NodePtr random_tree(std::mt19937_64& rng, int depth) {
  using namespace dsl;
  std::uniform_int_distribution<int> pick(0, depth <= 1 ? 1 : 9);
  auto sub = [&] { return random_tree(rng, depth - 1); };
  switch (pick(rng)) {
    case 0: return make_number(std::uniform_int_distribution<int>(-40, 40)(rng) / 8.0);
    case 1: return make_variable();
    case 2: return make_binary(NodeKind::Add, sub(), sub());
    case 3: return make_binary(NodeKind::Sub, sub(), sub());
    case 4: return make_binary(NodeKind::Mul, sub(), sub());
    case 5: return make_binary(NodeKind::Div, sub(), sub());
    case 6: return make_binary(NodeKind::Pow, sub(), make_number(std::uniform_int_distribution<int>(0, 3)(rng)));
    case 7: return make_unary(NodeKind::Neg, sub());
    case 8: {
      static const Function unary[] = {Function::Log, Function::Exp, Function::Sin, Function::Cos, Function::Sqrt, Function::Abs};
      return make_call(unary[std::uniform_int_distribution<int>(0, 5)(rng)], {sub()});
    }
    default: return make_call(Function::If0, {sub(), sub(), sub()});
  }
}

Outcome dsl_round_trip() {
  std::mt19937_64 rng(20240614);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const dsl::Expr original(random_tree(rng, 6));
    const std::string text = dsl::print(original);
    const dsl::Expr reparsed = dsl::parse(text);
    if (dsl::print(reparsed) != text) ++mismatches;
    for (std::int64_t n = 0; n <= 20; ++n) {
      double a = NAN, b = NAN;
      bool ea = false, eb = false;
      try { a = dsl::evaluate(original, n); } catch (const std::exception&) { ea = true; }
      try { b = dsl::evaluate(reparsed, n); } catch (const std::exception&) { eb = true; }
      if (ea != eb || (!ea && !(a == b || (std::isnan(a) && std::isnan(b))))) ++mismatches;
    }
  }
  const double p1 = dsl::evaluate(dsl::parse("2+3*4^2"), 0);
  const double p2 = dsl::evaluate(dsl::parse("-2^2"), 0);
  return {mismatches == 0 && p1 == 50.0 && p2 == -4.0,
          std::to_string(mismatches) + " mismatches, 2+3*4^2 = " + fmt("%g", p1) + ", -2^2 = " + fmt("%g", p2)};
}

std::string run_verify(int threads, int& rc) {
  const std::string cmd = "TAUBERLAB_THREADS=" + std::to_string(threads) + " " TAUBERLAB_CLI " verify --corpus default";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("cannot start " + cmd);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome determinism() {
  int rc = 0;
  const std::string reference = run_verify(1, rc);
  bool ok = rc == 0 && !reference.empty();
  std::string detail = "caps 1";
  for (int threads : {3, 8}) {
    const std::string other = run_verify(threads, rc);
    ok = ok && rc == 0 && other == reference;
    detail += " " + std::to_string(threads);
  }
  return {ok, detail + (ok ? " byte-identical" : " differ")};
}

}  // namespace

int main() {
  criterion(1, "riesz-polynomial positivity", 5.0, riesz_polynomial_positivity);
  criterion(2, "finite part constant", 1.0, finite_part);
  criterion(3, "abelian (harmonic)", 10.0, abelian_harmonic);
  criterion(4, "one-sided littlewood (euler)", 10.0, littlewood_euler);
  criterion(5, "log-drift littlewood", 10.0, log_drift);
  criterion(6, "distributional expansion", 0.0, distributional);
  criterion(7, "riesz/primitive identity", 0.0, primitive_identity);
  criterion(8, "stieltjes equivalence", 0.0, stieltjes_equivalence);
  criterion(9, "dsl round trip", 0.0, dsl_round_trip);
  criterion(10, "determinism", 0.0, determinism);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
