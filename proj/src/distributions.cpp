#include "tauberlab/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "tauberlab/compensated.hpp"
#include "tauberlab/constants.hpp"
#include "tauberlab/error.hpp"
#include "tauberlab/kernels.hpp"

namespace tauberlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNearZero = 1e-4;      // h0: below this the difference quotient is Taylor-expanded
constexpr double kEnvelopeFloor = 1e-17;
constexpr std::int64_t kPairingTermCap = 100'000'000;

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

template <typename F>
double integrate(F f, double a, double b) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  if (!(b > a)) return 0.0;
  double error = 0.0;
  double v = GK::integrate(f, a, b, 10, 1e-14, &error);
  if (std::isfinite(v) && error <= 1e-11 * std::max(1.0, std::fabs(v))) return v;
  // Flat endpoints (bump functions) defeat the Kronrod estimate; tanh-sinh clusters nodes there.
  boost::math::quadrature::tanh_sinh<double> ts;
  double l1 = 0.0;
  v = ts.integrate(f, a, b, 1e-13, &error, &l1);
  if (!std::isfinite(v) || error > 1e-11 * std::max(1.0, l1))
    throw QuadratureError("adaptive quadrature on [" + fmt_g(a) + ", " + fmt_g(b) + "] did not converge, value " + fmt_g(v), error);
  return v;
}

// Doubling subintervals from a to b, so decaying tails are resolved.
template <typename F>
double integrate_tail(F f, double a, double b) {
  NeumaierSum acc;
  double lo = a;
  while (lo < b) {
    const double hi = std::min(b, std::max(lo * 2.0, lo + 1.0));
    acc += integrate(f, lo, hi);
    lo = hi;
  }
  return acc.value();
}

double bump_core(double x) {
  if (x <= -1.0 || x >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - x * x));
}

double bump_core_deriv(double x) {
  if (x <= -1.0 || x >= 1.0) return 0.0;
  const double d = 1.0 - x * x;
  return bump_core(x) * (-2.0 * x / (d * d));
}

}  // namespace

TestFunction::TestFunction(std::string name, Fn f, Fn df, Decay decay, double lo, double hi, double rate)
    : name_(std::move(name)),
      f_(std::move(f)),
      df_(std::move(df)),
      decay_(decay),
      lo_(lo),
      hi_(hi),
      rate_(rate),
      value_at_zero_(0.0),
      compact_hi_(decay == Decay::Compact ? hi : -kInf) {
  if (decay_ == Decay::Exponential && !(rate_ > 0.0)) throw DomainError("exponential decay needs a positive rate");
  if (decay_ == Decay::Compact && !(hi_ > lo_)) throw DomainError("compact support needs lo < hi");
  value_at_zero_ = eval(0.0);
}

double TestFunction::eval(double x) const {
  if (decay_ == Decay::Compact && (x <= lo_ || x >= hi_)) return 0.0;
  return f_(x);
}

double TestFunction::deriv_eval(double x) const {
  if (decay_ == Decay::Compact && (x <= lo_ || x >= hi_)) return 0.0;
  return df_(x);
}

double TestFunction::envelope(double x) const {
  if (x < compact_hi_) return kInf;
  switch (decay_) {
    case Decay::Compact: return 0.0;
    case Decay::Gaussian: return x >= 0.0 ? scale_ * std::exp(-x * x) : kInf;
    case Decay::Exponential: return scale_ * std::exp(-rate_ * x);
  }
  return kInf;
}

double TestFunction::tail_mass(double x, double h) const {
  const double env = envelope(x);
  if (env == 0.0 || !std::isfinite(env)) return env;
  switch (decay_) {
    case Decay::Compact: return 0.0;
    case Decay::Gaussian: return x > 0.0 ? env / -std::expm1(-2.0 * x * h) : kInf;
    case Decay::Exponential: return env / -std::expm1(-rate_ * h);
  }
  return kInf;
}

double TestFunction::truncation_point() const {
  double t = 0.0;
  switch (decay_) {
    case Decay::Compact: t = hi_; break;
    case Decay::Gaussian: t = std::sqrt(std::log(scale_ / kEnvelopeFloor)); break;
    case Decay::Exponential: t = std::log(scale_ / kEnvelopeFloor) / rate_; break;
  }
  return std::max(t, compact_hi_);
}

TestFunction TestFunction::exponential(double tau) {
  std::string name = "exp(-" + std::string(tau == 0.5 ? "0.5" : tau == 2.0 ? "2" : tau == 1.0 ? "1" : std::to_string(tau)) + "x)";
  return TestFunction(
      std::move(name), [tau](double x) { return std::exp(-tau * x); },
      [tau](double x) { return -tau * std::exp(-tau * x); }, Decay::Exponential, 0.0, kInf, tau);
}

TestFunction TestFunction::gaussian() {
  return TestFunction(
      "gaussian", [](double x) { return std::exp(-x * x); }, [](double x) { return -2.0 * x * std::exp(-x * x); },
      Decay::Gaussian, -kInf, kInf, 0.0);
}

TestFunction TestFunction::bump() {
  return TestFunction("bump", bump_core, bump_core_deriv, Decay::Compact, -1.0, 1.0, 0.0);
}

TestFunction TestFunction::shifted_bump() {
  return TestFunction(
      "shifted_bump", [](double x) { return bump_core(2.0 * x - 3.0); },
      [](double x) { return 2.0 * bump_core_deriv(2.0 * x - 3.0); }, Decay::Compact, 1.0, 2.0, 0.0);
}

std::vector<TestFunction> TestFunction::dictionary() {
  return {exponential(0.5), exponential(1.0), exponential(2.0), gaussian(), bump(), shifted_bump()};
}

std::optional<TestFunction> TestFunction::by_name(const std::string& name) {
  for (auto& phi : dictionary()) {
    if (phi.name() == name) return phi;
  }
  return std::nullopt;
}

TestFunction linear_combination(double alpha, const TestFunction& f, double beta, const TestFunction& g) {
  using Decay = TestFunction::Decay;
  auto slower = [](const TestFunction& p, const TestFunction& q) -> const TestFunction& {
    auto rank = [](const TestFunction& t) { return t.decay_ == Decay::Exponential ? 2 : t.decay_ == Decay::Gaussian ? 1 : 0; };
    if (rank(p) != rank(q)) return rank(p) > rank(q) ? p : q;
    if (p.decay_ == Decay::Exponential) return p.rate_ <= q.rate_ ? p : q;
    return p;
  };
  const TestFunction& s = slower(f, g);
  const double lo = std::min(f.lo_, g.lo_);
  const double hi = std::max(f.hi_, g.hi_);
  TestFunction out(
      "(" + std::to_string(alpha) + "*" + f.name_ + "+" + std::to_string(beta) + "*" + g.name_ + ")",
      [alpha, beta, f, g](double x) { return alpha * f.eval(x) + beta * g.eval(x); },
      [alpha, beta, f, g](double x) { return alpha * f.deriv_eval(x) + beta * g.deriv_eval(x); }, s.decay_,
      s.decay_ == Decay::Compact ? lo : -kInf, s.decay_ == Decay::Compact ? hi : kInf, s.rate_);
  out.compact_hi_ = std::max(f.compact_hi_, g.compact_hi_);
  out.scale_ = std::fabs(alpha) * f.scale_ + std::fabs(beta) * g.scale_;
  return out;
}

double pf_pairing(const TestFunction& phi) {
  const double phi0 = phi.value_at_zero();
  const double d1 = phi.deriv_eval(0.0);
  constexpr double h = 1e-6;
  const double d2 = (phi.deriv_eval(h) - d1) / h;
  // On (0, h0) the quotient (phi(x) - phi(0))/x is replaced by phi'(0) + x phi''(0)/2.
  const double near = d1 * kNearZero + d2 * kNearZero * kNearZero / 4.0;
  const double mid = integrate([&](double x) { return (phi.eval(x) - phi0) / x; }, kNearZero, 1.0);
  const double upper = phi.truncation_point();
  const double tail = upper > 1.0 ? integrate_tail([&](double x) { return phi.eval(x) / x; }, 1.0, upper) : 0.0;
  return near + mid + tail;
}

double delta_pairing(const TestFunction& phi) { return phi.value_at_zero(); }

namespace {

double jump_pairing(const CoefficientSequence& c, double lambda, const TestFunction& phi) {
  NeumaierSum acc;
  double c_max = 0.0;
  double previous_t = 0.0;
  double spacing = 0.0;
  SeriesCursor cur(c);
  for (; !cur.done(); cur.next()) {
    if (cur.index() >= kPairingTermCap)
      throw ConvergenceError("scaled pairing of " + c.descriptor() + " against " + phi.name() +
                             " not truncatable within " + std::to_string(kPairingTermCap) + " terms");
    const double t = cur.lambda() / lambda;
    if (phi.envelope(t) == 0.0) break;
    if (cur.index() > 0) spacing = t - previous_t;
    previous_t = t;
    // Remaining terms from this one on, assuming the current spacing persists.
    if (c_max > 0.0 && spacing > 0.0) {
      const double bound = c_max * phi.tail_mass(t, spacing);
      if (bound <= 1e-17 * std::fabs(acc.value()) || bound < 1e-300) break;
    }
    const double cn = cur.coeff();
    c_max = std::max(c_max, std::fabs(cn));
    acc += cn * phi.eval(t);
    if (!acc.finite()) throw NonFiniteResult("scaled pairing overflow", cur.index());
  }
  return acc.value() / lambda;
}

}  // namespace

double scaled_derivative_pairing(const StieltjesObject& s, double lambda, const TestFunction& phi) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("scaled pairing needs finite lambda > 0");
  if (s.kind() == StieltjesObject::Kind::JumpMeasure) return jump_pairing(s.sequence(), lambda, phi);
  return scaled_derivative_pairing_by_parts(s, lambda, phi);
}

double scaled_derivative_pairing_by_parts(const StieltjesObject& s, double lambda, const TestFunction& phi) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("scaled pairing needs finite lambda > 0");
  const double u_end = lambda * phi.truncation_point();
  if (!std::isfinite(u_end)) throw ConvergenceError("test function " + phi.name() + " has no truncation point");
  auto dphi = [&](double u) { return phi.deriv_eval(u / lambda); };
  NeumaierSum acc;

  if (s.kind() == StieltjesObject::Kind::SampledFunction) {
    const auto& xs = s.sample_xs();
    for (std::size_t i = 0; i + 1 < xs.size() && xs[i] < u_end; ++i) {
      const double hi = std::min(xs[i + 1], u_end);
      acc += integrate([&](double u) { return s.value_at(u) * dphi(u); }, xs[i], hi);
    }
    if (xs.back() < u_end) {
      const double last = s.sample_values().back();
      acc += last * integrate_tail(dphi, xs.back(), u_end);
    }
    return -acc.value() / (lambda * lambda);
  }

  // Between consecutive jumps s is the constant running sum.
  NeumaierSum running;
  SeriesCursor cur(s.sequence());
  while (!cur.done() && cur.lambda() < u_end) {
    running += cur.coeff();
    const double lo = cur.lambda();
    cur.next();
    const double hi = cur.done() ? u_end : std::min(cur.lambda(), u_end);
    if (cur.index() >= kPairingTermCap) throw ConvergenceError("by-parts pairing exceeded the term cap");
    const double level = running.value();
    if (level != 0.0 && hi > lo) acc += level * integrate(dphi, lo, hi);
  }
  return -acc.value() / (lambda * lambda);
}

std::vector<PairingSeries> check_expansion(const StieltjesObject& s, std::span<const TestFunction> phis, double a,
                                           double b, std::span<const double> lambda_grid, double tolerance) {
  const std::size_t n = lambda_grid.size();
  if (n < 6) throw DomainError("check_expansion needs a ladder of at least 6 points");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lambda_grid[i] > 0.0)) throw DomainError("lambda ladder must be positive");
    if (i >= 2) {
      const double r1 = lambda_grid[i] / lambda_grid[i - 1];
      const double r0 = lambda_grid[i - 1] / lambda_grid[i - 2];
      if (std::fabs(r1 - r0) > 1e-9 * r0) throw DomainError("lambda ladder must be geometric");
    }
  }
  if (!(lambda_grid[1] > lambda_grid[0])) throw DomainError("lambda ladder must increase");

  std::vector<double> pf(phis.size());
  for (std::size_t j = 0; j < phis.size(); ++j) pf[j] = pf_pairing(phis[j]);

  std::vector<PairingSeries> out(phis.size());
  for (std::size_t j = 0; j < phis.size(); ++j) {
    out[j].phi_name = phis[j].name();
    out[j].lambda.assign(lambda_grid.begin(), lambda_grid.end());
    out[j].scaled_values.resize(n);
    out[j].residuals.resize(n);
  }
  kernels::for_each_index(phis.size() * n, [&](std::size_t task) {
    const std::size_t j = task / n;
    const std::size_t i = task % n;
    const double lam = lambda_grid[i];
    const double scaled = lam * scaled_derivative_pairing(s, lam, phis[j]);
    out[j].scaled_values[i] = scaled;
    out[j].residuals[i] = scaled - (a + b * std::log(lam)) * phis[j].value_at_zero() - b * pf[j];
  });

  const std::size_t used = (n + 1) / 2;
  const std::size_t first = n - used;
  const std::size_t inner = used / 2;
  for (auto& series : out) {
    double inner_sup = 0.0;
    double outer_sup = 0.0;
    for (std::size_t i = first; i < n; ++i) {
      const double r = std::fabs(series.residuals[i]);
      double& side = (i - first) < inner ? inner_sup : outer_sup;
      side = std::max(side, r);
    }
    series.sup_residual = std::max(inner_sup, outer_sup);
    if (inner_sup > 0.0) series.trend = outer_sup / inner_sup;
    else series.trend = outer_sup > 0.0 ? kInf : 0.0;
    const bool shrinking = series.sup_residual <= kResidualNoiseFloor || series.trend < 1.0;
    series.verified = series.sup_residual <= tolerance && shrinking;
  }
  return out;
}

nlohmann::json to_json(const PairingSeries& p) {
  auto finite_or_null = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  return {
      {"phi_name", p.phi_name},
      {"lambda", p.lambda},
      {"scaled_values", p.scaled_values},
      {"residuals", p.residuals},
      {"sup_residual", p.sup_residual},
      {"trend", finite_or_null(p.trend)},
      {"verdict", p.verified ? "verified" : "not-verified"},
  };
}

double l_m(double x, int m) {
  if (m < 1) throw DomainError("l_m needs m >= 1");
  if (x <= 0.0) return 0.0;
  return ipow(x, m) / factorial(m) * (std::log(x) - harmonic_number(m));
}

}  // namespace tauberlab
