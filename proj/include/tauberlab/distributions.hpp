#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tauberlab/series.hpp"

namespace tauberlab {

/// Smooth test function with derivative access and enough decay metadata to
/// truncate sums and integrals against it.
class TestFunction {
 public:
  enum class Decay { Compact, Gaussian, Exponential };
  using Fn = std::function<double(double)>;

  /// For Compact, `lo`/`hi` bound the support and eval() is zero outside.
  /// For Exponential, `rate` is tau in |phi(x)| <= e^{-tau x}.
  TestFunction(std::string name, Fn f, Fn df, Decay decay, double lo, double hi, double rate);

  double eval(double x) const;
  double deriv_eval(double x) const;
  double value_at_zero() const noexcept { return value_at_zero_; }
  const std::string& name() const noexcept { return name_; }
  Decay decay() const noexcept { return decay_; }

  /// Upper bound for |phi(t)| over t >= x; +inf inside a compact support.
  double envelope(double x) const;
  /// Bound for sum_{j>=0} |phi(x + j h)|.
  double tail_mass(double x, double h) const;
  /// A point past which |phi| stays below 1e-17 (compact: end of support).
  double truncation_point() const;

  static TestFunction exponential(double tau);
  static TestFunction gaussian();
  /// exp(-1/(1-x^2)) on (-1, 1).
  static TestFunction bump();
  /// The bump moved to (1, 2).
  static TestFunction shifted_bump();
  /// e^{-x/2}, e^{-x}, e^{-2x}, gaussian, bump, shifted bump.
  static std::vector<TestFunction> dictionary();
  static std::optional<TestFunction> by_name(const std::string& name);

  friend TestFunction linear_combination(double alpha, const TestFunction& f, double beta, const TestFunction& g);

 private:
  std::string name_;
  Fn f_;
  Fn df_;
  Decay decay_;
  double lo_;
  double hi_;
  double rate_;
  double value_at_zero_;
  // Linear combinations: compact parts end at compact_hi_, the rest decays
  // like decay_ scaled by scale_.
  double compact_hi_;
  double scale_ = 1.0;
};

TestFunction linear_combination(double alpha, const TestFunction& f, double beta, const TestFunction& g);

/// <Pf(H(x)/x), phi> = int_0^1 (phi(x) - phi(0))/x dx + int_1^inf phi(x)/x dx.
double pf_pairing(const TestFunction& phi);

/// <delta, phi> = phi(0).
double delta_pairing(const TestFunction& phi);

/// <s'(lambda x), phi(x)>. Jump measures: lambda^{-1} sum c_n phi(lambda_n/lambda).
/// Sampled functions: -lambda^{-2} int s(u) phi'(u/lambda) du.
double scaled_derivative_pairing(const StieltjesObject& s, double lambda, const TestFunction& phi);

/// The integration-by-parts route for any Stieltjes object, by quadrature of
/// s(u) phi'(u/lambda) between jumps. Used to cross-check the direct sum.
double scaled_derivative_pairing_by_parts(const StieltjesObject& s, double lambda, const TestFunction& phi);

struct PairingSeries {
  std::string phi_name;
  std::vector<double> lambda;
  std::vector<double> scaled_values;  // lambda * <s'(lambda x), phi(x)>
  std::vector<double> residuals;
  double sup_residual = 0.0;          // over the outer half of the ladder
  double trend = 0.0;                 // outer-quarter sup / inner-quarter sup
  bool verified = false;
};

/// Residuals below this are treated as exact and need no trend.
inline constexpr double kResidualNoiseFloor = 1e-10;

/// r(lambda) = lambda <s'(lambda x), phi> - (a + b log lambda) phi(0) - b <Pf(H/x), phi>
/// for each phi on a geometric ladder (>= 6 points). verified when the outer-
/// half sup is within `tolerance` and the residual shrinks (trend < 1).
std::vector<PairingSeries> check_expansion(const StieltjesObject& s, std::span<const TestFunction> phis, double a,
                                           double b, std::span<const double> lambda_grid, double tolerance = 1e-2);

nlohmann::json to_json(const PairingSeries& p);

/// m-primitive of H(x) log x: x^m/m! (log x - H_m) for x > 0, else 0.
double l_m(double x, int m);

}  // namespace tauberlab
