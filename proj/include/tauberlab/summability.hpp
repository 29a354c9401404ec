#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tauberlab/series.hpp"

namespace tauberlab {

/// Parses "geometric:<start>:<end>:<count>" into `count` points from start to
/// end inclusive (either direction).
std::vector<double> parse_grid(std::string_view spec);
std::vector<double> geometric_grid(double start, double end, int count);

/// C_m{b_k; n} = (m!/n^m) * sum_{k=0}^{n} binom(k+m-1, m-1) b_{n-k}.
/// Note the divisor n^m, not (n+1)^m.
double cesaro_mean_sequence(const CoefficientSequence& b, std::int64_t n, int m);

/// (C, m) mean of the partial sums s_0..s_n of sum c_j, with the same n^m
/// normalization: (m!/n^m) sum_j binom(n-j+m, m) c_j. Requires lambda_n = n.
double cesaro_mean_series(const CoefficientSequence& c, std::int64_t n, int m);

/// sum over lambda_n <= x of c_n (1 - lambda_n/x)^m; m = 0 gives the
/// partial sum with the <= convention.
double riesz_mean_series(const CoefficientSequence& c, double x, int m);

/// Riesz means at every x of a grid, evaluated concurrently.
std::vector<double> riesz_means_on_grid(const CoefficientSequence& c, std::span<const double> xs, int m);

struct AbelOptions {
  double tail_eps = 1e-14;
  std::int64_t n_max = 10'000'000;
};

/// sum c_n r^{lambda_n}, truncated once E_n r^{lambda_n}/(1-r) drops below
/// tail_eps, where E_n is the largest |c_k| among the last 64 to 128 terms.
/// E_n = 0 only counts as decay after the first 128 terms.
double abel_eval(const CoefficientSequence& c, double r, const AbelOptions& opts = {});

struct LaplaceOptions {
  double x0 = 16.0;          // first rung of the X ladder
  int rungs = 21;            // X_j = x0 * 2^j, j = 0..rungs-1
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  std::int64_t n_cap = 10'000'000;  // terms materialized for orders k >= 1
};

struct LaplaceResult {
  double value = 0.0;
  int order_used = 0;        // Cesàro/Riesz order k_y that stabilized
  double x_used = 0.0;       // ladder rung where it stabilized
  double stabilization_gap = 0.0;
  /// Stabilization up to the order cap is evidence of (C) summability at
  /// this y, not a proof; carried into every report.
  static constexpr const char* kNote = "stabilization up to m_max is numerical evidence, not proof";
};

/// Riesz-regularized integral of e^{-yx} against ds: for k = 0..m_max,
/// R_k(X) on the doubling ladder, returning the first k whose successive
/// rungs agree within max(abs_tol, rel_tol*|value|).
LaplaceResult laplace_stieltjes(const StieltjesObject& s, double y, int m_max,
                                const LaplaceOptions& opts = {});

enum class Direction { TowardInfinity, TowardZero };

struct Sample {
  double x = 0.0;
  double value = 0.0;
};

struct AsymptoticFit {
  double a = 0.0;
  double b = 0.0;
  double residual_sup = 0.0;
  double window_lo = 0.0;  // x range of the points used
  double window_hi = 0.0;
  /// sup residual over the outer quarter divided by that over the inner
  /// quarter of the fit window; below 1 is consistent with an o(1) remainder.
  double trend = 0.0;
  std::size_t points_used = 0;
  Direction direction = Direction::TowardInfinity;

  /// a + b log x, or a + b log(1/x) toward zero.
  double model(double x) const;
};

AsymptoticFit log_asymptotic_fit(std::span<const Sample> samples, Direction direction);

/// CSV exchange format `x,value`.
std::vector<Sample> read_samples_csv(std::istream& in);
void write_samples_csv(std::ostream& out, std::span<const Sample> samples);

}  // namespace tauberlab
