#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tauberlab {

/// Coefficients c_n attached to exponents lambda_n (lambda_n = n unless given).
/// Evaluation is lazy and deterministic; a sequence is immutable once built.
class CoefficientSequence {
 public:
  using Fn = std::function<double(std::int64_t)>;

  /// `exponent` may be empty, meaning lambda_n = n. `length`, when set, marks
  /// a finite sequence: c_n = 0 for n >= length.
  CoefficientSequence(Fn coeff, std::string descriptor, Fn exponent = {},
                      std::optional<std::int64_t> length = std::nullopt);

  double coeff_at(std::int64_t n) const;
  double exponent_at(std::int64_t n) const;
  bool has_default_exponents() const noexcept { return !exponent_; }
  std::optional<std::int64_t> length() const noexcept { return length_; }
  const std::string& descriptor() const noexcept { return descriptor_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// c_n given by a DSL expression, lambda_n optionally by another.
  static CoefficientSequence from_expression(std::string_view coeff_src,
                                             std::optional<std::string_view> lambda_src = {});
  static CoefficientSequence builtin(std::string_view name);
  static const std::vector<std::string>& builtin_names();
  /// Finite sequence from explicit values (lambda defaults to 0, 1, 2, ...).
  static CoefficientSequence from_values(std::vector<double> coeffs,
                                         std::vector<double> exponents = {},
                                         std::string descriptor = "values");
  /// CSV with header `n,lambda,c` or `n,c`; `#` comments and blank lines skipped.
  static CoefficientSequence from_csv(std::istream& in, std::string descriptor);
  /// Path "-" reads standard input.
  static CoefficientSequence from_csv_file(const std::string& path);

 private:
  Fn coeff_;
  Fn exponent_;
  std::optional<std::int64_t> length_;
  std::string descriptor_;
  std::vector<std::string> warnings_;
};

/// Forward iteration over (n, lambda_n, c_n) that enforces strictly increasing
/// exponents and stops at the end of finite sequences. The coefficient is only
/// evaluated on demand, so callers can test lambda_n against a bound first.
class SeriesCursor {
 public:
  explicit SeriesCursor(const CoefficientSequence& seq);

  bool done() const noexcept { return done_; }
  std::int64_t index() const noexcept { return n_; }
  double lambda() const noexcept { return lambda_; }
  double coeff() const { return seq_->coeff_at(n_); }
  void next();

 private:
  void load();

  const CoefficientSequence* seq_;
  std::int64_t n_ = 0;
  double lambda_ = 0.0;
  bool done_ = false;
};

/// Which one-sided value a sampled function reports for s(0).
enum class ZeroConvention { Left, Right };

/// A locally-BV function s with s(x) = 0 for x < 0: either the jump measure of
/// a coefficient sequence or a piecewise-linear interpolant of samples.
class StieltjesObject {
 public:
  enum class Kind { JumpMeasure, SampledFunction };

  static StieltjesObject jumps(CoefficientSequence seq);
  /// xs strictly increasing with xs[0] == 0; s is held constant past xs.back().
  static StieltjesObject sampled(std::vector<double> xs, std::vector<double> values,
                                 ZeroConvention zero = ZeroConvention::Right);

  Kind kind() const noexcept { return kind_; }
  /// s(x). Jump measures use the strict convention sum over lambda_n < x.
  double value_at(double x) const;
  /// Total jump of s at the origin, i.e. s(0+) - s(0-).
  double jump_at_zero() const;
  /// s(0) under the configured convention (jump measures: s(0) = 0).
  double s0() const;

  const CoefficientSequence& sequence() const;
  const std::vector<double>& sample_xs() const noexcept { return xs_; }
  const std::vector<double>& sample_values() const noexcept { return values_; }

 private:
  StieltjesObject() = default;

  Kind kind_ = Kind::JumpMeasure;
  std::optional<CoefficientSequence> seq_;
  std::vector<double> xs_;
  std::vector<double> values_;
  ZeroConvention zero_ = ZeroConvention::Right;
};

/// s(x) = sum over lambda_n < x of c_n, compensated. 0 when x <= lambda_0.
double partial_sum(const CoefficientSequence& c, double x);

/// (ds)^(-m)(x) = sum over lambda_n <= x of c_n (x - lambda_n)^(m-1) / (m-1)!
/// for jump measures; the same kernel applied exactly to the interpolant for
/// sampled functions. Zero for x <= 0. Requires m >= 1.
double primitive_m(const StieltjesObject& s, int m, double x);

/// Integer power by repeated squaring; used by every polynomial kernel.
double ipow(double base, int exponent) noexcept;

/// k! as a double.
double factorial(int k) noexcept;

}  // namespace tauberlab
