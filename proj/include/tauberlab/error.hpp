#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace tauberlab {

/// Base of every error raised by the library. The CLI maps subclasses to exit
/// codes: DomainError/SyntaxError are usage problems, the rest are numerical.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated (m = 0, n = 0 in a Cesàro mean, empty grid, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A running sum left the finite range.
class NonFiniteResult : public Error {
 public:
  NonFiniteResult(const std::string& what, std::int64_t index)
      : Error(what + " (non-finite accumulation at index " + std::to_string(index) + ")"),
        index_(index) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

/// Coefficient evaluation failed at a particular n (singularity in a DSL
/// expression, index past the end of a file-backed sequence, ...).
class EvaluationError : public Error {
 public:
  EvaluationError(std::int64_t n, std::string subexpr, const std::string& reason)
      : Error("evaluation failed at n=" + std::to_string(n) + ": " + reason + " in '" +
              subexpr + "'"),
        n_(n),
        subexpr_(std::move(subexpr)) {}
  std::int64_t n() const noexcept { return n_; }
  const std::string& subexpression() const noexcept { return subexpr_; }

 private:
  std::int64_t n_;
  std::string subexpr_;
};

/// A truncated evaluation did not reach its tail criterion within its cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Laplace–Stieltjes regularization found no stabilizing Cesàro order.
class OrderExhausted : public Error {
 public:
  OrderExhausted(const std::string& what, std::vector<double> best_gaps)
      : Error(what), best_gaps_(std::move(best_gaps)) {}
  /// Smallest successive-rung gap seen for each order k = 0..m_max.
  const std::vector<double>& best_gaps() const noexcept { return best_gaps_; }

 private:
  std::vector<double> best_gaps_;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double error_estimate)
      : Error(what + " (error estimate " + format(error_estimate) + ")"),
        error_estimate_(error_estimate) {}
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
  }

  double error_estimate_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tauberlab
