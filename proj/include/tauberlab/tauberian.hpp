#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tauberlab/series.hpp"

namespace tauberlab {

enum class Condition { ClassicalBigO, ClassicalOneSided, OneSidedCesaro, Stieltjes };

std::string to_string(Condition c);

/// Finite-range evidence for a one-sided (or two-sided) boundedness claim.
///
/// Every checker monitors a quantity q along a ladder of positions and
/// records its running minimum. Lower bounds use q directly; the big-O check
/// monitors q = -|n c_n| so that K is the observed sup of |n c_n|.
///
/// Verdict policy: passed iff the observed minimum is finite and the running
/// minimum fell by at most 1e-3 per decade over the last decade examined.
struct TauberianWitness {
  Condition condition = Condition::OneSidedCesaro;
  int order = 0;
  bool passed = false;
  double K = 0.0;             // max(0, -min q): the witnessed bound constant
  double range_lo = 0.0;
  double range_hi = 0.0;
  double min_location = 0.0;  // position of the observed minimum
  double trend = 0.0;         // running-minimum change per decade, last decade
  double tail_K = 0.0;        // max(0, -min q) over the last decade only
  std::size_t points = 0;
};

inline constexpr double kTrendTolerance = 1e-3;

nlohmann::json to_json(const TauberianWitness& w);

/// Integers round(10^(i/per_decade)) up to n_max together with their
/// successors (so both parities are sampled), plus n_max itself.
std::vector<std::int64_t> index_ladder(std::int64_t n_max, int per_decade = 10);

/// b_n = O_L(1) (C, m): C_m{b_k; n} bounded below along the ladder.
TauberianWitness check_onesided_cesaro(const CoefficientSequence& b, int m, std::int64_t n_max);

/// int_0^x (t/x)(1 - t/x)^{m-1} ds(t) bounded below on the grid.
TauberianWitness check_stieltjes_condition(const StieltjesObject& s, int m, std::span<const double> x_grid);

/// The value of the Stieltjes-form integrand at one x.
double stieltjes_condition_value(const StieltjesObject& s, int m, double x);

/// (k!/x^k) (ds)^(-(k+1))(x), the order-k Riesz mean of a Stieltjes object.
double riesz_mean(const StieltjesObject& s, double x, int k);

enum class ClassicalVariant { BigO, OneSided };

/// Scans n c_n for n = 1..n_max (lambda_n = n).
TauberianWitness check_classical(const CoefficientSequence& c, ClassicalVariant variant, std::int64_t n_max);

/// n * c_n with lambda_n = n; the sequence the Littlewood conditions are stated on.
CoefficientSequence index_weighted(const CoefficientSequence& c);

/// Coefficients of p^{j}_k(theta) in the monomial basis for j = 0..m-1,
/// built from p^0_0 = 1 by
///   p^j_0 = theta p^{j-1}_0,  p^j_j = (1 - theta) p^{j-1}_{j-1},
///   p^j_k = (k + theta) p^{j-1}_k + (j - k + 1 - theta) p^{j-1}_{k-1}.
class RieszPolynomialTable {
 public:
  explicit RieszPolynomialTable(int m);

  int m() const noexcept { return m_; }
  /// Coefficient of theta^j in p^{m-1}_k.
  double coeff(int k, int j) const;
  double eval(int k, double theta) const;
  /// sum_k p^{m-1}_k(theta), accumulated without intermediate rounding to double.
  double eval_sum(double theta) const;
  /// p^{level}_k for any level < m.
  const std::vector<double>& polynomial(int level, int k) const;
  double eval_level(int level, int k, double theta) const;

 private:
  int m_;
  std::vector<std::vector<std::vector<double>>> levels_;
};

RieszPolynomialTable riesz_polynomials(int m);

struct RieszIdentity {
  double lhs = 0.0;  // T_{m-1}(x) = sum_{k<=n} (x - k)^{m-1} b_k
  double rhs = 0.0;  // (1/m!) sum_k p^{m-1}_k(theta) B_m(n - k)
};

/// x = n + theta with n = floor(x).
RieszIdentity riesz_identity_check(const CoefficientSequence& b, int m, double x);
/// Explicit split, allowing theta = 1.
RieszIdentity riesz_identity_check(const CoefficientSequence& b, int m, std::int64_t n, double theta);

}  // namespace tauberlab
