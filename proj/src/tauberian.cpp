#include "tauberlab/tauberian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tauberlab/compensated.hpp"
#include "tauberlab/error.hpp"
#include "tauberlab/kernels.hpp"
#include "tauberlab/summability.hpp"

namespace tauberlab {

namespace {

TauberianWitness summarize(Condition condition, int order, std::span<const double> positions,
                           std::span<const double> values) {
  TauberianWitness w;
  w.condition = condition;
  w.order = order;
  w.points = values.size();
  if (values.empty()) return w;
  w.range_lo = positions.front();
  w.range_hi = positions.back();

  std::vector<double> running(values.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < best) {
      best = values[i];
      w.min_location = positions[i];
    }
    running[i] = best;
  }

  const double decade_start = positions.back() / 10.0;
  std::size_t i0 = 0;
  while (i0 + 1 < positions.size() && positions[i0] < decade_start) ++i0;
  const double decades = std::log10(positions.back() / positions[i0]);
  w.trend = decades > 0.0 ? (running.back() - running[i0]) / decades : 0.0;

  double tail = std::numeric_limits<double>::infinity();
  for (std::size_t i = i0; i < values.size(); ++i) tail = std::min(tail, values[i]);

  const bool finite = std::isfinite(best);
  w.K = finite ? std::max(0.0, -best) : std::numeric_limits<double>::infinity();
  w.tail_K = std::isfinite(tail) ? std::max(0.0, -tail) : std::numeric_limits<double>::infinity();
  w.passed = finite && w.trend >= -kTrendTolerance;
  return w;
}

std::vector<double> poly_times_linear(const std::vector<double>& p, double c0, double c1) {
  // p(theta) * (c0 + c1 theta)
  std::vector<double> out(p.size() + 1, 0.0);
  for (std::size_t j = 0; j < p.size(); ++j) {
    out[j] += c0 * p[j];
    out[j + 1] += c1 * p[j];
  }
  return out;
}

// Compensated Horner: the value is hi + lo, accurate as if evaluated in
// twice the working precision.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

DoubleDouble comp_horner(const std::vector<double>& p, double theta) {
  DoubleDouble r;
  if (p.empty()) return r;
  auto it = p.rbegin();
  r.hi = *it++;
  for (; it != p.rend(); ++it) {
    const double prod = r.hi * theta;
    const double prod_err = std::fma(r.hi, theta, -prod);
    const double sum = prod + *it;
    const double z = sum - prod;
    const double sum_err = (prod - (sum - z)) + (*it - z);
    r.lo = r.lo * theta + (prod_err + sum_err);
    r.hi = sum;
  }
  return r;
}

double horner(const std::vector<double>& p, double theta) {
  const auto r = comp_horner(p, theta);
  return r.hi + r.lo;
}

}  // namespace

std::string to_string(Condition c) {
  switch (c) {
    case Condition::ClassicalBigO: return "classical_bigO";
    case Condition::ClassicalOneSided: return "classical_onesided";
    case Condition::OneSidedCesaro: return "onesided_cesaro";
    case Condition::Stieltjes: return "stieltjes";
  }
  return "unknown";
}

nlohmann::json to_json(const TauberianWitness& w) {
  auto finite_or_null = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  return {
      {"condition", to_string(w.condition)},
      {"order", w.order},
      {"passed", w.passed},
      {"K", finite_or_null(w.K)},
      {"range", {w.range_lo, w.range_hi}},
      {"min_location", w.min_location},
      {"trend", finite_or_null(w.trend)},
      {"tail_K", finite_or_null(w.tail_K)},
  };
}

std::vector<std::int64_t> index_ladder(std::int64_t n_max, int per_decade) {
  if (n_max < 1) throw DomainError("index ladder needs n_max >= 1");
  std::vector<std::int64_t> out;
  for (int i = 0;; ++i) {
    const auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, static_cast<double>(i) / per_decade)));
    if (n > n_max) break;
    out.push_back(n);
    if (n + 1 <= n_max) out.push_back(n + 1);
  }
  out.push_back(n_max);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TauberianWitness check_onesided_cesaro(const CoefficientSequence& b, int m, std::int64_t n_max) {
  if (m < 1) throw DomainError("check_onesided_cesaro needs m >= 1");
  if (n_max < 10) throw DomainError("check_onesided_cesaro needs n_max >= 10");
  const auto ladder = index_ladder(n_max);
  std::vector<double> positions(ladder.begin(), ladder.end());
  std::vector<double> values(ladder.size());
  kernels::for_each_index(ladder.size(), [&](std::size_t i) { values[i] = cesaro_mean_sequence(b, ladder[i], m); });
  return summarize(Condition::OneSidedCesaro, m, positions, values);
}

double riesz_mean(const StieltjesObject& s, double x, int k) {
  if (!(x > 0.0)) throw DomainError("riesz_mean needs x > 0");
  if (s.kind() == StieltjesObject::Kind::JumpMeasure) return riesz_mean_series(s.sequence(), x, k);
  return factorial(k) / ipow(x, k) * primitive_m(s, k + 1, x);
}

double stieltjes_condition_value(const StieltjesObject& s, int m, double x) {
  if (m < 1) throw DomainError("Stieltjes condition needs m >= 1");
  if (!(x > 0.0)) throw DomainError("Stieltjes condition needs x > 0");
  if (s.kind() == StieltjesObject::Kind::SampledFunction) return riesz_mean(s, x, m - 1) - riesz_mean(s, x, m);
  NeumaierSum acc;
  for (SeriesCursor cur(s.sequence()); !cur.done() && cur.lambda() <= x; cur.next()) {
    const double u = cur.lambda() / x;
    acc += cur.coeff() * u * ipow(1.0 - u, m - 1);
    if (!acc.finite()) throw NonFiniteResult("Stieltjes condition overflow", cur.index());
  }
  return acc.value();
}

TauberianWitness check_stieltjes_condition(const StieltjesObject& s, int m, std::span<const double> x_grid) {
  if (m < 1) throw DomainError("check_stieltjes_condition needs m >= 1");
  std::vector<double> xs(x_grid.begin(), x_grid.end());
  std::sort(xs.begin(), xs.end());
  std::vector<double> values(xs.size());
  kernels::for_each_index(xs.size(), [&](std::size_t i) { values[i] = stieltjes_condition_value(s, m, xs[i]); });
  return summarize(Condition::Stieltjes, m, xs, values);
}

TauberianWitness check_classical(const CoefficientSequence& c, ClassicalVariant variant, std::int64_t n_max) {
  if (n_max < 1) throw DomainError("check_classical needs n_max >= 1");
  if (!c.has_default_exponents()) throw DomainError("classical conditions assume lambda_n = n");
  std::vector<double> positions;
  std::vector<double> values;
  positions.reserve(static_cast<std::size_t>(n_max));
  values.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double q = static_cast<double>(n) * c.coeff_at(n);
    positions.push_back(static_cast<double>(n));
    values.push_back(variant == ClassicalVariant::BigO ? -std::fabs(q) : q);
  }
  return summarize(variant == ClassicalVariant::BigO ? Condition::ClassicalBigO : Condition::ClassicalOneSided, 0,
                   positions, values);
}

CoefficientSequence index_weighted(const CoefficientSequence& c) {
  if (!c.has_default_exponents()) throw DomainError("n*c_n weighting assumes lambda_n = n");
  return CoefficientSequence([c](std::int64_t n) { return static_cast<double>(n) * c.coeff_at(n); },
                             "n*(" + c.descriptor() + ")", {}, c.length());
}

RieszPolynomialTable::RieszPolynomialTable(int m) : m_(m) {
  if (m < 1 || m > 25) throw DomainError("riesz_polynomials needs 1 <= m <= 25");
  levels_.push_back({{1.0}});
  for (int j = 1; j < m; ++j) {
    const auto& prev = levels_.back();
    std::vector<std::vector<double>> level(static_cast<std::size_t>(j) + 1);
    level[0] = poly_times_linear(prev[0], 0.0, 1.0);
    level[static_cast<std::size_t>(j)] = poly_times_linear(prev[static_cast<std::size_t>(j) - 1], 1.0, -1.0);
    for (int k = 1; k <= j - 1; ++k) {
      auto a = poly_times_linear(prev[static_cast<std::size_t>(k)], k, 1.0);
      const auto b = poly_times_linear(prev[static_cast<std::size_t>(k) - 1], j - k + 1, -1.0);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      level[static_cast<std::size_t>(k)] = std::move(a);
    }
    levels_.push_back(std::move(level));
  }
}

const std::vector<double>& RieszPolynomialTable::polynomial(int level, int k) const {
  if (level < 0 || level >= m_ || k < 0 || k > level) throw DomainError("Riesz polynomial index out of range");
  return levels_[static_cast<std::size_t>(level)][static_cast<std::size_t>(k)];
}

double RieszPolynomialTable::coeff(int k, int j) const {
  const auto& p = polynomial(m_ - 1, k);
  if (j < 0 || j >= static_cast<int>(p.size())) return 0.0;
  return p[static_cast<std::size_t>(j)];
}

double RieszPolynomialTable::eval(int k, double theta) const { return horner(polynomial(m_ - 1, k), theta); }

double RieszPolynomialTable::eval_level(int level, int k, double theta) const {
  return horner(polynomial(level, k), theta);
}

double RieszPolynomialTable::eval_sum(double theta) const {
  NeumaierSum acc;
  for (int k = 0; k < m_; ++k) {
    const auto r = comp_horner(polynomial(m_ - 1, k), theta);
    acc += r.hi;
    acc += r.lo;
  }
  return acc.value();
}

RieszPolynomialTable riesz_polynomials(int m) { return RieszPolynomialTable(m); }

RieszIdentity riesz_identity_check(const CoefficientSequence& b, int m, std::int64_t n, double theta) {
  if (m < 1) throw DomainError("riesz_identity_check needs m >= 1");
  if (n < m) throw DomainError("riesz_identity_check needs n >= m (the right side indexes B_m(n-k))");
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("riesz_identity_check needs 0 <= theta <= 1");
  const double x = static_cast<double>(n) + theta;

  NeumaierSum lhs;
  for (std::int64_t k = 0; k <= n; ++k) lhs += ipow(x - static_cast<double>(k), m - 1) * b.coeff_at(k);

  const RieszPolynomialTable table(m);
  NeumaierSum rhs;
  for (int k = 0; k < m; ++k) {
    const std::int64_t j = n - k;
    const double B = ipow(static_cast<double>(j), m) * cesaro_mean_sequence(b, j, m);
    rhs += table.eval(k, theta) * B;
  }
  return {lhs.value(), rhs.value() / factorial(m)};
}

RieszIdentity riesz_identity_check(const CoefficientSequence& b, int m, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("riesz_identity_check needs finite x >= 0");
  const double n = std::floor(x);
  return riesz_identity_check(b, m, static_cast<std::int64_t>(n), x - n);
}

}  // namespace tauberlab
