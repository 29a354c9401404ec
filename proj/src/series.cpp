#include "tauberlab/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "tauberlab/compensated.hpp"
#include "tauberlab/dsl.hpp"
#include "tauberlab/error.hpp"

namespace tauberlab {

namespace {

struct Builtin {
  const char* name;
  double (*coeff)(std::int64_t);
};

// Closed forms of the shipped corpus; each has a DSL equivalent in the docs.
constexpr Builtin kBuiltins[] = {
    {"harmonic", [](std::int64_t n) { return n == 0 ? 0.0 : 1.0 / static_cast<double>(n); }},
    {"geometric", [](std::int64_t n) { return std::ldexp(1.0, -static_cast<int>(std::min<std::int64_t>(n, 2000))); }},
    {"single_jump", [](std::int64_t n) { return n == 0 ? 5.0 : 0.0; }},
    {"euler", [](std::int64_t n) { return (n % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(n + 1); }},
    {"inv_sqrt", [](std::int64_t n) { return n == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(n)); }},
    {"alt_inv_sqrt", [](std::int64_t n) { return (n % 2 == 0 ? 1.0 : -1.0) / std::sqrt(static_cast<double>(n + 1)); }},
    {"ones", [](std::int64_t) { return 1.0; }},
};

double parse_double(std::string_view field, std::size_t line) {
  while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
  while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v))
    throw ParseError("line " + std::to_string(line) + ": invalid number '" + std::string(field) + "'");
  return v;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

CoefficientSequence::CoefficientSequence(Fn coeff, std::string descriptor, Fn exponent,
                                         std::optional<std::int64_t> length)
    : coeff_(std::move(coeff)),
      exponent_(std::move(exponent)),
      length_(length),
      descriptor_(std::move(descriptor)) {
  if (!coeff_) throw DomainError("coefficient sequence without a coefficient function");
}

double CoefficientSequence::coeff_at(std::int64_t n) const {
  if (n < 0) throw DomainError("negative coefficient index " + std::to_string(n));
  if (length_ && n >= *length_) return 0.0;
  return coeff_(n);
}

double CoefficientSequence::exponent_at(std::int64_t n) const {
  if (n < 0) throw DomainError("negative exponent index " + std::to_string(n));
  return exponent_ ? exponent_(n) : static_cast<double>(n);
}

CoefficientSequence CoefficientSequence::from_expression(std::string_view coeff_src,
                                                         std::optional<std::string_view> lambda_src) {
  auto coeff = std::make_shared<const dsl::Expr>(dsl::parse(coeff_src));
  Fn coeff_fn = [coeff](std::int64_t n) { return dsl::evaluate(*coeff, n); };
  std::string descriptor = "expr:" + std::string(coeff_src);
  Fn exponent_fn;
  std::vector<std::string> warnings;
  if (lambda_src) {
    auto lambda = std::make_shared<const dsl::Expr>(dsl::parse(*lambda_src));
    exponent_fn = [lambda](std::int64_t n) { return dsl::evaluate(*lambda, n); };
    descriptor += ";lambda:" + std::string(*lambda_src);
    if (coeff->uses_alt()) {
      warnings.push_back("alt() is only defined at integer arguments; with custom exponents make sure it is applied to n, not lambda_n");
    }
  }
  CoefficientSequence seq(std::move(coeff_fn), std::move(descriptor), std::move(exponent_fn));
  seq.warnings_ = std::move(warnings);
  return seq;
}

CoefficientSequence CoefficientSequence::builtin(std::string_view name) {
  for (const auto& b : kBuiltins) {
    if (name == b.name) return CoefficientSequence(b.coeff, "builtin:" + std::string(name));
  }
  throw DomainError("unknown builtin series '" + std::string(name) + "'");
}

const std::vector<std::string>& CoefficientSequence::builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& b : kBuiltins) out.emplace_back(b.name);
    return out;
  }();
  return names;
}

CoefficientSequence CoefficientSequence::from_values(std::vector<double> coeffs,
                                                     std::vector<double> exponents,
                                                     std::string descriptor) {
  if (!exponents.empty() && exponents.size() != coeffs.size())
    throw DomainError("exponent and coefficient lists differ in length");
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    if (!(exponents[i] > exponents[i - 1]))
      throw DomainError("exponents must be strictly increasing (index " + std::to_string(i) + ")");
  }
  if (!exponents.empty() && exponents.front() < 0.0) throw DomainError("exponents must be non-negative");
  const auto len = static_cast<std::int64_t>(coeffs.size());
  auto c = std::make_shared<const std::vector<double>>(std::move(coeffs));
  Fn coeff_fn = [c](std::int64_t n) { return (*c)[static_cast<std::size_t>(n)]; };
  Fn exponent_fn;
  if (!exponents.empty()) {
    auto l = std::make_shared<const std::vector<double>>(std::move(exponents));
    // Past the data the exponents continue with unit spacing so they stay
    // strictly increasing and unbounded.
    exponent_fn = [l](std::int64_t n) {
      const auto last = static_cast<std::int64_t>(l->size()) - 1;
      if (n <= last) return (*l)[static_cast<std::size_t>(n)];
      return (last >= 0 ? l->back() : 0.0) + static_cast<double>(n - last);
    };
  }
  return CoefficientSequence(std::move(coeff_fn), std::move(descriptor), std::move(exponent_fn), len);
}

CoefficientSequence CoefficientSequence::from_csv(std::istream& in, std::string descriptor) {
  std::string line;
  std::size_t line_no = 0;
  int lambda_col = -1;
  int c_col = -1;
  std::size_t columns = 0;
  bool have_header = false;
  std::vector<double> coeffs;
  std::vector<double> lambdas;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto fields = split_commas(line);
    if (!have_header) {
      columns = fields.size();
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const auto name = trim(fields[i]);
        if (name == "lambda") lambda_col = static_cast<int>(i);
        else if (name == "c") c_col = static_cast<int>(i);
        else if (name != "n" || i != 0) throw ParseError("line " + std::to_string(line_no) + ": unexpected column '" + name + "'");
      }
      if (trim(fields[0]) != "n" || c_col < 0)
        throw ParseError("line " + std::to_string(line_no) + ": header must be n,lambda,c or n,c");
      have_header = true;
      continue;
    }
    if (fields.size() != columns)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) + " fields");
    const double n = parse_double(fields[0], line_no);
    if (n != static_cast<double>(coeffs.size()))
      throw ParseError("line " + std::to_string(line_no) + ": n must run 0, 1, 2, ... without gaps");
    coeffs.push_back(parse_double(fields[static_cast<std::size_t>(c_col)], line_no));
    if (lambda_col >= 0) lambdas.push_back(parse_double(fields[static_cast<std::size_t>(lambda_col)], line_no));
  }
  if (!have_header) throw ParseError("coefficient file has no header");
  return from_values(std::move(coeffs), std::move(lambdas), std::move(descriptor));
}

CoefficientSequence CoefficientSequence::from_csv_file(const std::string& path) {
  if (path == "-") return from_csv(std::cin, "file:-");
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open coefficient file '" + path + "'");
  return from_csv(in, "file:" + path);
}

SeriesCursor::SeriesCursor(const CoefficientSequence& seq) : seq_(&seq) { load(); }

void SeriesCursor::next() {
  const double previous = lambda_;
  ++n_;
  load();
  if (!done_ && !(lambda_ > previous)) {
    throw DomainError("exponents not strictly increasing at n=" + std::to_string(n_) + " in " +
                      seq_->descriptor());
  }
}

void SeriesCursor::load() {
  const auto len = seq_->length();
  if (len && n_ >= *len) {
    done_ = true;
    return;
  }
  lambda_ = seq_->exponent_at(n_);
  if (!std::isfinite(lambda_) || (n_ == 0 && lambda_ < 0.0))
    throw DomainError("invalid exponent at n=" + std::to_string(n_) + " in " + seq_->descriptor());
}

StieltjesObject StieltjesObject::jumps(CoefficientSequence seq) {
  StieltjesObject s;
  s.kind_ = Kind::JumpMeasure;
  s.seq_.emplace(std::move(seq));
  return s;
}

StieltjesObject StieltjesObject::sampled(std::vector<double> xs, std::vector<double> values,
                                         ZeroConvention zero) {
  if (xs.size() != values.size() || xs.empty())
    throw DomainError("sampled function needs matching, non-empty x and value lists");
  if (xs.front() != 0.0) throw DomainError("sampled function must start at x = 0");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw DomainError("sample abscissae must be strictly increasing");
  }
  StieltjesObject s;
  s.kind_ = Kind::SampledFunction;
  s.xs_ = std::move(xs);
  s.values_ = std::move(values);
  s.zero_ = zero;
  return s;
}

double StieltjesObject::value_at(double x) const {
  if (kind_ == Kind::JumpMeasure) return partial_sum(*seq_, x);
  if (x < 0.0) return 0.0;
  if (x == 0.0) return zero_ == ZeroConvention::Right ? values_.front() : 0.0;
  if (x >= xs_.back()) return values_.back();
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const auto i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  const double w = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
  return values_[i] + w * (values_[i + 1] - values_[i]);
}

double StieltjesObject::jump_at_zero() const {
  if (kind_ == Kind::SampledFunction) return values_.front();
  NeumaierSum acc;
  for (SeriesCursor cur(*seq_); !cur.done() && cur.lambda() == 0.0; cur.next()) acc += cur.coeff();
  return acc.value();
}

double StieltjesObject::s0() const {
  if (kind_ == Kind::JumpMeasure) return 0.0;
  return zero_ == ZeroConvention::Right ? values_.front() : 0.0;
}

const CoefficientSequence& StieltjesObject::sequence() const {
  if (!seq_) throw DomainError("sampled function has no coefficient sequence");
  return *seq_;
}

double ipow(double base, int exponent) noexcept {
  double result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

double factorial(int k) noexcept {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double partial_sum(const CoefficientSequence& c, double x) {
  if (!std::isfinite(x)) throw DomainError("partial_sum needs a finite x");
  NeumaierSum acc;
  SeriesCursor cur(c);
  for (; !cur.done() && cur.lambda() < x; cur.next()) {
    acc += cur.coeff();
    if (!acc.finite()) throw NonFiniteResult("partial sum overflow", cur.index());
  }
  return acc.value();
}

namespace {

// Exact integral of the piecewise-linear interpolant against (x - t)^p / p!.
double sampled_kernel_integral(const StieltjesObject& s, int p, double x) {
  const auto& xs = s.sample_xs();
  const auto& vs = s.sample_values();
  const double inv_p1 = 1.0 / factorial(p + 1);
  const double inv_p2 = 1.0 / factorial(p + 2);
  NeumaierSum acc;
  for (std::size_t i = 0; i + 1 < xs.size() && xs[i] < x; ++i) {
    const double t0 = xs[i];
    const double t1 = std::min(xs[i + 1], x);
    const double slope = (vs[i + 1] - vs[i]) / (xs[i + 1] - xs[i]);
    // With u = x - t the interpolant is A - slope * u on this segment.
    const double a = vs[i] + slope * (x - t0);
    const double u_hi = x - t0;
    const double u_lo = x - t1;
    acc += a * (ipow(u_hi, p + 1) - ipow(u_lo, p + 1)) * inv_p1;
    acc += -slope * (p + 1) * (ipow(u_hi, p + 2) - ipow(u_lo, p + 2)) * inv_p2;
  }
  if (x > xs.back()) acc += vs.back() * ipow(x - xs.back(), p + 1) * inv_p1;
  return acc.value();
}

}  // namespace

double primitive_m(const StieltjesObject& s, int m, double x) {
  if (m == 0) throw DomainError("primitive_m needs m >= 1; use partial_sum for m = 0");
  if (m < 0) throw DomainError("primitive_m: negative order " + std::to_string(m));
  if (!std::isfinite(x)) throw DomainError("primitive_m needs a finite x");
  if (x <= 0.0) return 0.0;
  if (s.kind() == StieltjesObject::Kind::SampledFunction) {
    if (m == 1) return s.value_at(x);
    return sampled_kernel_integral(s, m - 2, x);
  }
  NeumaierSum acc;
  SeriesCursor cur(s.sequence());
  for (; !cur.done() && cur.lambda() <= x; cur.next()) {
    acc += cur.coeff() * ipow(x - cur.lambda(), m - 1);
    if (!acc.finite()) throw NonFiniteResult("primitive overflow", cur.index());
  }
  return acc.value() / factorial(m - 1);
}

}  // namespace tauberlab
