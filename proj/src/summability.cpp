#include "tauberlab/summability.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "tauberlab/compensated.hpp"
#include "tauberlab/error.hpp"
#include "tauberlab/kernels.hpp"

namespace tauberlab {

namespace {

double parse_number(std::string_view s, std::string_view what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("invalid " + std::string(what) + " '" + std::string(s) + "' in grid spec");
  return v;
}

bool stable(double previous, double current, const LaplaceOptions& o, double* gap) {
  *gap = std::fabs(current - previous);
  return *gap <= std::max(o.abs_tol, o.rel_tol * std::fabs(current));
}

// R_k(X) for a sampled function: the jump at the origin plus the absolutely
// continuous part integrated segment by segment.
double sampled_damped_riesz(const StieltjesObject& s, double y, double X, int k) {
  using Gauss = boost::math::quadrature::gauss<double, 20>;
  const auto& xs = s.sample_xs();
  const auto& vs = s.sample_values();
  NeumaierSum acc(vs.front());
  for (std::size_t i = 0; i + 1 < xs.size() && xs[i] < X; ++i) {
    const double lo = xs[i];
    const double hi = std::min(xs[i + 1], X);
    const double slope = (vs[i + 1] - vs[i]) / (xs[i + 1] - xs[i]);
    if (slope == 0.0) continue;
    // Keep e^{-yt} well resolved: pieces no longer than 1/y.
    const int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) * y)));
    const double h = (hi - lo) / pieces;
    for (int p = 0; p < pieces; ++p) {
      const double a = lo + p * h;
      acc += slope * Gauss::integrate(
                         [&](double t) { return std::exp(-y * t) * ipow(1.0 - t / X, k); }, a, a + h);
    }
  }
  return acc.value();
}

}  // namespace

std::vector<double> geometric_grid(double start, double end, int count) {
  if (count < 1) throw DomainError("grid needs at least one point");
  if (!(start > 0.0) || !(end > 0.0) || !std::isfinite(start) || !std::isfinite(end))
    throw DomainError("geometric grid endpoints must be positive and finite");
  if (count == 1) {
    if (start != end) throw DomainError("a one-point grid needs start == end");
    return {start};
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  const double ls = std::log(start);
  const double le = std::log(end);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = std::exp(ls + (le - ls) * i / (count - 1));
  out.front() = start;
  out.back() = end;
  return out;
}

std::vector<double> parse_grid(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = spec.find(':', pos);
    parts.push_back(spec.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 4 || parts[0] != "geometric")
    throw ParseError("grid spec must be geometric:<start>:<end>:<count>, got '" + std::string(spec) + "'");
  const double count = parse_number(parts[3], "count");
  if (count != std::trunc(count) || count < 1 || count > 1e6) throw ParseError("grid count must be a positive integer");
  return geometric_grid(parse_number(parts[1], "start"), parse_number(parts[2], "end"), static_cast<int>(count));
}

double cesaro_mean_sequence(const CoefficientSequence& b, std::int64_t n, int m) {
  if (n <= 0) throw DomainError("cesaro_mean_sequence needs n >= 1 (the mean divides by n^m)");
  if (m < 1) throw DomainError("cesaro_mean_sequence needs m >= 1");
  NeumaierSum acc;
  double weight = 1.0;  // binom(k+m-1, m-1)
  for (std::int64_t k = 0; k <= n; ++k) {
    if (k > 0) weight = weight * static_cast<double>(k + m - 1) / static_cast<double>(k);
    acc += weight * b.coeff_at(n - k);
    if (!acc.finite()) throw NonFiniteResult("Cesàro mean overflow", n - k);
  }
  return factorial(m) * (acc.value() / ipow(static_cast<double>(n), m));
}

double cesaro_mean_series(const CoefficientSequence& c, std::int64_t n, int m) {
  if (n <= 0) throw DomainError("cesaro_mean_series needs n >= 1");
  if (m < 0) throw DomainError("cesaro_mean_series needs m >= 0");
  if (!c.has_default_exponents()) throw DomainError("cesaro_mean_series needs lambda_n = n");
  NeumaierSum acc;
  const double dn = static_cast<double>(n);
  for (std::int64_t j = 0; j <= n; ++j) {
    // m! binom(n-j+m, m) / n^m
    double w = 1.0;
    for (int i = 1; i <= m; ++i) w *= static_cast<double>(n - j + i) / dn;
    acc += w * c.coeff_at(j);
    if (!acc.finite()) throw NonFiniteResult("Cesàro mean overflow", j);
  }
  return acc.value();
}

double riesz_mean_series(const CoefficientSequence& c, double x, int m) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("riesz_mean_series needs finite x > 0");
  if (m < 0) throw DomainError("riesz_mean_series needs m >= 0");
  NeumaierSum acc;
  for (SeriesCursor cur(c); !cur.done() && cur.lambda() <= x; cur.next()) {
    acc += cur.coeff() * ipow(1.0 - cur.lambda() / x, m);
    if (!acc.finite()) throw NonFiniteResult("Riesz mean overflow", cur.index());
  }
  return acc.value();
}

std::vector<double> riesz_means_on_grid(const CoefficientSequence& c, std::span<const double> xs, int m) {
  if (xs.empty()) return {};
  for (double x : xs) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("Riesz grid points must be finite and positive");
  }
  const double x_max = *std::max_element(xs.begin(), xs.end());
  const auto prefix = kernels::materialize(c, x_max, std::int64_t{200'000'000});
  std::vector<double> out(xs.size());
  kernels::for_each_index(xs.size(), [&](std::size_t i) { out[i] = kernels::serial::riesz_sum(prefix, xs[i], m); });
  return out;
}

double abel_eval(const CoefficientSequence& c, double r, const AbelOptions& opts) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("abel_eval needs 0 <= r < 1");
  const double log_r = r > 0.0 ? std::log(r) : -std::numeric_limits<double>::infinity();
  const double inv_gap = 1.0 / (1.0 - r);
  NeumaierSum acc;
  // Envelope of |c_k| over the last 64..128 terms, kept as two block maxima.
  constexpr std::int64_t kBlock = 64;
  double block_max = 0.0;
  double previous_block_max = 0.0;
  SeriesCursor cur(c);
  for (; !cur.done(); cur.next()) {
    if (cur.index() >= opts.n_max)
      throw ConvergenceError("abel_eval: terms of " + c.descriptor() + " at r=" + std::to_string(r) +
                             " have not decayed after " + std::to_string(opts.n_max) + " terms");
    const double lam = cur.lambda();
    const double weight = lam == 0.0 ? 1.0 : std::exp(lam * log_r);
    const double cn = cur.coeff();
    acc += cn * weight;
    if (!acc.finite()) throw NonFiniteResult("Abel sum overflow", cur.index());
    block_max = std::max(block_max, std::fabs(cn));
    const double envelope = std::max(block_max, previous_block_max);
    const bool warmed_up = cur.index() >= 2 * kBlock;
    if ((envelope > 0.0 || warmed_up) && envelope * weight * inv_gap < opts.tail_eps) break;
    if ((cur.index() + 1) % kBlock == 0) {
      previous_block_max = block_max;
      block_max = 0.0;
    }
  }
  return acc.value();
}

LaplaceResult laplace_stieltjes(const StieltjesObject& s, double y, int m_max, const LaplaceOptions& opts) {
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("laplace_stieltjes needs finite y > 0");
  if (m_max < 0) throw DomainError("laplace_stieltjes needs m_max >= 0");
  if (opts.rungs < 2 || !(opts.x0 > 0.0)) throw DomainError("laplace_stieltjes needs at least two ladder rungs");

  std::vector<double> best_gap(static_cast<std::size_t>(m_max) + 1, std::numeric_limits<double>::infinity());
  auto rung = [&](int j) { return std::ldexp(opts.x0, j); };

  if (s.kind() == StieltjesObject::Kind::SampledFunction) {
    for (int k = 0; k <= m_max; ++k) {
      double previous = sampled_damped_riesz(s, y, rung(0), k);
      for (int j = 1; j < opts.rungs; ++j) {
        const double current = sampled_damped_riesz(s, y, rung(j), k);
        double gap = 0.0;
        if (stable(previous, current, opts, &gap)) return {current, k, rung(j), gap};
        best_gap[static_cast<std::size_t>(k)] = std::min(best_gap[static_cast<std::size_t>(k)], gap);
        previous = current;
      }
    }
    throw OrderExhausted("laplace_stieltjes: no Cesàro order <= " + std::to_string(m_max) + " stabilized at y=" + std::to_string(y), best_gap);
  }

  const CoefficientSequence& c = s.sequence();

  // k = 0 streams the plain truncated sum, one pass across all rungs.
  {
    NeumaierSum acc;
    SeriesCursor cur(c);
    double previous = 0.0;
    bool capped = false;
    for (int j = 0; j < opts.rungs && !capped; ++j) {
      const double X = rung(j);
      for (; !cur.done() && cur.lambda() <= X; cur.next()) {
        if (cur.index() >= opts.n_cap) {
          capped = true;
          break;
        }
        acc += cur.coeff() * std::exp(-y * cur.lambda());
        if (!acc.finite()) throw NonFiniteResult("Laplace–Stieltjes overflow", cur.index());
      }
      if (capped) break;
      const double current = acc.value();
      if (j > 0) {
        double gap = 0.0;
        if (stable(previous, current, opts, &gap)) return {current, 0, X, gap};
        best_gap[0] = std::min(best_gap[0], gap);
      }
      previous = current;
    }
  }

  kernels::SeriesPrefix prefix;
  for (int k = 1; k <= m_max; ++k) {
    double previous = 0.0;
    for (int j = 0; j < opts.rungs; ++j) {
      const double X = rung(j);
      if (!kernels::extend(prefix, c, X, opts.n_cap)) break;
      const double current = kernels::parallel::damped_riesz_sum(prefix, y, X, k);
      if (j > 0) {
        double gap = 0.0;
        if (stable(previous, current, opts, &gap)) return {current, k, X, gap};
        best_gap[static_cast<std::size_t>(k)] = std::min(best_gap[static_cast<std::size_t>(k)], gap);
      }
      previous = current;
    }
  }
  throw OrderExhausted("laplace_stieltjes: no Cesàro order <= " + std::to_string(m_max) +
                           " stabilized at y=" + std::to_string(y) + " for " + c.descriptor(),
                       best_gap);
}

double AsymptoticFit::model(double x) const {
  const double t = direction == Direction::TowardInfinity ? std::log(x) : -std::log(x);
  return a + b * t;
}

AsymptoticFit log_asymptotic_fit(std::span<const Sample> samples, Direction direction) {
  const std::size_t n = samples.size();
  if (n < 4) throw DomainError("log_asymptotic_fit needs at least 4 samples");
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(samples[i].x > 0.0) || !std::isfinite(samples[i].x) || !std::isfinite(samples[i].value))
      throw DomainError("log_asymptotic_fit needs finite samples with x > 0");
    if (i > 0) {
      increasing = increasing && samples[i].x > samples[i - 1].x;
      decreasing = decreasing && samples[i].x < samples[i - 1].x;
    }
  }
  if (!increasing && !decreasing) {
    const bool all_equal = std::all_of(samples.begin(), samples.end(), [&](const Sample& s) { return s.x == samples[0].x; });
    if (all_equal) throw DomainError("log_asymptotic_fit: degenerate design (all x equal)");
    throw DomainError("log_asymptotic_fit needs strictly monotone x");
  }

  // Order by the regressor t so the outermost half is the tail of the list.
  struct Point {
    double t, x, v;
  };
  std::vector<Point> pts;
  pts.reserve(n);
  for (const auto& s : samples) {
    const double t = direction == Direction::TowardInfinity ? std::log(s.x) : -std::log(s.x);
    pts.push_back({t, s.x, s.value});
  }
  std::sort(pts.begin(), pts.end(), [](const Point& l, const Point& r) { return l.t < r.t; });
  const std::size_t used = (n + 1) / 2;
  const std::span<const Point> window(pts.data() + (n - used), used);

  double t_mean = 0.0;
  double v_mean = 0.0;
  for (const auto& p : window) {
    t_mean += p.t;
    v_mean += p.v;
  }
  t_mean /= static_cast<double>(used);
  v_mean /= static_cast<double>(used);
  double stt = 0.0;
  double stv = 0.0;
  for (const auto& p : window) {
    stt += (p.t - t_mean) * (p.t - t_mean);
    stv += (p.t - t_mean) * (p.v - v_mean);
  }
  if (!(stt > 0.0)) throw DomainError("log_asymptotic_fit: degenerate design in the fit window");

  AsymptoticFit fit;
  fit.direction = direction;
  fit.b = stv / stt;
  fit.a = v_mean - fit.b * t_mean;
  fit.points_used = used;
  fit.window_lo = std::min(window.front().x, window.back().x);
  fit.window_hi = std::max(window.front().x, window.back().x);

  const std::size_t inner = used / 2;
  double inner_sup = 0.0;
  double outer_sup = 0.0;
  for (std::size_t i = 0; i < used; ++i) {
    const double r = std::fabs(window[i].v - (fit.a + fit.b * window[i].t));
    fit.residual_sup = std::max(fit.residual_sup, r);
    double& side = i < inner ? inner_sup : outer_sup;
    side = std::max(side, r);
  }
  if (inner_sup > 0.0) fit.trend = outer_sup / inner_sup;
  else fit.trend = outer_sup > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  return fit;
}

std::vector<Sample> read_samples_csv(std::istream& in) {
  std::vector<Sample> out;
  std::string line;
  bool header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }), line.end());
    if (line.empty()) continue;
    if (!header) {
      if (line != "x,value") throw ParseError("sample file header must be 'x,value'");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected two fields");
    out.push_back({parse_number(std::string_view(line).substr(0, comma), "x"),
                   parse_number(std::string_view(line).substr(comma + 1), "value")});
  }
  if (!header) throw ParseError("sample file has no header");
  return out;
}

void write_samples_csv(std::ostream& out, std::span<const Sample> samples) {
  out << "x,value\n";
  std::array<char, 64> buf{};
  for (const auto& s : samples) {
    auto p = std::to_chars(buf.data(), buf.data() + buf.size(), s.x).ptr;
    *p++ = ',';
    p = std::to_chars(p, buf.data() + buf.size(), s.value).ptr;
    out.write(buf.data(), p - buf.data());
    out << '\n';
  }
}

}  // namespace tauberlab
