#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tauberlab/distributions.hpp"
#include "tauberlab/error.hpp"
#include "tauberlab/harness.hpp"
#include "tauberlab/kernels.hpp"
#include "tauberlab/series.hpp"
#include "tauberlab/summability.hpp"
#include "tauberlab/tauberian.hpp"

using namespace tauberlab;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kNumeric = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

struct Source {
  std::string expr;
  std::string builtin;
  std::string file;
  std::string lambda;

  void add_to(CLI::App* app) {
    auto* g = app->add_option_group("source", "series source (exactly one)");
    g->add_option("--expr", expr, "coefficient expression in n");
    g->add_option("--builtin", builtin, "named series")->check(CLI::IsMember(CoefficientSequence::builtin_names()));
    g->add_option("--file", file, "CSV coefficients (n,c or n,lambda,c); - reads stdin");
    g->require_option(1);
    app->add_option("--lambda", lambda, "exponent expression lambda_n (with --expr)");
  }

  CoefficientSequence build() const {
    if (!lambda.empty() && expr.empty()) throw UsageError("--lambda requires --expr");
    if (!expr.empty()) {
      if (!lambda.empty()) return CoefficientSequence::from_expression(expr, std::string_view(lambda));
      return CoefficientSequence::from_expression(expr);
    }
    if (!builtin.empty()) return CoefficientSequence::builtin(builtin);
    return CoefficientSequence::from_csv_file(file);
  }
};

struct Output {
  std::string format = "text";
  std::string path;

  void add_to(CLI::App* app, std::vector<std::string> formats = {"text", "json", "csv", "tsv"}) {
    app->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
    app->add_option("--output", path, "write output to a file instead of stdout");
  }

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output file " + path);
    out << text;
  }
};

void warn(const CoefficientSequence& c) {
  for (const auto& w : c.warnings()) std::cerr << "warning: " << w << "\n";
}

// Table of (x, value) rows in the chosen format.
std::string render_rows(const Output& o, const json& meta, const std::string& xname,
                        const std::vector<double>& xs, const std::vector<double>& vs) {
  std::ostringstream os;
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) rows.push_back({{xname, xs[i]}, {"value", vs[i]}});
    json j = meta;
    j["points"] = rows;
    os << j.dump() << "\n";
  } else if (o.format == "csv" || o.format == "tsv") {
    const char sep = o.format == "csv" ? ',' : '\t';
    os << xname << sep << "value\n";
    for (std::size_t i = 0; i < xs.size(); ++i) os << fmt(xs[i], 17) << sep << fmt(vs[i], 17) << "\n";
  } else if (xs.size() == 1) {
    os << fmt(vs[0], 6) << "\n";
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i) os << fmt(xs[i], 6) << "\t" << fmt(vs[i], 6) << "\n";
  }
  return os.str();
}

std::vector<double> points(const std::optional<double>& single, const std::string& grid, const char* what) {
  if (single && !grid.empty()) throw UsageError(std::string("give either --") + what + " or --grid, not both");
  if (single) return {*single};
  if (!grid.empty()) return parse_grid(grid);
  throw UsageError(std::string("--") + what + " or --grid is required");
}

int run_sum(const Source& src, const Output& out, const std::string& method, int order, const std::optional<double>& x,
            const std::string& grid) {
  const char* what = method == "abel" ? "r" : method == "laplace" ? "y" : method == "cesaro" ? "n" : "x";
  const auto xs = points(x, grid, what);
  const auto c = src.build();
  warn(c);
  std::vector<double> vs(xs.size());
  json meta = {{"method", method}, {"order", order}};
  if (method == "riesz") {
    vs = riesz_means_on_grid(c, xs, order);
  } else if (method == "cesaro") {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] != std::trunc(xs[i]) || xs[i] < 1) throw UsageError("cesaro needs integer n >= 1");
      vs[i] = cesaro_mean_series(c, static_cast<std::int64_t>(xs[i]), order);
    }
  } else if (method == "abel") {
    kernels::for_each_index(xs.size(), [&](std::size_t i) {
      if (!(xs[i] > 0.0 && xs[i] < 1.0)) throw DomainError("abel needs 0 < r < 1");
      vs[i] = abel_eval(c, xs[i]);
    });
  } else if (method == "laplace") {
    const auto s = StieltjesObject::jumps(c);
    std::vector<int> orders(xs.size());
    kernels::for_each_index(xs.size(), [&](std::size_t i) {
      const auto r = laplace_stieltjes(s, xs[i], order);
      vs[i] = r.value;
      orders[i] = r.order_used;
    });
    meta["order_used"] = orders;
    meta["note"] = LaplaceResult::kNote;
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i) vs[i] = partial_sum(c, xs[i]);
  }
  out.emit(render_rows(out, meta, what, xs, vs));
  return kOk;
}

int run_fit(const Source& src, bool have_source, const Output& out, const std::string& samples_path,
            const std::string& grid, const std::string& toward, int order_cap) {
  std::vector<Sample> samples;
  if (!samples_path.empty()) {
    if (have_source || !grid.empty()) throw UsageError("--samples excludes a series source and --grid");
    if (samples_path == "-") {
      samples = read_samples_csv(std::cin);
    } else {
      std::ifstream in(samples_path);
      if (!in) throw UsageError("cannot open " + samples_path);
      samples = read_samples_csv(in);
    }
  } else {
    if (!have_source) throw UsageError("fit needs --samples or a series source");
    if (grid.empty()) throw UsageError("fit of a series needs --grid (y values)");
    const auto c = src.build();
    warn(c);
    const auto s = StieltjesObject::jumps(c);
    const auto ys = parse_grid(grid);
    samples.resize(ys.size());
    kernels::for_each_index(ys.size(), [&](std::size_t i) {
      samples[i] = {ys[i], laplace_stieltjes(s, ys[i], order_cap).value};
    });
  }
  const auto fit = log_asymptotic_fit(samples, toward == "zero" ? Direction::TowardZero : Direction::TowardInfinity);
  std::ostringstream os;
  if (out.format == "json") {
    os << harness::fit_to_json(fit).dump() << "\n";
  } else if (out.format == "csv" || out.format == "tsv") {
    const char sep = out.format == "csv" ? ',' : '\t';
    os << "a" << sep << "b" << sep << "residual_sup" << sep << "trend" << sep << "window_lo" << sep << "window_hi\n";
    os << fmt(fit.a, 17) << sep << fmt(fit.b, 17) << sep << fmt(fit.residual_sup, 17) << sep << fmt(fit.trend, 17)
       << sep << fmt(fit.window_lo, 17) << sep << fmt(fit.window_hi, 17) << "\n";
  } else {
    os << "a\t" << fmt(fit.a, 6) << "\nb\t" << fmt(fit.b, 6) << "\nresidual_sup\t" << fmt(fit.residual_sup, 6)
       << "\ntrend\t" << fmt(fit.trend, 6) << "\nwindow\t" << fmt(fit.window_lo, 6) << " .. " << fmt(fit.window_hi, 6)
       << "\n";
  }
  out.emit(os.str());
  return kOk;
}

int run_check(const Source& src, const Output& out, const std::string& condition, int order, std::int64_t n_max,
              const std::string& grid, bool raw) {
  const auto c = src.build();
  warn(c);
  TauberianWitness w;
  if (condition == "classical_bigO") {
    w = check_classical(c, ClassicalVariant::BigO, n_max);
  } else if (condition == "classical_onesided") {
    w = check_classical(c, ClassicalVariant::OneSided, n_max);
  } else if (condition == "onesided_cesaro") {
    if (order < 1) throw UsageError("onesided_cesaro needs --order >= 1");
    w = check_onesided_cesaro(raw ? c : index_weighted(c), order, n_max);
  } else {
    if (order < 1) throw UsageError("stieltjes needs --order >= 1");
    if (grid.empty()) throw UsageError("stieltjes needs --grid");
    const auto xs = parse_grid(grid);
    w = check_stieltjes_condition(StieltjesObject::jumps(c), order, xs);
  }
  std::ostringstream os;
  if (out.format == "json") {
    os << to_json(w).dump() << "\n";
  } else if (out.format == "csv" || out.format == "tsv") {
    const char sep = out.format == "csv" ? ',' : '\t';
    os << "condition" << sep << "order" << sep << "passed" << sep << "K" << sep << "tail_K" << sep << "trend" << sep
       << "min_location" << sep << "range_lo" << sep << "range_hi\n";
    os << to_string(w.condition) << sep << w.order << sep << (w.passed ? "true" : "false") << sep << fmt(w.K, 17) << sep
       << fmt(w.tail_K, 17) << sep << fmt(w.trend, 17) << sep << fmt(w.min_location, 17) << sep << fmt(w.range_lo, 17)
       << sep << fmt(w.range_hi, 17) << "\n";
  } else {
    os << to_string(w.condition) << " order " << w.order << ": " << (w.passed ? "passed" : "failed") << "\n"
       << "K\t" << fmt(w.K, 6) << "\ntail_K\t" << fmt(w.tail_K, 6) << "\ntrend\t" << fmt(w.trend, 6) << "\nrange\t"
       << fmt(w.range_lo, 6) << " .. " << fmt(w.range_hi, 6) << "\n";
  }
  out.emit(os.str());
  return w.passed ? kOk : kFail;
}

int run_pair(const Source& src, bool have_source, const Output& out, const std::string& function_path,
             std::vector<std::string> phi_names, const std::string& grid, const std::optional<double>& a,
             const std::optional<double>& b, double tolerance, bool pf_only) {
  if (phi_names.empty()) {
    for (const auto& p : TestFunction::dictionary()) phi_names.push_back(p.name());
  }
  std::vector<TestFunction> phis;
  for (const auto& name : phi_names) {
    auto p = TestFunction::by_name(name);
    if (!p) throw UsageError("unknown test function '" + name + "'");
    phis.push_back(*p);
  }
  if (a.has_value() != b.has_value()) throw UsageError("--a and --b go together");
  std::ostringstream os;
  if (pf_only) {
    if (have_source || !function_path.empty() || a) throw UsageError("--pf takes no series and no expansion");
    std::vector<double> pf(phis.size());
    for (std::size_t i = 0; i < phis.size(); ++i) pf[i] = pf_pairing(phis[i]);
    if (out.format == "json") {
      json j = json::array();
      for (std::size_t i = 0; i < phis.size(); ++i)
        j.push_back({{"phi_name", phis[i].name()}, {"pf", pf[i]}, {"delta", delta_pairing(phis[i])}});
      os << j.dump() << "\n";
    } else {
      const char sep = out.format == "csv" ? ',' : '\t';
      const int digits = out.format == "text" ? 6 : 17;
      os << "phi" << sep << "pf" << sep << "delta\n";
      for (std::size_t i = 0; i < phis.size(); ++i)
        os << phis[i].name() << sep << fmt(pf[i], digits) << sep << fmt(delta_pairing(phis[i]), digits) << "\n";
    }
    out.emit(os.str());
    return kOk;
  }
  if (have_source == !function_path.empty()) throw UsageError("pair needs exactly one of a series source or --function");
  if (grid.empty()) throw UsageError("pair needs --grid (lambda values)");
  std::optional<StieltjesObject> s;
  if (!function_path.empty()) {
    std::vector<Sample> samples;
    if (function_path == "-") {
      samples = read_samples_csv(std::cin);
    } else {
      std::ifstream in(function_path);
      if (!in) throw UsageError("cannot open " + function_path);
      samples = read_samples_csv(in);
    }
    std::vector<double> xs, vs;
    for (const auto& p : samples) {
      xs.push_back(p.x);
      vs.push_back(p.value);
    }
    s = StieltjesObject::sampled(std::move(xs), std::move(vs));
  } else {
    auto c = src.build();
    warn(c);
    s = StieltjesObject::jumps(std::move(c));
  }
  const auto lambdas = parse_grid(grid);

  std::vector<PairingSeries> series;
  if (a) {
    series = check_expansion(*s, phis, *a, *b, lambdas, tolerance);
  } else {
    series.resize(phis.size());
    for (std::size_t j = 0; j < phis.size(); ++j) {
      series[j].phi_name = phis[j].name();
      series[j].lambda = lambdas;
      series[j].scaled_values.resize(lambdas.size());
    }
    kernels::for_each_index(phis.size() * lambdas.size(), [&](std::size_t t) {
      const std::size_t j = t / lambdas.size();
      const std::size_t i = t % lambdas.size();
      series[j].scaled_values[i] = lambdas[i] * scaled_derivative_pairing(*s, lambdas[i], phis[j]);
    });
  }
  bool all_verified = true;
  for (const auto& p : series) all_verified = all_verified && p.verified;

  if (out.format == "json") {
    json j = json::array();
    for (const auto& p : series) {
      json item = to_json(p);
      if (!a) {
        item.erase("residuals");
        item.erase("verdict");
        item.erase("sup_residual");
        item.erase("trend");
      }
      j.push_back(item);
    }
    os << j.dump() << "\n";
  } else {
    const char sep = out.format == "csv" ? ',' : '\t';
    const int digits = out.format == "text" ? 6 : 17;
    os << "phi" << sep << "lambda" << sep << "scaled_value" << (a ? std::string(1, sep) + "residual" : "") << "\n";
    for (const auto& p : series)
      for (std::size_t i = 0; i < p.lambda.size(); ++i) {
        os << p.phi_name << sep << fmt(p.lambda[i], digits) << sep << fmt(p.scaled_values[i], digits);
        if (a) os << sep << fmt(p.residuals[i], digits);
        os << "\n";
      }
    if (a && out.format == "text")
      for (const auto& p : series)
        os << "# " << p.phi_name << ": sup " << fmt(p.sup_residual, 6) << ", trend " << fmt(p.trend, 6) << ", "
           << (p.verified ? "verified" : "not verified") << "\n";
  }
  out.emit(os.str());
  return (!a || all_verified) ? kOk : kFail;
}

int run_polys(const Output& out, int m, const std::optional<double>& theta) {
  if (m < 1 || m > 25) throw UsageError("--m must be in 1..25");
  const RieszPolynomialTable table(m);
  std::ostringstream os;
  if (theta) {
    std::vector<double> vals(m);
    for (int k = 0; k < m; ++k) vals[k] = table.eval(k, *theta);
    const double total = table.eval_sum(*theta);
    if (out.format == "json") {
      os << json{{"m", m}, {"theta", *theta}, {"values", vals}, {"sum", total}}.dump() << "\n";
    } else {
      const char sep = out.format == "csv" ? ',' : '\t';
      const int digits = out.format == "text" ? 6 : 17;
      os << "k" << sep << "value\n";
      for (int k = 0; k < m; ++k) os << k << sep << fmt(vals[k], digits) << "\n";
      if (out.format == "text") os << "sum" << sep << fmt(total, digits) << "\n";
    }
  } else {
    std::vector<std::vector<double>> coeffs(m);
    for (int k = 0; k < m; ++k) coeffs[k] = table.polynomial(m - 1, k);
    if (out.format == "json") {
      os << json{{"m", m}, {"coefficients", coeffs}}.dump() << "\n";
    } else {
      const char sep = out.format == "csv" ? ',' : '\t';
      const int digits = out.format == "text" ? 6 : 17;
      os << "k";
      for (int j = 0; j < m; ++j) os << sep << "theta^" << j;
      os << "\n";
      for (int k = 0; k < m; ++k) {
        os << k;
        for (int j = 0; j < m; ++j) os << sep << fmt(j < int(coeffs[k].size()) ? coeffs[k][j] : 0.0, digits);
        os << "\n";
      }
    }
  }
  out.emit(os.str());
  return kOk;
}

int run_verify(const Output& out, const std::string& corpus, const std::string& summary_path,
               const std::string& plot_dir) {
  const auto entries = corpus == "default" ? harness::default_corpus() : harness::load_corpus(corpus);
  harness::RunConfig config;
  config.plot_data = !plot_dir.empty();
  const auto report = harness::run_corpus(entries, config);
  std::ostringstream os;
  if (out.format == "csv") {
    harness::write_summary_csv(os, report);
  } else if (out.format == "text") {
    for (const auto& e : report.entries)
      for (const auto& r : e.results) {
        os << e.name << "\t" << r.verifier;
        if (r.order >= 0) os << "(m=" << r.order << ")";
        os << "\t" << harness::to_string(r.verdict);
        if (!r.note.empty()) os << "\t" << r.note;
        os << "\n";
      }
    os << "pass rate " << fmt(report.pass_rate(), 6) << "\n";
  } else {
    os << harness::to_json(report).dump(2) << "\n";
  }
  out.emit(os.str());
  if (!summary_path.empty()) {
    std::ofstream f(summary_path);
    if (!f) throw UsageError("cannot open " + summary_path);
    harness::write_summary_csv(f, report);
  }
  if (!plot_dir.empty()) harness::write_plot_data(plot_dir, report);
  return report.all_ok() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {

  CLI::App app{"Summability, Tauberian and distributional asymptotics toolkit"};
  app.require_subcommand(1);

  // sum
  auto* sum = app.add_subcommand("sum", "evaluate a series by partial sums, Abel, Cesaro, Riesz or Laplace-Stieltjes");
  Source sum_src;
  Output sum_out;
  std::string method = "partial";
  int sum_order = 1;
  std::optional<double> sum_at;
  std::string sum_grid;
  sum_src.add_to(sum);
  sum_out.add_to(sum);
  sum->add_option("--method", method, "partial|abel|cesaro|riesz|laplace")
      ->check(CLI::IsMember({"partial", "abel", "cesaro", "riesz", "laplace"}));
  sum->add_option("--order", sum_order, "Cesaro/Riesz order m, or the order cap for laplace")->check(CLI::Range(0, 40));
  sum->add_option("--x,--r,--y,--n", sum_at, "single evaluation point (x, r, y or n by method)");
  sum->add_option("--grid", sum_grid, "geometric:start:end:count");

  // fit
  auto* fit = app.add_subcommand("fit", "fit a + b log x (or log 1/y) to samples or to the Abel side of a series");
  Source fit_src;
  Output fit_out;
  std::string fit_samples, fit_grid, toward = "zero";
  int fit_cap = 4;
  {
    auto* g = fit->add_option_group("source", "series source (or --samples)");
    g->add_option("--expr", fit_src.expr, "coefficient expression in n");
    g->add_option("--builtin", fit_src.builtin, "named series")->check(CLI::IsMember(CoefficientSequence::builtin_names()));
    g->add_option("--file", fit_src.file, "CSV coefficients; - reads stdin");
    g->add_option("--samples", fit_samples, "CSV x,value samples; - reads stdin");
    g->require_option(1);
    fit->add_option("--lambda", fit_src.lambda, "exponent expression lambda_n (with --expr)");
  }
  fit_out.add_to(fit);
  fit->add_option("--grid", fit_grid, "y grid for the Abel side, geometric:start:end:count");
  fit->add_option("--toward", toward, "zero|infinity")->check(CLI::IsMember({"zero", "infinity"}));
  fit->add_option("--order-cap", fit_cap, "largest Cesaro order tried per y")->check(CLI::Range(0, 40));

  // check
  auto* check = app.add_subcommand("check", "finite-range witness for a Tauberian condition");
  Source check_src;
  Output check_out;
  std::string condition = "onesided_cesaro", check_grid;
  int check_order = 1;
  std::int64_t n_max = 100000;
  bool raw = false;
  check_src.add_to(check);
  check_out.add_to(check);
  check->add_option("--condition", condition, "classical_bigO|classical_onesided|onesided_cesaro|stieltjes")
      ->check(CLI::IsMember({"classical_bigO", "classical_onesided", "onesided_cesaro", "stieltjes"}));
  check->add_option("--order", check_order, "order m")->check(CLI::Range(0, 40));
  check->add_option("--n-max", n_max, "largest index examined")->check(CLI::Range(std::int64_t{10}, std::int64_t{1'000'000'000}));
  check->add_option("--grid", check_grid, "x grid for the stieltjes condition");
  check->add_flag("--raw", raw, "apply onesided_cesaro to c_n instead of n c_n");

  // pair
  auto* pair = app.add_subcommand("pair", "pair s'(lambda x) with test functions, optionally against a + b log lambda");
  Source pair_src;
  Output pair_out;
  std::string pair_function, pair_grid;
  std::vector<std::string> phi_names;
  std::optional<double> pa, pb;
  double pair_tol = 1e-2;
  bool pf_only = false;
  {
    auto* g = pair->add_option_group("source", "series source (or --function)");
    g->add_option("--expr", pair_src.expr, "coefficient expression in n");
    g->add_option("--builtin", pair_src.builtin, "named series")->check(CLI::IsMember(CoefficientSequence::builtin_names()));
    g->add_option("--file", pair_src.file, "CSV coefficients; - reads stdin");
    g->add_option("--function", pair_function, "CSV x,value samples of s (x starting at 0); - reads stdin");
    g->require_option(0, 1);
    pair->add_option("--lambda", pair_src.lambda, "exponent expression lambda_n (with --expr)");
  }
  pair_out.add_to(pair);
  std::vector<std::string> phi_choices;
  for (const auto& p : TestFunction::dictionary()) phi_choices.push_back(p.name());
  pair->add_option("--phi", phi_names, "test function (repeatable; default all)")->check(CLI::IsMember(phi_choices));
  pair->add_option("--grid", pair_grid, "lambda ladder geometric:start:end:count");
  pair->add_option("--a", pa, "expansion constant a");
  pair->add_option("--b", pb, "expansion log coefficient b");
  pair->add_option("--tolerance", pair_tol, "residual tolerance for the expansion check");
  pair->add_flag("--pf", pf_only, "print finite-part and delta pairings of the test functions only");

  // polys
  auto* polys = app.add_subcommand("polys", "Riesz polynomials p^{m-1}_k");
  Output polys_out;
  int poly_m = 3;
  std::optional<double> theta;
  polys_out.add_to(polys);
  polys->add_option("--m", poly_m, "order m (1..25)")->required();
  polys->add_option("--theta", theta, "evaluate at theta instead of listing coefficients");

  // verify
  auto* verify = app.add_subcommand("verify", "run the theorem verifiers over a corpus");
  Output verify_out;
  verify_out.format = "json";
  std::string corpus = "default", summary_path, plot_dir;
  verify_out.add_to(verify, {"json", "csv", "text"});
  verify->add_option("--corpus", corpus, "corpus JSON file, or 'default'");
  verify->add_option("--summary", summary_path, "also write the CSV summary here");
  verify->add_option("--plot-dir", plot_dir, "write per-entry TSV plot data into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    kernels::apply_thread_cap_from_env();
    if (*sum) return run_sum(sum_src, sum_out, method, sum_order, sum_at, sum_grid);
    if (*fit) return run_fit(fit_src, fit_samples.empty(), fit_out, fit_samples, fit_grid, toward, fit_cap);
    if (*check) return run_check(check_src, check_out, condition, check_order, n_max, check_grid, raw);
    if (*pair) {
      const bool have = !pair_src.expr.empty() || !pair_src.builtin.empty() || !pair_src.file.empty();
      return run_pair(pair_src, have, pair_out, pair_function, phi_names, pair_grid, pa, pb, pair_tol, pf_only);
    }
    if (*polys) return run_polys(polys_out, poly_m, theta);
    if (*verify) return run_verify(verify_out, corpus, summary_path, plot_dir);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  }
  return kUsage;
}
