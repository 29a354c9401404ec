#include "tauberlab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "tauberlab/constants.hpp"
#include "tauberlab/distributions.hpp"
#include "tauberlab/error.hpp"
#include "tauberlab/kernels.hpp"

namespace tauberlab::harness {

namespace {

constexpr const char* kDefaultCorpus =
#include "default_corpus.inc"
    ;

// The Abel-side log model is rejected when its sup residual exceeds this many tolerances.
constexpr double kModelAcceptance = 10.0;

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Condition condition_from_string(const std::string& s) {
  if (s == "classical_bigO") return Condition::ClassicalBigO;
  if (s == "classical_onesided") return Condition::ClassicalOneSided;
  if (s == "onesided_cesaro") return Condition::OneSidedCesaro;
  if (s == "stieltjes") return Condition::Stieltjes;
  throw DomainError("unknown tauberian condition '" + s + "'");
}

bool fit_accepted(const CorpusEntry& e, const AsymptoticFit& fit) {
  return std::isfinite(fit.residual_sup) && fit.residual_sup <= kModelAcceptance * e.tolerance;
}

bool has_expectation(const CorpusEntry& e) { return e.expected_a.has_value() && e.expected_b.has_value(); }

VerifierResult error_result(std::string verifier, int order, const std::exception& ex) {
  VerifierResult r;
  r.verifier = std::move(verifier);
  r.order = order;
  r.verdict = Verdict::Error;
  r.note = ex.what();
  return r;
}

// s(x) + A log x non-decreasing on the examined range; returns a description
// of the first violation, or an empty string.
std::string monotone_log_violation(const CorpusEntry& e, const StieltjesObject& s, double A) {
  if (A < 0.0) return "A must be non-negative";
  if (s.kind() == StieltjesObject::Kind::SampledFunction) {
    const auto& xs = s.sample_xs();
    const auto& vs = s.sample_values();
    for (std::size_t i = 2; i < xs.size(); ++i) {
      const double before = vs[i - 1] + A * std::log(xs[i - 1]);
      const double after = vs[i] + A * std::log(xs[i]);
      if (after < before - 1e-12 * (1.0 + std::fabs(before))) return "decrease at x=" + fmt17(xs[i]);
    }
    return {};
  }
  SeriesCursor cur(s.sequence());
  for (; !cur.done() && cur.index() <= e.n_max; cur.next()) {
    if (cur.lambda() <= 0.0) continue;
    const double c = cur.coeff();
    if (c < 0.0) return "negative jump c_" + std::to_string(cur.index()) + "=" + fmt17(c);
  }
  return {};
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::SkippedHypothesis: return "SKIPPED-HYPOTHESIS";
    case Verdict::NotApplicable: return "NOT-APPLICABLE";
    case Verdict::Error: return "ERROR";
  }
  return "ERROR";
}

CoefficientSequence CorpusEntry::coefficients() const {
  const int sources = int(builtin.has_value()) + int(expr.has_value()) + int(file.has_value());
  if (sources != 1) throw DomainError("corpus entry '" + name + "' needs exactly one coefficient source");
  if (builtin) return CoefficientSequence::builtin(*builtin);
  if (expr) {
    if (lambda_expr) return CoefficientSequence::from_expression(*expr, std::string_view(*lambda_expr));
    return CoefficientSequence::from_expression(*expr);
  }
  return CoefficientSequence::from_csv_file(*file);
}

StieltjesObject CorpusEntry::stieltjes() const { return StieltjesObject::jumps(coefficients()); }

CorpusEntry entry_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("corpus entry must be a JSON object");
  CorpusEntry e;
  try {
    e.name = j.at("name").get<std::string>();
    const auto& src = j.at("source");
    if (src.contains("builtin")) e.builtin = src.at("builtin").get<std::string>();
    if (src.contains("expr")) e.expr = src.at("expr").get<std::string>();
    if (src.contains("file")) e.file = src.at("file").get<std::string>();
    if (src.contains("lambda_expr")) e.lambda_expr = src.at("lambda_expr").get<std::string>();
    if (j.contains("expected")) {
      const auto& x = j.at("expected");
      if (x.contains("a")) e.expected_a = x.at("a").get<double>();
      if (x.contains("b")) e.expected_b = x.at("b").get<double>();
      e.cesaro_order = x.value("cesaro_order", 0);
    }
    e.abel_grid = j.value("abel_grid", e.abel_grid);
    e.lambda_grid = j.value("lambda_grid", e.lambda_grid);
    e.stieltjes_grid = j.value("stieltjes_grid", e.stieltjes_grid);
    e.littlewood_orders = j.value("littlewood_orders", e.littlewood_orders);
    e.littlewood_x = j.value("littlewood_x", e.littlewood_x);
    e.drift_x = j.value("drift_x", e.drift_x);
    e.n_max = j.value("n_max", e.n_max);
    e.abel_order_cap = j.value("abel_order_cap", e.abel_order_cap);
    e.tolerance = j.value("tolerance", e.tolerance);
    e.cesaro_tolerance = j.value("cesaro_tolerance", e.cesaro_tolerance);
    e.expansion_tolerance = j.value("expansion_tolerance", e.expansion_tolerance);
    if (j.contains("tauberian")) {
      for (const auto& t : j.at("tauberian")) {
        TauberianExpectation x;
        x.condition = condition_from_string(t.at("condition").get<std::string>());
        x.order = t.value("order", 0);
        x.expect_pass = t.at("expect").get<bool>();
        e.tauberian.push_back(x);
      }
    }
    if (j.contains("hypotheses") && j.at("hypotheses").contains("monotone_log"))
      e.monotone_log_A = j.at("hypotheses").at("monotone_log").value("A", 0.0);
    e.provenance = j.value("provenance", std::string{});
    e.diagnostic_only = j.value("diagnostic_only", false);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("corpus entry: ") + ex.what());
  }
  const int sources = int(e.builtin.has_value()) + int(e.expr.has_value()) + int(e.file.has_value());
  if (sources != 1) throw ParseError("corpus entry '" + e.name + "' needs exactly one of builtin, expr, file");
  if (e.expected_a.has_value() != e.expected_b.has_value())
    throw ParseError("corpus entry '" + e.name + "' must give both expected a and b");
  if (e.provenance.empty() && has_expectation(e) && !e.diagnostic_only)
    throw ParseError("corpus entry '" + e.name + "' has expectations without a provenance note");
  return e;
}

nlohmann::json to_json(const CorpusEntry& e) {
  nlohmann::json src = nlohmann::json::object();
  if (e.builtin) src["builtin"] = *e.builtin;
  if (e.expr) src["expr"] = *e.expr;
  if (e.file) src["file"] = *e.file;
  if (e.lambda_expr) src["lambda_expr"] = *e.lambda_expr;
  nlohmann::json j = {
      {"name", e.name},
      {"source", src},
      {"abel_grid", e.abel_grid},
      {"lambda_grid", e.lambda_grid},
      {"stieltjes_grid", e.stieltjes_grid},
      {"littlewood_orders", e.littlewood_orders},
      {"littlewood_x", e.littlewood_x},
      {"drift_x", e.drift_x},
      {"n_max", e.n_max},
      {"abel_order_cap", e.abel_order_cap},
      {"tolerance", e.tolerance},
      {"cesaro_tolerance", e.cesaro_tolerance},
      {"expansion_tolerance", e.expansion_tolerance},
      {"provenance", e.provenance},
      {"diagnostic_only", e.diagnostic_only},
  };
  if (has_expectation(e))
    j["expected"] = {{"a", *e.expected_a}, {"b", *e.expected_b}, {"cesaro_order", e.cesaro_order}};
  nlohmann::json taub = nlohmann::json::array();
  for (const auto& t : e.tauberian)
    taub.push_back({{"condition", to_string(t.condition)}, {"order", t.order}, {"expect", t.expect_pass}});
  j["tauberian"] = taub;
  if (e.monotone_log_A) j["hypotheses"] = {{"monotone_log", {{"A", *e.monotone_log_A}}}};
  return j;
}

std::vector<CorpusEntry> parse_corpus(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("corpus must be a JSON array of entries");
  std::vector<CorpusEntry> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(entry_from_json(item));
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open corpus file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
  return parse_corpus(j);
}

const char* default_corpus_json() { return kDefaultCorpus; }

std::vector<CorpusEntry> default_corpus() { return parse_corpus(nlohmann::json::parse(kDefaultCorpus)); }

AsymptoticFit abel_side_fit(const CorpusEntry& e, std::vector<Sample>* samples) {
  const auto ys = parse_grid(e.abel_grid);
  const StieltjesObject s = e.stieltjes();
  std::vector<Sample> pts(ys.size());
  kernels::for_each_index(ys.size(), [&](std::size_t i) {
    pts[i] = {ys[i], laplace_stieltjes(s, ys[i], e.abel_order_cap).value};
  });
  auto fit = log_asymptotic_fit(pts, Direction::TowardZero);
  if (samples) *samples = std::move(pts);
  return fit;
}

VerifierResult verify_abelian(const CorpusEntry& e, const AsymptoticFit& fit) {
  VerifierResult r;
  r.verifier = "VERIFY-ABELIAN";
  r.tolerance = e.tolerance;
  if (!has_expectation(e)) {
    r.note = "no closed-form drift declared";
    return r;
  }
  const double a_star = *e.expected_a;
  const double b_star = *e.expected_b;
  const double a_target = a_star - b_star * kEulerGamma;

  const int m = e.cesaro_order;
  const double x = e.drift_x;
  const double cesaro_side = riesz_mean_series(e.coefficients(), x, m) - b_star * (std::log(x) - harmonic_number(m));
  const double da = fit.a - a_target;
  const double db = fit.b - b_star;
  const double dc = cesaro_side - a_star;

  r.values = {{"abel_a", fit.a},           {"abel_b", fit.b},         {"target_a", a_target},
              {"target_b", b_star},        {"cesaro_order", m},       {"cesaro_x", x},
              {"cesaro_drift", cesaro_side}, {"expected_drift", a_star}};
  r.residuals = {{"a", da}, {"b", db}, {"cesaro_drift", dc}, {"fit_sup", fit.residual_sup}};
  const bool abel_ok = std::fabs(da) <= e.tolerance && std::fabs(db) <= e.tolerance;
  const bool cesaro_ok = std::fabs(dc) <= e.cesaro_tolerance;
  r.verdict = abel_ok && cesaro_ok ? Verdict::Pass : Verdict::Fail;
  if (!abel_ok) r.note = "Abel-side constants outside tolerance";
  else if (!cesaro_ok) r.note = "Cesaro-side drift outside tolerance";
  return r;
}

VerifierResult verify_littlewood(const CorpusEntry& e, const AsymptoticFit& fit, int m, TauberianWitness* witness) {
  VerifierResult r;
  r.verifier = "VERIFY-LITTLEWOOD";
  r.order = m;
  r.tolerance = e.cesaro_tolerance;
  if (!has_expectation(e)) {
    r.note = "no closed-form drift declared";
    return r;
  }
  const auto c = e.coefficients();
  const auto w = check_onesided_cesaro(index_weighted(c), m, e.n_max);
  if (witness) *witness = w;
  r.values["witness"] = to_json(w);
  const double x = e.littlewood_x;
  if (!w.passed) {
    r.verdict = Verdict::SkippedHypothesis;
    r.note = "n c_n is not O_L(1) (C," + std::to_string(m) + ") on the examined range";
    const auto xs = geometric_grid(x / 10.0, x, 41);
    const auto means = riesz_means_on_grid(c, xs, m);
    const auto [lo, hi] = std::minmax_element(means.begin(), means.end());
    r.values["last_decade_min"] = *lo;
    r.values["last_decade_max"] = *hi;
    return r;
  }
  const double a_star = *e.expected_a;
  const double b_star = *e.expected_b;
  const double hm = harmonic_number(m);
  const double drift = riesz_mean_series(c, x, m) - b_star * std::log(x);
  const double target = a_star - b_star * hm;
  const double abel_target = fit.a + fit.b * (kEulerGamma - hm);
  r.values.update({{"x", x}, {"riesz_drift", drift}, {"target", target}, {"abel_target", abel_target}});
  r.residuals = {{"drift", drift - target}, {"abel_consistency", drift - abel_target}};
  const bool drift_ok = std::fabs(drift - target) <= e.cesaro_tolerance;
  const bool consistent = std::fabs(drift - abel_target) <= e.cesaro_tolerance + e.tolerance;
  r.verdict = drift_ok && consistent ? Verdict::Pass : Verdict::Fail;
  if (!drift_ok) r.note = "Riesz drift outside tolerance";
  else if (!consistent) r.note = "Riesz drift disagrees with the Abel-side constants";
  return r;
}

VerifierResult verify_twosided(const CorpusEntry& e, const AsymptoticFit& fit) {
  VerifierResult r;
  r.verifier = "VERIFY-TWOSIDED";
  r.tolerance = e.expansion_tolerance;
  if (!e.monotone_log_A) {
    r.verdict = Verdict::SkippedHypothesis;
    r.note = "monotonicity hypothesis not declared";
    return r;
  }
  const StieltjesObject s = e.stieltjes();
  if (auto why = monotone_log_violation(e, s, *e.monotone_log_A); !why.empty()) {
    r.verdict = Verdict::SkippedHypothesis;
    r.note = "declared hypothesis contradicted: " + why;
    return r;
  }
  if (!fit_accepted(e, fit)) {
    r.verdict = Verdict::NotApplicable;
    r.note = "log model rejected by the Abel-side fit (sup residual " + fmt17(fit.residual_sup) + ")";
    r.residuals = {{"fit_sup", fit.residual_sup}, {"fit_trend", fit.trend}};
    return r;
  }
  const double a_d = fit.a + fit.b * kEulerGamma;
  const double b_d = fit.b;
  const auto grid = parse_grid(e.lambda_grid);
  const auto phis = TestFunction::dictionary();
  const auto series = check_expansion(s, phis, a_d, b_d, grid, e.expansion_tolerance);
  double worst = 0.0;
  nlohmann::json per_phi = nlohmann::json::object();
  for (const auto& p : series) {
    worst = std::max(worst, p.sup_residual);
    per_phi[p.phi_name] = {{"sup", p.sup_residual}, {"trend", std::isfinite(p.trend) ? nlohmann::json(p.trend) : nlohmann::json(nullptr)}};
  }
  const double a_ref = has_expectation(e) ? *e.expected_a : a_d;
  const double b_ref = has_expectation(e) ? *e.expected_b : b_d;
  const double drift = partial_sum(s.sequence(), e.drift_x) - b_ref * std::log(e.drift_x);
  r.values = {{"a", a_d}, {"b", b_d}, {"drift_x", e.drift_x}, {"drift", drift}, {"drift_target", a_ref}};
  r.residuals = {{"distributional_sup", worst}, {"per_phi", per_phi}, {"drift", drift - a_ref}};
  const bool dist_ok = worst <= e.expansion_tolerance;
  const bool drift_ok = std::fabs(drift - a_ref) <= e.tolerance;
  r.verdict = dist_ok && drift_ok ? Verdict::Pass : Verdict::Fail;
  if (!dist_ok) r.note = "distributional residual outside tolerance";
  else if (!drift_ok) r.note = "ordinary drift outside tolerance";
  return r;
}

VerifierResult check_tauberian_expectations(const CorpusEntry& e, std::vector<TauberianWitness>* witnesses) {
  VerifierResult r;
  r.verifier = "TAUBERIAN-EXPECTATIONS";
  if (e.tauberian.empty()) {
    r.note = "no expectations declared";
    return r;
  }
  const auto c = e.coefficients();
  std::string mismatches;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& t : e.tauberian) {
    TauberianWitness w;
    switch (t.condition) {
      case Condition::ClassicalBigO: w = check_classical(c, ClassicalVariant::BigO, e.n_max); break;
      case Condition::ClassicalOneSided: w = check_classical(c, ClassicalVariant::OneSided, e.n_max); break;
      case Condition::OneSidedCesaro: w = check_onesided_cesaro(index_weighted(c), t.order, e.n_max); break;
      case Condition::Stieltjes: {
        const auto grid = parse_grid(e.stieltjes_grid);
        w = check_stieltjes_condition(StieltjesObject::jumps(c), t.order, grid);
        break;
      }
    }
    if (witnesses) witnesses->push_back(w);
    list.push_back({{"condition", to_string(t.condition)}, {"order", t.order}, {"expected", t.expect_pass}, {"observed", w.passed}});
    if (w.passed != t.expect_pass) {
      if (!mismatches.empty()) mismatches += "; ";
      mismatches += to_string(t.condition) + "/" + std::to_string(t.order) + (w.passed ? " passed" : " failed");
    }
  }
  r.values["conditions"] = list;
  r.verdict = mismatches.empty() ? Verdict::Pass : Verdict::Fail;
  if (!mismatches.empty()) r.note = "unexpected: " + mismatches;
  return r;
}

EntryReport verify_entry(const CorpusEntry& e, const RunConfig& config) {
  EntryReport rep;
  rep.name = e.name;
  rep.provenance = e.provenance;
  rep.diagnostic_only = e.diagnostic_only;

  try {
    rep.results.push_back(check_tauberian_expectations(e, &rep.witnesses));
  } catch (const std::exception& ex) {
    rep.results.push_back(error_result("TAUBERIAN-EXPECTATIONS", -1, ex));
  }

  try {
    rep.abel_fit = abel_side_fit(e, config.plot_data ? &rep.abel_samples : nullptr);
  } catch (const std::exception& ex) {
    rep.error = std::string("Abel-side fit: ") + ex.what();
  }

  if (!rep.abel_fit) {
    rep.results.push_back(error_result("VERIFY-ABELIAN", -1, std::runtime_error(rep.error)));
    for (int m : e.littlewood_orders) rep.results.push_back(error_result("VERIFY-LITTLEWOOD", m, std::runtime_error(rep.error)));
    rep.results.push_back(error_result("VERIFY-TWOSIDED", -1, std::runtime_error(rep.error)));
    return rep;
  }
  const AsymptoticFit& fit = *rep.abel_fit;

  try {
    rep.results.push_back(verify_abelian(e, fit));
  } catch (const std::exception& ex) {
    rep.results.push_back(error_result("VERIFY-ABELIAN", -1, ex));
  }
  for (int m : e.littlewood_orders) {
    try {
      TauberianWitness w;
      rep.results.push_back(verify_littlewood(e, fit, m, &w));
      rep.witnesses.push_back(w);
      if (rep.results.back().verdict == Verdict::Pass) rep.riesz_order = m;
    } catch (const std::exception& ex) {
      rep.results.push_back(error_result("VERIFY-LITTLEWOOD", m, ex));
    }
  }
  try {
    rep.results.push_back(verify_twosided(e, fit));
  } catch (const std::exception& ex) {
    rep.results.push_back(error_result("VERIFY-TWOSIDED", -1, ex));
  }

  if (config.plot_data && rep.riesz_order >= 0) {
    try {
      const auto xs = geometric_grid(10.0, e.littlewood_x, 31);
      const auto means = riesz_means_on_grid(e.coefficients(), xs, rep.riesz_order);
      for (std::size_t i = 0; i < xs.size(); ++i) rep.riesz_samples.push_back({xs[i], means[i]});
    } catch (const std::exception&) {
      rep.riesz_samples.clear();
    }
  }
  return rep;
}

VerificationReport run_corpus(const std::vector<CorpusEntry>& corpus, const RunConfig& config) {
  VerificationReport report;
  report.entries.resize(corpus.size());
  kernels::for_each_index(corpus.size(), [&](std::size_t i) { report.entries[i] = verify_entry(corpus[i], config); });
  return report;
}

std::size_t VerificationReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& e : entries)
    for (const auto& r : e.results) n += r.verdict == v;
  return n;
}

double VerificationReport::pass_rate() const {
  const std::size_t pass = count(Verdict::Pass);
  const std::size_t denom = pass + count(Verdict::Fail) + count(Verdict::Error);
  return denom == 0 ? 1.0 : double(pass) / double(denom);
}

bool VerificationReport::all_ok() const { return count(Verdict::Fail) == 0 && count(Verdict::Error) == 0; }

nlohmann::json fit_to_json(const AsymptoticFit& f) {
  return {{"a", f.a},
          {"b", f.b},
          {"residual_sup", f.residual_sup},
          {"trend", std::isfinite(f.trend) ? nlohmann::json(f.trend) : nlohmann::json(nullptr)},
          {"points_used", f.points_used},
          {"window", {f.window_lo, f.window_hi}},
          {"direction", f.direction == Direction::TowardZero ? "zero" : "infinity"}};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& v : e.results) {
      nlohmann::json item = {{"verifier", v.verifier},   {"verdict", to_string(v.verdict)},
                             {"tolerance", v.tolerance}, {"values", v.values},
                             {"residuals", v.residuals}, {"note", v.note}};
      if (v.order >= 0) item["order"] = v.order;
      results.push_back(std::move(item));
    }
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : e.witnesses) witnesses.push_back(to_json(w));
    entries.push_back({{"name", e.name},
                       {"provenance", e.provenance},
                       {"diagnostic_only", e.diagnostic_only},
                       {"abel_fit", e.abel_fit ? fit_to_json(*e.abel_fit) : nlohmann::json(nullptr)},
                       {"witnesses", witnesses},
                       {"results", results},
                       {"error", e.error}});
  }
  return {{"entries", entries},
          {"summary",
           {{"pass", r.count(Verdict::Pass)},
            {"fail", r.count(Verdict::Fail)},
            {"skipped_hypothesis", r.count(Verdict::SkippedHypothesis)},
            {"not_applicable", r.count(Verdict::NotApplicable)},
            {"error", r.count(Verdict::Error)},
            {"pass_rate", r.pass_rate()}}}};
}

void write_summary_csv(std::ostream& out, const VerificationReport& r) {
  out << "entry,verifier,order,verdict,tolerance,fitted_a,fitted_b,max_residual\n";
  for (const auto& e : r.entries) {
    const double a = e.abel_fit ? e.abel_fit->a : std::numeric_limits<double>::quiet_NaN();
    const double b = e.abel_fit ? e.abel_fit->b : std::numeric_limits<double>::quiet_NaN();
    for (const auto& v : e.results) {
      double worst = 0.0;
      bool any = false;
      for (const auto& [key, val] : v.residuals.items()) {
        if (val.is_number()) {
          worst = std::max(worst, std::fabs(val.get<double>()));
          any = true;
        }
      }
      out << e.name << ',' << v.verifier << ',' << (v.order >= 0 ? std::to_string(v.order) : "") << ','
          << to_string(v.verdict) << ',' << fmt17(v.tolerance) << ',' << fmt17(a) << ',' << fmt17(b) << ','
          << (any ? fmt17(worst) : "") << '\n';
    }
  }
}

void write_plot_tsv(std::ostream& out, const EntryReport& e) {
  out << "# " << e.name << "\n";
  out << "section\tx\tvalue\tmodel\n";
  for (const auto& s : e.abel_samples)
    out << "abel\t" << fmt17(s.x) << '\t' << fmt17(s.value) << '\t'
        << fmt17(e.abel_fit ? e.abel_fit->model(s.x) : std::numeric_limits<double>::quiet_NaN()) << '\n';
  for (const auto& s : e.riesz_samples) out << "riesz" << e.riesz_order << '\t' << fmt17(s.x) << '\t' << fmt17(s.value) << "\tnan\n";
}

void write_plot_data(const std::filesystem::path& dir, const VerificationReport& r) {
  std::filesystem::create_directories(dir);
  for (const auto& e : r.entries) {
    std::ofstream out(dir / (e.name + ".tsv"));
    if (!out) throw DomainError("cannot write plot data to " + (dir / (e.name + ".tsv")).string());
    write_plot_tsv(out, e);
  }
}

}  // namespace tauberlab::harness
