#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tauberlab/series.hpp"
#include "tauberlab/summability.hpp"
#include "tauberlab/tauberian.hpp"

namespace tauberlab::harness {

enum class Verdict { Pass, Fail, SkippedHypothesis, NotApplicable, Error };

std::string to_string(Verdict v);

struct TauberianExpectation {
  Condition condition = Condition::OneSidedCesaro;
  int order = 0;
  bool expect_pass = true;
};

struct CorpusEntry {
  std::string name;
  // exactly one of these three
  std::optional<std::string> builtin;
  std::optional<std::string> expr;
  std::optional<std::string> file;
  std::optional<std::string> lambda_expr;

  // Partial-sum drift s(x) - b* log x -> a* in the (C, m*) sense.
  std::optional<double> expected_a;
  std::optional<double> expected_b;
  int cesaro_order = 0;

  std::string abel_grid = "geometric:1e-1:1e-5:41";
  std::string lambda_grid = "geometric:1e1:1e4:7";
  std::string stieltjes_grid = "geometric:1e1:1e5:41";
  std::vector<int> littlewood_orders;
  double littlewood_x = 1e6;
  double drift_x = 1e6;
  std::int64_t n_max = 100'000;
  int abel_order_cap = 4;

  double tolerance = 1e-3;            // fitted constants and drifts
  double cesaro_tolerance = 1e-3;     // Riesz/Cesàro-side limits
  double expansion_tolerance = 1e-2;  // distributional residuals

  std::vector<TauberianExpectation> tauberian;
  /// s(x) + A log x non-decreasing, when declared.
  std::optional<double> monotone_log_A;

  std::string provenance;
  bool diagnostic_only = false;

  StieltjesObject stieltjes() const;
  CoefficientSequence coefficients() const;
};

CorpusEntry entry_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CorpusEntry& e);

std::vector<CorpusEntry> parse_corpus(const nlohmann::json& j);
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);
/// The shipped corpus (same content as data/default_corpus.json).
std::vector<CorpusEntry> default_corpus();
const char* default_corpus_json();

struct VerifierResult {
  std::string verifier;  // VERIFY-ABELIAN, VERIFY-LITTLEWOOD, VERIFY-TWOSIDED, TAUBERIAN-EXPECTATIONS
  int order = -1;        // Littlewood order, -1 otherwise
  Verdict verdict = Verdict::NotApplicable;
  double tolerance = 0.0;
  nlohmann::json values = nlohmann::json::object();     // fitted constants, targets
  nlohmann::json residuals = nlohmann::json::object();
  std::string note;
};

struct EntryReport {
  std::string name;
  std::string provenance;
  bool diagnostic_only = false;
  std::optional<AsymptoticFit> abel_fit;
  std::vector<Sample> abel_samples;
  std::vector<TauberianWitness> witnesses;
  std::vector<VerifierResult> results;
  std::vector<Sample> riesz_samples;  // x, Riesz mean at the highest Littlewood order
  int riesz_order = -1;
  std::string error;
};

struct RunConfig {
  bool plot_data = true;  // keep the sample series needed for TSV output
};

struct VerificationReport {
  std::vector<EntryReport> entries;

  std::size_t count(Verdict v) const;
  /// PASS / (PASS + FAIL + ERROR); skipped and not-applicable verdicts are excluded.
  double pass_rate() const;
  bool all_ok() const;  // no FAIL and no ERROR
};

/// Abel-side samples and fit for an entry; nullopt-free, throws on failure.
AsymptoticFit abel_side_fit(const CorpusEntry& e, std::vector<Sample>* samples = nullptr);

VerifierResult verify_abelian(const CorpusEntry& e, const AsymptoticFit& abel_fit);
VerifierResult verify_littlewood(const CorpusEntry& e, const AsymptoticFit& abel_fit, int m,
                                 TauberianWitness* witness = nullptr);
VerifierResult verify_twosided(const CorpusEntry& e, const AsymptoticFit& abel_fit);
VerifierResult check_tauberian_expectations(const CorpusEntry& e, std::vector<TauberianWitness>* witnesses = nullptr);

EntryReport verify_entry(const CorpusEntry& e, const RunConfig& config = {});
/// Entries run concurrently; the report is assembled in corpus order.
VerificationReport run_corpus(const std::vector<CorpusEntry>& corpus, const RunConfig& config = {});

nlohmann::json fit_to_json(const AsymptoticFit& f);
nlohmann::json to_json(const VerificationReport& r);
void write_summary_csv(std::ostream& out, const VerificationReport& r);
/// One TSV per entry: section, x, value, model.
void write_plot_data(const std::filesystem::path& dir, const VerificationReport& r);
void write_plot_tsv(std::ostream& out, const EntryReport& e);

}  // namespace tauberlab::harness
