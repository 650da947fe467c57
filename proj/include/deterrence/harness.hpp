#pragma once

// Batch experiments over a scheme x environment grid: configuration, the
// parallel evaluator, artifact writing and the comparison against the
// published tables.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "deterrence/artifacts.hpp"
#include "deterrence/game.hpp"
#include "deterrence/roc.hpp"

namespace deterrence {

enum class ArtifactKind { kRocPoints, kAucTable, kJTable, kGameReport, kSvgPlot };

std::string_view to_string(ArtifactKind kind);
ArtifactKind parse_artifact_kind(std::string_view text);

// Threshold and payoffs used for the game-report artifact.
struct GameSettings {
  double tau = 2.0;
  GameParams params{11.5, 1.0, 0.5};
};

struct ExperimentConfig {
  std::vector<WeightScheme> schemes;
  std::vector<InfoEnvironment> environments;
  ThresholdGrid grid;
  std::vector<ArtifactKind> outputs;
  std::uint64_t seed = 42;
  std::uint64_t trials = 0;  // > 0 enables Monte Carlo cross-checks per cell
  GameSettings game;
  unsigned jobs = 0;  // 0 = hardware concurrency; does not affect results

  void validate() const;
};

// JSON form of ExperimentConfig. Schemes may be given by name (one of the
// seven built-ins) or as {"name": ..., "weights": [...]}; environments by id
// ("env01".."env14") or as {"id": ..., "p": [...], "q": [...]}. Comments are
// allowed when reading from a file.
ExperimentConfig config_from_json(const nlohmann::json& doc, const std::string& context = "config");
nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::filesystem::path& path);

// The 7 x 14 built-in grid with every artifact requested.
ExperimentConfig paper_config(int samples = kDefaultSamples);

struct CellResult {
  std::string scheme;
  std::string env_id;
  RocCurve curve;
  double auc = 0.0;        // auc_trapezoid of `curve`
  double auc_rank = 0.0;   // auc_exact of the two sum distributions
  double j_star = 0.0;
  double tau_star = 0.0;
  std::optional<double> max_abs_z;  // Monte Carlo vs exact, when trials > 0
};

struct GameRow {
  std::string scheme;
  double tau = 0.0;
  AverageRates rates;
  AttackAssessment assessment;  // evaluated at the mean retaliation rate
  double breakeven_ratio = 0.0;
};

struct ComparisonCell {
  std::string table;
  std::string scheme;
  std::string column;
  double published = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;

  double delta() const { return computed - published; }
  bool within() const;
};

struct Provenance {
  std::string config_hash;  // FNV-1a 64 of the canonical config JSON
  std::string mode;
  int samples = 0;
  std::string tool_version;
};

struct RunReport {
  ExperimentConfig config;
  std::vector<CellResult> cells;  // scheme-major, config order
  std::vector<AucStats> auc;
  std::vector<JStats> j;
  std::vector<GameRow> game;
  std::vector<ComparisonCell> comparison;
  std::vector<std::string> artifacts;  // file names written, in order
  Provenance provenance;

  const CellResult& cell(std::string_view scheme, std::string_view env_id) const;
  bool comparison_clean() const;
  std::vector<ComparisonCell> failing_cells() const;
};

// Pure computation of every cell plus the per-scheme statistics.
RunReport evaluate(const ExperimentConfig& cfg);

// evaluate() and write the requested artifacts plus run_report.json.
RunReport run_config(const ExperimentConfig& cfg, const std::filesystem::path& output_dir);

// Published-value comparison for a report computed on the built-in grid.
std::vector<ComparisonCell> compare_with_published(const RunReport& report);

// Full reproduction: tables, figure datasets, comparison and JSON report.
RunReport reproduce_paper(const std::filesystem::path& output_dir,
                          int samples = kDefaultSamples, unsigned jobs = 0);

nlohmann::ordered_json report_to_json(const RunReport& report);

std::string fnv1a_hex(std::string_view bytes);

inline constexpr std::string_view kToolVersion = "1.0.0";

}  // namespace deterrence
