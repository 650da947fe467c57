#include "deterrence/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "deterrence/distribution.hpp"
#include "deterrence/errors.hpp"
#include "deterrence/paper_data.hpp"

namespace deterrence {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kRocPointsFile = "roc_points.csv";
constexpr std::string_view kAucTableFile = "auc_table.csv";
constexpr std::string_view kJTableFile = "j_table.csv";
constexpr std::string_view kGameReportFile = "game_report.csv";
constexpr std::string_view kComparisonFile = "comparison.csv";
constexpr std::string_view kReportFile = "run_report.json";

// Rounds to the 9 significant digits used in every artifact.
double round9(double v) {
  if (!std::isfinite(v)) return v;
  const std::string text = format_value(v);
  double out = v;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

ordered_json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return nullptr;
  return round9(v);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Largest |estimate - exact| / SE over every exact-mode threshold and both
// adversary types. The SE floor uses the exact probability so that a
// degenerate estimate (0 or 1) is still judged on its sampling spread.
double monte_carlo_max_z(const WeightScheme& scheme, const InfoEnvironment& env,
                         const ConditionalDistributions& dists, std::uint64_t trials,
                         std::uint64_t seed) {
  const auto taus = sweep_thresholds(scheme, ThresholdGrid::exact());
  double worst = 0.0;
  std::uint64_t stream = 0;
  for (const double tau : taus) {
    for (const bool aggressive : {true, false}) {
      const auto& probs = aggressive ? env.p : env.q;
      const double exact = tail_probability(aggressive ? dists.aggressive : dists.benign, tau);
      const auto mc = monte_carlo_tail(scheme, probs, tau, trials, splitmix64(seed + stream++));
      const double se = std::max(
          mc.standard_error, std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials)));
      const double diff = std::abs(mc.estimate - exact);
      const double z = se > 0.0 ? diff / se
                                : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
      worst = std::max(worst, z);
    }
  }
  return worst;
}

CellResult evaluate_cell(const WeightScheme& scheme, const InfoEnvironment& env,
                         const ExperimentConfig& cfg, std::uint64_t cell_seed) {
  CellResult cell;
  cell.scheme = scheme.name;
  cell.env_id = env.id;
  const auto dists = conditional_distributions(scheme, env);
  cell.curve = roc_curve(scheme, env, cfg.grid);
  cell.auc = auc_trapezoid(cell.curve);
  cell.auc_rank = auc_exact(dists.aggressive, dists.benign);
  const auto y = youden(scheme, env, cfg.grid);
  cell.j_star = y.j_star;
  cell.tau_star = y.tau_star;
  if (cfg.trials > 0) {
    cell.max_abs_z = monte_carlo_max_z(scheme, env, dists, cfg.trials, cell_seed);
  }
  return cell;
}

std::vector<GameRow> game_rows(const std::vector<WeightScheme>& schemes,
                               std::span<const InfoEnvironment> envs,
                               const GameSettings& settings) {
  std::vector<GameRow> rows;
  for (const auto& scheme : schemes) {
    GameRow row;
    row.scheme = scheme.name;
    row.tau = settings.tau;
    row.rates = average_rates(scheme, settings.tau, envs);
    row.assessment = assess_attack(row.rates.mean_retaliation, settings.params);
    row.breakeven_ratio = breakeven_benefit_ratio(row.rates.mean_retaliation);
    rows.push_back(row);
  }
  return rows;
}

std::string game_report_csv(const std::vector<GameRow>& rows, const GameParams& params) {
  std::string out =
      "scheme,tau,mean_r,mean_f,breakeven_ratio,benefit,cost,prior,deterrence_threshold,"
      "expected_payoff,attacks\n";
  for (const auto& r : rows) {
    out += r.scheme + ',' + format_exact(r.tau) + ',' + format_value(r.rates.mean_retaliation) +
           ',' + format_value(r.rates.mean_false_alarm) + ',' +
           (std::isinf(r.breakeven_ratio) ? std::string("inf") : format_value(r.breakeven_ratio)) +
           ',' + format_exact(params.benefit) + ',' + format_exact(params.cost) + ',' +
           format_exact(params.prior) + ',' + format_value(r.assessment.deterrence_threshold) +
           ',' + format_value(r.assessment.expected_payoff) + ',' +
           (r.assessment.attacks ? "true" : "false") + '\n';
  }
  return out;
}

std::string comparison_csv(const std::vector<ComparisonCell>& cells) {
  std::string out = "table,scheme,column,published,computed,delta,tolerance,within\n";
  for (const auto& c : cells) {
    out += c.table + ',' + c.scheme + ',' + c.column + ',' + format_exact(c.published) + ',' +
           format_value(c.computed) + ',' + format_value(c.delta()) + ',' +
           format_exact(c.tolerance) + ',' + (c.within() ? "true" : "false") + '\n';
  }
  return out;
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'" +
                  (ec ? ": " + ec.message() : ""));
  }
}

void write_artifact(RunReport& report, const std::filesystem::path& dir, std::string_view name,
                    const std::string& contents) {
  write_text_file(dir / name, contents);
  report.artifacts.emplace_back(name);
}

std::vector<LabeledCurve> labeled(const RunReport& report, std::string_view scheme_filter,
                                  std::string_view env_filter) {
  std::vector<LabeledCurve> out;
  for (const auto& cell : report.cells) {
    if (!scheme_filter.empty() && cell.scheme != scheme_filter) continue;
    if (!env_filter.empty() && cell.env_id != env_filter) continue;
    out.push_back({cell.scheme, cell.env_id, cell.curve});
  }
  return out;
}

void write_figure(RunReport& report, const std::filesystem::path& dir, const std::string& stem,
                  const std::vector<LabeledCurve>& curves, bool label_by_env,
                  const std::string& title) {
  write_artifact(report, dir, stem + ".csv", roc_points_csv(curves));
  std::vector<SvgCurve> svg;
  for (const auto& lc : curves) svg.push_back({label_by_env ? lc.env_id : lc.scheme, lc.curve});
  write_artifact(report, dir, stem + ".svg", render_svg(svg, title));
}

void write_requested(RunReport& report, const std::filesystem::path& dir) {
  const auto& cfg = report.config;
  for (const auto kind : cfg.outputs) {
    switch (kind) {
      case ArtifactKind::kRocPoints:
        write_artifact(report, dir, kRocPointsFile, roc_points_csv(labeled(report, "", "")));
        break;
      case ArtifactKind::kAucTable:
        write_artifact(report, dir, kAucTableFile, auc_table_csv(report.auc));
        break;
      case ArtifactKind::kJTable:
        write_artifact(report, dir, kJTableFile, j_table_csv(report.j));
        break;
      case ArtifactKind::kGameReport:
        write_artifact(report, dir, kGameReportFile,
                       game_report_csv(report.game, cfg.game.params));
        break;
      case ArtifactKind::kSvgPlot:
        for (const auto& env : cfg.environments) {
          write_figure(report, dir, "roc_" + env.id, labeled(report, "", env.id), false,
                       "ROC curves, " + env.id);
        }
        break;
    }
  }
}

const json& require(const json& doc, const char* key, const std::string& context) {
  if (!doc.contains(key)) throw ValidationError(context + ": missing field '" + key + "'");
  return doc.at(key);
}

std::vector<double> number_list(const json& value, const std::string& context) {
  if (!value.is_array()) throw ValidationError(context + ": expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number()) {
      throw ValidationError(context + "[" + std::to_string(i) + "]: expected a number");
    }
    out.push_back(value[i].get<double>());
  }
  return out;
}

}  // namespace

std::string_view to_string(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::kRocPoints: return "roc-points";
    case ArtifactKind::kAucTable: return "auc-table";
    case ArtifactKind::kJTable: return "j-table";
    case ArtifactKind::kGameReport: return "game-report";
    case ArtifactKind::kSvgPlot: return "svg-plot";
  }
  return "unknown";
}

ArtifactKind parse_artifact_kind(std::string_view text) {
  for (const auto kind : {ArtifactKind::kRocPoints, ArtifactKind::kAucTable, ArtifactKind::kJTable,
                          ArtifactKind::kGameReport, ArtifactKind::kSvgPlot}) {
    if (to_string(kind) == text) return kind;
  }
  throw ValidationError("unknown output '" + std::string(text) +
                        "' (expected roc-points, auc-table, j-table, game-report or svg-plot)");
}

void ExperimentConfig::validate() const {
  if (schemes.empty()) throw ValidationError("config: schemes must not be empty");
  if (environments.empty()) throw ValidationError("config: environments must not be empty");
  grid.validate();
  game.params.validate();
  for (const auto& s : schemes) {
    s.validate();
    for (const auto& e : environments) validate_environment(e, s.size());
  }
}

ExperimentConfig config_from_json(const json& doc, const std::string& context) {
  if (!doc.is_object()) throw ValidationError(context + ": expected a JSON object");
  ExperimentConfig cfg;

  const auto& schemes = require(doc, "schemes", context);
  if (!schemes.is_array()) throw ValidationError(context + ".schemes: expected an array");
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    const std::string where = context + ".schemes[" + std::to_string(i) + "]";
    const auto& s = schemes[i];
    try {
      if (s.is_string()) {
        cfg.schemes.push_back(find_paper_scheme(s.get<std::string>()));
      } else if (s.is_object()) {
        WeightScheme scheme{require(s, "name", where).get<std::string>(),
                            number_list(require(s, "weights", where), where + ".weights")};
        scheme.validate();
        cfg.schemes.push_back(std::move(scheme));
      } else {
        throw ValidationError("expected a scheme name or object");
      }
    } catch (const ValidationError& e) {
      if (std::string_view(e.what()).starts_with(where)) throw;
      throw ValidationError(where + ": " + e.what());
    } catch (const json::exception& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }

  const auto& envs = require(doc, "environments", context);
  if (!envs.is_array()) throw ValidationError(context + ".environments: expected an array");
  for (std::size_t i = 0; i < envs.size(); ++i) {
    const std::string where = context + ".environments[" + std::to_string(i) + "]";
    const auto& e = envs[i];
    try {
      if (e.is_string()) {
        cfg.environments.push_back(find_paper_environment(e.get<std::string>()));
      } else if (e.is_object()) {
        cfg.environments.push_back({require(e, "id", where).get<std::string>(),
                                    number_list(require(e, "p", where), where + ".p"),
                                    number_list(require(e, "q", where), where + ".q")});
      } else {
        throw ValidationError("expected an environment id or object");
      }
    } catch (const ValidationError& ex) {
      if (std::string_view(ex.what()).starts_with(where)) throw;
      throw ValidationError(where + ": " + ex.what());
    } catch (const json::exception& ex) {
      throw ValidationError(where + ": " + ex.what());
    }
  }

  try {
    if (doc.contains("grid")) {
      const auto& g = doc.at("grid");
      if (g.contains("mode")) cfg.grid.mode = parse_grid_mode(g.at("mode").get<std::string>());
      if (g.contains("samples")) cfg.grid.samples = g.at("samples").get<int>();
      if (g.contains("lo")) cfg.grid.lo = g.at("lo").get<double>();
      if (g.contains("hi")) cfg.grid.hi = g.at("hi").get<double>();
    }
    if (doc.contains("outputs")) {
      for (const auto& o : doc.at("outputs")) {
        cfg.outputs.push_back(parse_artifact_kind(o.get<std::string>()));
      }
    }
    if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("trials")) cfg.trials = doc.at("trials").get<std::uint64_t>();
    if (doc.contains("jobs")) cfg.jobs = doc.at("jobs").get<unsigned>();
    if (doc.contains("game")) {
      const auto& g = doc.at("game");
      if (g.contains("tau")) cfg.game.tau = g.at("tau").get<double>();
      if (g.contains("benefit")) cfg.game.params.benefit = g.at("benefit").get<double>();
      if (g.contains("cost")) cfg.game.params.cost = g.at("cost").get<double>();
      if (g.contains("prior")) cfg.game.params.prior = g.at("prior").get<double>();
    }
  } catch (const json::exception& e) {
    throw ValidationError(context + ": " + e.what());
  }

  try {
    cfg.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(context + ": " + e.what());
  }
  return cfg;
}

ordered_json config_to_json(const ExperimentConfig& cfg) {
  ordered_json doc;
  doc["schemes"] = ordered_json::array();
  for (const auto& s : cfg.schemes) {
    doc["schemes"].push_back({{"name", s.name}, {"weights", s.weights}});
  }
  doc["environments"] = ordered_json::array();
  for (const auto& e : cfg.environments) {
    doc["environments"].push_back({{"id", e.id}, {"p", e.p}, {"q", e.q}});
  }
  ordered_json grid;
  grid["mode"] = to_string(cfg.grid.mode);
  grid["samples"] = cfg.grid.samples;
  if (cfg.grid.lo) grid["lo"] = *cfg.grid.lo;
  if (cfg.grid.hi) grid["hi"] = *cfg.grid.hi;
  doc["grid"] = grid;
  doc["outputs"] = ordered_json::array();
  for (const auto o : cfg.outputs) doc["outputs"].push_back(to_string(o));
  doc["seed"] = cfg.seed;
  doc["trials"] = cfg.trials;
  doc["game"] = {{"tau", cfg.game.tau},
                 {"benefit", cfg.game.params.benefit},
                 {"cost", cfg.game.params.cost},
                 {"prior", cfg.game.params.prior}};
  return doc;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  json doc;
  try {
    doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return config_from_json(doc, path.string());
}

ExperimentConfig paper_config(int samples) {
  ExperimentConfig cfg;
  cfg.schemes = paper_schemes();
  cfg.environments = paper_environments();
  cfg.grid = ThresholdGrid::replication(samples);
  cfg.outputs = {ArtifactKind::kRocPoints, ArtifactKind::kAucTable, ArtifactKind::kJTable,
                 ArtifactKind::kGameReport};
  cfg.game.tau = kConclusionThreshold;
  return cfg;
}

bool ComparisonCell::within() const { return std::abs(delta()) <= tolerance + 1e-12; }

const CellResult& RunReport::cell(std::string_view scheme, std::string_view env_id) const {
  for (const auto& c : cells) {
    if (c.scheme == scheme && c.env_id == env_id) return c;
  }
  throw ValidationError("no result for scheme '" + std::string(scheme) + "' and environment '" +
                        std::string(env_id) + "'");
}

bool RunReport::comparison_clean() const { return failing_cells().empty(); }

std::vector<ComparisonCell> RunReport::failing_cells() const {
  std::vector<ComparisonCell> out;
  for (const auto& c : comparison) {
    if (!c.within()) out.push_back(c);
  }
  return out;
}

RunReport evaluate(const ExperimentConfig& cfg) {
  cfg.validate();
  RunReport report;
  report.config = cfg;

  const std::size_t n_env = cfg.environments.size();
  const std::size_t total = cfg.schemes.size() * n_env;
  report.cells.resize(total);

  unsigned workers = cfg.jobs ? cfg.jobs : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        report.cells[i] = evaluate_cell(cfg.schemes[i / n_env], cfg.environments[i % n_env], cfg,
                                        splitmix64(cfg.seed ^ (0xA5A5A5A5ULL * (i + 1))));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  // Same accumulation order as auc_statistics / j_statistics.
  const auto count = static_cast<double>(n_env);
  for (std::size_t s = 0; s < cfg.schemes.size(); ++s) {
    AucStats a{cfg.schemes[s].name, 0.0, std::numeric_limits<double>::infinity(),
               -std::numeric_limits<double>::infinity()};
    JStats j{cfg.schemes[s].name, 0.0, std::numeric_limits<double>::infinity(),
             -std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t e = 0; e < n_env; ++e) {
      const auto& c = report.cells[s * n_env + e];
      a.mean += c.auc;
      a.min = std::min(a.min, c.auc);
      a.max = std::max(a.max, c.auc);
      j.mean_j += c.j_star;
      j.min_j = std::min(j.min_j, c.j_star);
      j.max_j = std::max(j.max_j, c.j_star);
      j.mean_tau_star += c.tau_star;
    }
    a.mean /= count;
    j.mean_j /= count;
    j.mean_tau_star /= count;
    report.auc.push_back(a);
    report.j.push_back(j);
  }

  if (std::find(cfg.outputs.begin(), cfg.outputs.end(), ArtifactKind::kGameReport) !=
      cfg.outputs.end()) {
    report.game = game_rows(cfg.schemes, cfg.environments, cfg.game);
  }

  report.provenance.config_hash = fnv1a_hex(config_to_json(cfg).dump());
  report.provenance.mode = std::string(to_string(cfg.grid.mode));
  report.provenance.samples = cfg.grid.mode == GridMode::kReplication ? cfg.grid.samples : 0;
  report.provenance.tool_version = std::string(kToolVersion);
  return report;
}

RunReport run_config(const ExperimentConfig& cfg, const std::filesystem::path& output_dir) {
  RunReport report = evaluate(cfg);
  ensure_directory(output_dir);
  write_requested(report, output_dir);
  report.artifacts.emplace_back(kReportFile);
  write_text_file(output_dir / kReportFile, report_to_json(report).dump(2) + "\n");
  return report;
}

std::vector<ComparisonCell> compare_with_published(const RunReport& report) {
  std::vector<ComparisonCell> cells;
  const auto find_auc = [&](const std::string& scheme) -> const AucStats& {
    for (const auto& a : report.auc) {
      if (a.scheme == scheme) return a;
    }
    throw ValidationError("report has no AUC statistics for '" + scheme + "'");
  };
  const auto find_j = [&](const std::string& scheme) -> const JStats& {
    for (const auto& j : report.j) {
      if (j.scheme == scheme) return j;
    }
    throw ValidationError("report has no J statistics for '" + scheme + "'");
  };

  for (const auto& row : published_auc_table()) {
    const auto& a = find_auc(row.scheme);
    cells.push_back({"auc", row.scheme, "mean", row.mean, a.mean, kAucTolerance});
    cells.push_back({"auc", row.scheme, "min", row.min, a.min, kAucTolerance});
    cells.push_back({"auc", row.scheme, "max", row.max, a.max, kAucTolerance});
  }
  for (const auto& row : published_j_table()) {
    const auto& j = find_j(row.scheme);
    cells.push_back({"j", row.scheme, "mean_j", row.mean_j, j.mean_j, kJTolerance});
    cells.push_back({"j", row.scheme, "min_j", row.min_j, j.min_j, kJTolerance});
    cells.push_back({"j", row.scheme, "max_j", row.max_j, j.max_j, kJTolerance});
    cells.push_back({"j", row.scheme, "mean_tau_star", row.mean_tau_star, j.mean_tau_star,
                     kTauStarTolerance});
  }

  const std::string high_high(featured_environments().front().env_id);
  cells.push_back({"headline", "dictator", "auc_" + high_high, kPublishedDictatorHighHighAuc,
                   report.cell("dictator", high_high).auc, kHeadlineAucTolerance});
  for (const char* scheme : {"unbiased", "technology", "two-bloc"}) {
    cells.push_back({"headline", scheme, "auc_" + high_high, kPublishedBestHighHighAuc,
                     report.cell(scheme, high_high).auc, kHeadlineAucTolerance});
  }

  const auto battery = conclusion_battery();
  const auto rates = average_rates(find_paper_scheme("unbiased"), kConclusionThreshold, battery);
  cells.push_back({"conclusion", "unbiased", "mean_retaliation", kPublishedMeanRetaliation,
                   rates.mean_retaliation, kAverageRateTolerance});
  cells.push_back({"conclusion", "unbiased", "mean_false_alarm", kPublishedMeanFalseAlarm,
                   rates.mean_false_alarm, kAverageRateTolerance});
  cells.push_back({"conclusion", "unbiased", "breakeven_ratio_at_0.92", kPublishedBreakevenRatio,
                   breakeven_benefit_ratio(kPublishedMeanRetaliation), 1e-9});
  return cells;
}

RunReport reproduce_paper(const std::filesystem::path& output_dir, int samples, unsigned jobs) {
  ExperimentConfig cfg = paper_config(samples);
  cfg.jobs = jobs;
  // The game report averages over the battery without the near-random outlier.
  cfg.outputs.erase(std::remove(cfg.outputs.begin(), cfg.outputs.end(), ArtifactKind::kGameReport),
                    cfg.outputs.end());
  RunReport report = evaluate(cfg);
  report.game = game_rows(cfg.schemes, conclusion_battery(), cfg.game);
  report.comparison = compare_with_published(report);

  ensure_directory(output_dir);
  write_requested(report, output_dir);
  write_artifact(report, output_dir, kGameReportFile,
                 game_report_csv(report.game, cfg.game.params));
  for (const auto& fig : featured_environments()) {
    write_figure(report, output_dir, fig.figure, labeled(report, "", fig.env_id), false,
                 fig.title);
  }
  write_figure(report, output_dir, "fig5_unbiased_all", labeled(report, "unbiased", ""), true,
               "Unbiased scheme, all environments");
  write_figure(report, output_dir, "fig6_technology_all", labeled(report, "technology", ""), true,
               "Technology scheme, all environments");
  write_artifact(report, output_dir, kComparisonFile, comparison_csv(report.comparison));
  report.artifacts.emplace_back(kReportFile);
  write_text_file(output_dir / kReportFile, report_to_json(report).dump(2) + "\n");
  return report;
}

ordered_json report_to_json(const RunReport& report) {
  ordered_json doc;
  doc["config"] = config_to_json(report.config);

  ordered_json results;
  results["cells"] = ordered_json::array();
  for (const auto& c : report.cells) {
    ordered_json cell{{"scheme", c.scheme},         {"env_id", c.env_id},
                      {"roc_points", c.curve.points.size()},
                      {"anchored", c.curve.anchored},
                      {"auc", number(c.auc)},       {"auc_rank", number(c.auc_rank)},
                      {"j_star", number(c.j_star)}, {"tau_star", number(c.tau_star)}};
    if (c.max_abs_z) cell["monte_carlo_max_abs_z"] = number(*c.max_abs_z);
    results["cells"].push_back(cell);
  }
  results["auc_table"] = ordered_json::array();
  for (const auto& a : report.auc) {
    results["auc_table"].push_back({{"scheme", a.scheme},
                                    {"mean", number(a.mean)},
                                    {"min", number(a.min)},
                                    {"max", number(a.max)}});
  }
  results["j_table"] = ordered_json::array();
  for (const auto& j : report.j) {
    results["j_table"].push_back({{"scheme", j.scheme},
                                  {"mean_j", number(j.mean_j)},
                                  {"min_j", number(j.min_j)},
                                  {"max_j", number(j.max_j)},
                                  {"mean_tau_star", number(j.mean_tau_star)}});
  }
  if (!report.game.empty()) {
    results["game"] = ordered_json::array();
    for (const auto& g : report.game) {
      results["game"].push_back({{"scheme", g.scheme},
                                 {"tau", g.tau},
                                 {"mean_r", number(g.rates.mean_retaliation)},
                                 {"mean_f", number(g.rates.mean_false_alarm)},
                                 {"breakeven_ratio", number(g.breakeven_ratio)},
                                 {"deterrence_threshold", number(g.assessment.deterrence_threshold)},
                                 {"expected_payoff", number(g.assessment.expected_payoff)},
                                 {"attacks", g.assessment.attacks}});
    }
  }
  doc["results"] = results;

  if (!report.comparison.empty()) {
    ordered_json cmp;
    cmp["clean"] = report.comparison_clean();
    cmp["cells"] = ordered_json::array();
    for (const auto& c : report.comparison) {
      cmp["cells"].push_back({{"table", c.table},
                              {"scheme", c.scheme},
                              {"column", c.column},
                              {"published", c.published},
                              {"computed", number(c.computed)},
                              {"delta", number(c.delta())},
                              {"tolerance", c.tolerance},
                              {"within", c.within()}});
    }
    doc["comparison"] = cmp;
  }

  doc["provenance"] = {{"config_hash", report.provenance.config_hash},
                       {"mode", report.provenance.mode},
                       {"samples", report.provenance.samples},
                       {"tool_version", report.provenance.tool_version},
                       {"artifacts", report.artifacts}};
  return doc;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace deterrence
