// Command-line front end. Exit codes: 0 success, 1 validation error,
// 2 I/O error, 3 reproduction outside published tolerances.

#include <cmath>
#include <cstdlib>
#include <limits>
#include <locale>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "deterrence/artifacts.hpp"
#include "deterrence/distribution.hpp"
#include "deterrence/errors.hpp"
#include "deterrence/game.hpp"
#include "deterrence/harness.hpp"
#include "deterrence/model.hpp"
#include "deterrence/paper_data.hpp"
#include "deterrence/roc.hpp"

namespace {

using namespace deterrence;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitTolerance = 3;

std::filesystem::path default_output_dir() {
  if (const char* env = std::getenv("DETERRENCE_OUT_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return "deterrence-out";
}

// Flags shared by every command that needs a scheme and an environment.
struct SchemeFlags {
  std::string scheme;
  std::vector<double> weights;
  std::vector<double> p;
  std::vector<double> q;

  void attach(CLI::App* cmd) {
    auto* by_name = cmd->add_option("--scheme", scheme,
                                    "Built-in scheme: unbiased, dictator, veto, technology, "
                                    "frontline, geographical, two-bloc");
    auto* by_weights =
        cmd->add_option("--weights", weights, "Custom weights, comma separated")->delimiter(',');
    by_name->excludes(by_weights);
    cmd->add_option("--p", p, "Resolve probabilities Pr(s_i=1|T=1), comma separated")
        ->delimiter(',');
    cmd->add_option("--q", q, "False-alarm probabilities Pr(s_i=1|T=0), comma separated")
        ->delimiter(',');
  }

  WeightScheme resolve_scheme() const {
    if (!weights.empty()) {
      WeightScheme custom{"custom", weights};
      try {
        custom.validate();
      } catch (const ValidationError& e) {
        throw ValidationError(std::string("--weights: ") + e.what());
      }
      return custom;
    }
    if (scheme.empty()) throw ValidationError("--scheme or --weights is required");
    try {
      return find_paper_scheme(scheme);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("--scheme: ") + e.what());
    }
  }

  static void check_vector(const std::vector<double>& v, const char* flag, std::size_t n) {
    if (v.empty()) throw ValidationError(std::string(flag) + " is required");
    if (v.size() != n) {
      throw ValidationError(std::string(flag) + ": expected " + std::to_string(n) +
                            " comma-separated values (one per member), got " +
                            std::to_string(v.size()));
    }
    validate_probabilities(v, flag);
  }

  InfoEnvironment resolve_environment(const WeightScheme& s) const {
    check_vector(p, "--p", s.weights.size());
    check_vector(q, "--q", s.weights.size());
    return {"cli", p, q};
  }
};

struct GridFlags {
  std::string mode = "replication";
  int samples = kDefaultSamples;

  void attach(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "Threshold sweep: replication or exact")
        ->capture_default_str();
    cmd->add_option("--samples", samples, "Thresholds in a replication sweep")
        ->capture_default_str();
  }

  ThresholdGrid grid() const {
    ThresholdGrid g;
    try {
      g.mode = parse_grid_mode(mode);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("--mode: ") + e.what());
    }
    g.samples = samples;
    if (g.mode == GridMode::kReplication && samples < 2) {
      throw ValidationError("--samples: a replication sweep needs at least 2 thresholds");
    }
    return g;
  }
};

std::string fmt3(double v) { return format_fixed(v, 3); }

int cmd_roc(const SchemeFlags& sf, const GridFlags& gf, const std::string& out,
            const std::string& svg) {
  const auto scheme = sf.resolve_scheme();
  const auto env = sf.resolve_environment(scheme);
  const auto curve = roc_curve(scheme, env, gf.grid());
  const double auc = auc_trapezoid(curve);

  const std::filesystem::path csv_path =
      out.empty() ? default_output_dir() / "roc_points.csv" : std::filesystem::path(out);
  if (csv_path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(csv_path.parent_path(), ec);
  }
  const std::vector<LabeledCurve> curves{{scheme.name, env.id, curve}};
  write_text_file(csv_path, roc_points_csv(curves));
  if (!svg.empty()) {
    const std::vector<SvgCurve> plot{{scheme.name, curve}};
    emit_svg(plot, svg, "ROC curve, " + scheme.name);
  }
  std::cout << "AUC " << fmt3(auc) << " (" << format_value(auc) << ")\n"
            << "mode " << to_string(curve.mode) << ", points " << curve.points.size() << "\n"
            << "wrote " << csv_path.string() << "\n";
  return kExitOk;
}

int cmd_auc(const SchemeFlags& sf, const GridFlags& gf) {
  const auto scheme = sf.resolve_scheme();
  const auto env = sf.resolve_environment(scheme);
  const auto dists = conditional_distributions(scheme, env);
  const double trapezoid = auc_trapezoid(roc_curve(scheme, env, gf.grid()));
  const double rank = auc_exact(dists.aggressive, dists.benign);
  std::cout << "AUC " << fmt3(trapezoid) << " (" << format_value(trapezoid) << ", "
            << to_string(gf.grid().mode) << " trapezoid)\n"
            << "rank AUC " << fmt3(rank) << " (" << format_value(rank) << ")\n";
  return kExitOk;
}

int cmd_youden(const SchemeFlags& sf, const GridFlags& gf) {
  const auto scheme = sf.resolve_scheme();
  const auto env = sf.resolve_environment(scheme);
  const auto result = youden(scheme, env, gf.grid());
  std::cout << "J* " << fmt3(result.j_star) << " (" << format_value(result.j_star) << ")\n"
            << "tau* " << format_value(result.tau_star) << "\n";
  return kExitOk;
}

int cmd_game(const SchemeFlags& sf, std::optional<double> retaliation, std::optional<double> tau,
             const GameParams& params) {
  params.validate();
  double r = 0.0;
  if (retaliation) {
    r = *retaliation;
  } else {
    if (!tau) throw ValidationError("--tau is required when --retaliation is not given");
    const auto scheme = sf.resolve_scheme();
    SchemeFlags::check_vector(sf.p, "--p", scheme.weights.size());
    r = tail_probability(weighted_sum_distribution(scheme, sf.p), *tau);
    if (!sf.q.empty()) {
      SchemeFlags::check_vector(sf.q, "--q", scheme.weights.size());
      const double f = tail_probability(weighted_sum_distribution(scheme, sf.q), *tau);
      std::cout << "escalation risk F " << format_value(f) << "\n";
    }
  }
  if (!(r >= 0.0 && r <= 1.0)) throw ValidationError("--retaliation: must lie in [0, 1]");
  const auto a = assess_attack(r, params);
  // Rounding residue at the breakeven point prints as 0.
  const double payoff = std::abs(a.expected_payoff) <= 1e-12 * (params.benefit + params.cost)
                            ? 0.0
                            : a.expected_payoff;
  const double breakeven = breakeven_benefit_ratio(r);
  std::cout << "retaliation probability R " << format_value(r) << "\n"
            << "expected attack payoff " << format_value(payoff) << "\n"
            << "deterrence threshold B/(B+C) " << format_value(a.deterrence_threshold) << "\n"
            << "verdict " << (a.attacks ? "attacks" : "deterred") << "\n"
            << "breakeven B/C " << (std::isinf(breakeven) ? "inf" : format_value(breakeven))
            << "\n"
            << "prior " << format_value(params.prior) << "\n";
  return kExitOk;
}

int cmd_batch(const std::string& config_path, const std::string& out, unsigned jobs) {
  auto cfg = load_config(config_path);
  if (jobs != 0) cfg.jobs = jobs;
  const std::filesystem::path dir = out.empty() ? default_output_dir() : std::filesystem::path(out);
  const auto report = run_config(cfg, dir);
  std::cout << "cells " << report.cells.size() << "\n";
  for (const auto& a : report.auc) {
    std::cout << a.scheme << " AUC mean " << fmt3(a.mean) << " min " << fmt3(a.min) << " max "
              << fmt3(a.max) << "\n";
  }
  for (const auto& name : report.artifacts) std::cout << "wrote " << (dir / name).string() << "\n";
  return kExitOk;
}

int cmd_reproduce(const std::string& out, int samples, unsigned jobs) {
  if (samples < 2) throw ValidationError("--samples: needs at least 2 thresholds");
  const std::filesystem::path dir = out.empty() ? default_output_dir() : std::filesystem::path(out);
  const auto report = reproduce_paper(dir, samples, jobs);
  const auto failing = report.failing_cells();
  std::cout << "artifacts " << report.artifacts.size() << " in " << dir.string() << "\n"
            << "comparison cells " << report.comparison.size() << ", outside tolerance "
            << failing.size() << "\n";
  for (const auto& c : failing) {
    std::cout << "  " << c.table << ' ' << c.scheme << ' ' << c.column << ": published "
              << format_exact(c.published) << ", computed " << format_value(c.computed)
              << ", delta " << format_value(c.delta()) << " (tolerance "
              << format_exact(c.tolerance) << ")\n";
  }
  return failing.empty() ? kExitOk : kExitTolerance;
}

int cmd_simulate(const SchemeFlags& sf, double tau, long long trials, std::uint64_t seed) {
  if (trials < 1) throw ValidationError("--trials: must be at least 1");
  const auto scheme = sf.resolve_scheme();
  if (sf.p.empty() && sf.q.empty()) throw ValidationError("--p or --q is required");
  const auto report = [&](const std::vector<double>& probs, const char* flag, const char* label) {
    SchemeFlags::check_vector(probs, flag, scheme.weights.size());
    const auto mc =
        monte_carlo_tail(scheme, probs, tau, static_cast<std::uint64_t>(trials), seed);
    const double exact = tail_probability(weighted_sum_distribution(scheme, probs), tau);
    const double diff = mc.estimate - exact;
    const double z = mc.standard_error > 0.0 ? diff / mc.standard_error : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    std::cout << label << " estimate " << format_value(mc.estimate) << " se "
              << format_value(mc.standard_error) << " exact " << format_value(exact) << " z "
              << (std::isinf(z) ? std::string(z > 0 ? "inf" : "-inf") : format_fixed(z, 3))
              << "\n";
  };
  if (!sf.p.empty()) report(sf.p, "--p", "R");
  if (!sf.q.empty()) report(sf.q, "--q", "F");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::cout.imbue(std::locale::classic());
  CLI::App app{"Weighted-threshold deterrence coalitions: exact retaliation and false-alarm "
               "probabilities, ROC/AUC, Youden's J and the adversary's attack condition."};
  app.require_subcommand(1);

  SchemeFlags sf;
  GridFlags gf;
  std::string out;
  std::string svg;

  auto* roc = app.add_subcommand("roc", "Sweep thresholds, write roc-points CSV, print AUC");
  sf.attach(roc);
  gf.attach(roc);
  roc->add_option("--out", out, "roc-points CSV path (default $DETERRENCE_OUT_DIR/roc_points.csv)");
  roc->add_option("--svg", svg, "Also write an SVG plot to this path");

  SchemeFlags auc_sf;
  GridFlags auc_gf;
  auto* auc = app.add_subcommand("auc", "Print trapezoid and rank-statistic AUC");
  auc_sf.attach(auc);
  auc_gf.attach(auc);

  SchemeFlags y_sf;
  GridFlags y_gf;
  auto* youden_cmd = app.add_subcommand("youden", "Print the maximal Youden J and its threshold");
  y_sf.attach(youden_cmd);
  y_gf.attach(youden_cmd);

  SchemeFlags g_sf;
  std::optional<double> retaliation;
  std::optional<double> tau;
  GameParams params;
  auto* game = app.add_subcommand("game", "Evaluate the adversary's attack condition");
  game->add_option("--retaliation", retaliation, "Retaliation probability R");
  g_sf.attach(game);
  game->add_option("--tau", tau, "Threshold (when R is computed from a scheme)");
  game->add_option("--benefit", params.benefit, "Adversary benefit B")->capture_default_str();
  game->add_option("--cost", params.cost, "Adversary cost C")->capture_default_str();
  game->add_option("--prior", params.prior, "Prior Pr(T=1), reported only")->capture_default_str();

  std::string config_path;
  std::string batch_out;
  unsigned jobs = 0;
  auto* batch = app.add_subcommand("batch", "Run an experiment config file");
  batch->add_option("--config", config_path, "JSON config (comments allowed)")->required();
  batch->add_option("--out", batch_out, "Output directory (default $DETERRENCE_OUT_DIR)");
  batch->add_option("--jobs", jobs, "Worker threads (default: available parallelism)");

  std::string repro_out;
  int repro_samples = kDefaultSamples;
  unsigned repro_jobs = 0;
  auto* repro = app.add_subcommand("reproduce-paper",
                                   "Rebuild the AUC/J tables and figure datasets and compare them "
                                   "with the published values");
  repro->add_option("--out", repro_out, "Output directory (default $DETERRENCE_OUT_DIR)");
  repro->add_option("--samples", repro_samples, "Thresholds per sweep")->capture_default_str();
  repro->add_option("--jobs", repro_jobs, "Worker threads (default: available parallelism)");

  SchemeFlags s_sf;
  double s_tau = 0.0;
  long long trials = 100000;
  std::uint64_t seed = 42;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo check of a tail probability");
  s_sf.attach(simulate);
  simulate->add_option("--tau", s_tau, "Threshold")->required();
  simulate->add_option("--trials", trials, "Sampled vote vectors")->capture_default_str();
  simulate->add_option("--seed", seed, "Generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*roc) return cmd_roc(sf, gf, out, svg);
    if (*auc) return cmd_auc(auc_sf, auc_gf);
    if (*youden_cmd) return cmd_youden(y_sf, y_gf);
    if (*game) return cmd_game(g_sf, retaliation, tau, params);
    if (*batch) return cmd_batch(config_path, batch_out, jobs);
    if (*repro) return cmd_reproduce(repro_out, repro_samples, repro_jobs);
    if (*simulate) return cmd_simulate(s_sf, s_tau, trials, seed);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitValidation;
}
