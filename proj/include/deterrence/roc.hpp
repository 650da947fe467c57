#pragma once

// ROC analysis of a weighted threshold rule viewed as a binary classifier:
// threshold sweeps, (F(tau), R(tau)) curves, two AUC conventions, Youden's J
// and summary statistics over a battery of information environments.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deterrence/distribution.hpp"
#include "deterrence/model.hpp"

namespace deterrence {

// kReplication: `samples` evenly spaced thresholds over [lo, hi] (default
// [0, sum w]); the curve is not closed at (0,0).
// kExact: 0, every achievable sum, then sum w + 1; the curve runs from (1,1)
// to (0,0) and its trapezoid area equals the rank statistic.
enum class GridMode { kReplication, kExact };

std::string_view to_string(GridMode mode);
GridMode parse_grid_mode(std::string_view text);

inline constexpr int kDefaultSamples = 41;

struct ThresholdGrid {
  GridMode mode = GridMode::kReplication;
  int samples = kDefaultSamples;
  std::optional<double> lo;
  std::optional<double> hi;

  static ThresholdGrid replication(int samples = kDefaultSamples) {
    return {GridMode::kReplication, samples, std::nullopt, std::nullopt};
  }
  static ThresholdGrid exact() { return {GridMode::kExact, kDefaultSamples, std::nullopt, std::nullopt}; }

  void validate() const;
};

struct RocPoint {
  double fpr = 0.0;  // F(tau)
  double tpr = 0.0;  // R(tau)
  double tau = 0.0;
};

// Points sorted by ascending fpr, then tpr, then descending tau.
struct RocCurve {
  std::vector<RocPoint> points;
  GridMode mode = GridMode::kReplication;
  bool anchored = false;
};

struct AucStats {
  std::string scheme;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct YoudenResult {
  double j_star = 0.0;
  double tau_star = 0.0;
  std::vector<double> taus;      // sweep order
  std::vector<double> j_values;  // J(tau) = R(tau) - F(tau) per sweep point
};

struct JStats {
  std::string scheme;
  double mean_j = 0.0;
  double min_j = 0.0;
  double max_j = 0.0;
  double mean_tau_star = 0.0;
};

// Sum distributions of one scheme under both adversary types.
struct ConditionalDistributions {
  SumDistribution aggressive;  // T = 1, from p
  SumDistribution benign;      // T = 0, from q
};

ConditionalDistributions conditional_distributions(const WeightScheme& scheme,
                                                   const InfoEnvironment& env);

// Ascending thresholds for `scheme` under `grid`.
std::vector<double> sweep_thresholds(const WeightScheme& scheme, const ThresholdGrid& grid);

RocCurve roc_curve(const WeightScheme& scheme, const InfoEnvironment& env,
                   const ThresholdGrid& grid);

// Trapezoid area over the span of the curve's points only; no corners are
// added. Requires at least two points.
double auc_trapezoid(const RocCurve& curve);

// Pr(S1 > S0) + Pr(S1 = S0) / 2 for independent S1 ~ aggressive, S0 ~ benign.
double auc_exact(const SumDistribution& aggressive, const SumDistribution& benign);

// Maximum of J over the sweep. tau_star is the smallest maximizing threshold.
// J values closer than this are treated as equal when picking tau_star.
inline constexpr double kJTieTolerance = 1e-12;

YoudenResult youden(const WeightScheme& scheme, const InfoEnvironment& env,
                    const ThresholdGrid& grid);

// Mean/min/max of auc_trapezoid over a non-empty battery.
AucStats auc_statistics(const WeightScheme& scheme, std::span<const InfoEnvironment> envs,
                        const ThresholdGrid& grid);

// Mean/min/max of j_star and the (undiscretized) mean tau_star.
JStats j_statistics(const WeightScheme& scheme, std::span<const InfoEnvironment> envs,
                    const ThresholdGrid& grid);

}  // namespace deterrence
