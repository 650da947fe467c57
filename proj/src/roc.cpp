#include "deterrence/roc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "deterrence/errors.hpp"

namespace deterrence {

std::string_view to_string(GridMode mode) {
  return mode == GridMode::kExact ? "exact" : "replication";
}

GridMode parse_grid_mode(std::string_view text) {
  if (text == "replication") return GridMode::kReplication;
  if (text == "exact") return GridMode::kExact;
  throw ValidationError("unknown grid mode '" + std::string(text) +
                        "' (expected replication or exact)");
}

void ThresholdGrid::validate() const {
  if (mode == GridMode::kReplication && samples < 2) {
    throw ValidationError("replication grid needs at least 2 samples");
  }
  if ((lo && !std::isfinite(*lo)) || (hi && !std::isfinite(*hi))) {
    throw ValidationError("grid bounds must be finite");
  }
  if (lo && hi && *lo > *hi) throw ValidationError("grid lower bound exceeds upper bound");
}

ConditionalDistributions conditional_distributions(const WeightScheme& scheme,
                                                   const InfoEnvironment& env) {
  scheme.validate();
  validate_environment(env, scheme.size());
  return {weighted_sum_distribution(scheme, env.p, AdversaryType::kAggressive),
          weighted_sum_distribution(scheme, env.q, AdversaryType::kBenign)};
}

std::vector<double> sweep_thresholds(const WeightScheme& scheme, const ThresholdGrid& grid) {
  grid.validate();
  scheme.validate();
  const double total = scheme.total();

  if (grid.mode == GridMode::kExact) {
    std::vector<double> taus{0.0};
    for (const double s : achievable_sums(scheme)) {
      if (s - taus.back() > kSumMergeTolerance) taus.push_back(s);
    }
    taus.push_back(total + 1.0);
    return taus;
  }

  const double lo = grid.lo.value_or(0.0);
  const double hi = grid.hi.value_or(total);
  if (lo > hi) throw ValidationError("grid lower bound exceeds upper bound");
  std::vector<double> taus(static_cast<std::size_t>(grid.samples));
  const double last = static_cast<double>(grid.samples - 1);
  for (int i = 0; i < grid.samples; ++i) {
    taus[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / last;
  }
  taus.back() = hi;
  return taus;
}

namespace {

RocCurve build_curve(const ConditionalDistributions& dists, std::span<const double> taus,
                     GridMode mode) {
  RocCurve curve;
  curve.mode = mode;
  curve.anchored = mode == GridMode::kExact;
  curve.points.reserve(taus.size());
  for (const double tau : taus) {
    curve.points.push_back(
        {tail_probability(dists.benign, tau), tail_probability(dists.aggressive, tau), tau});
  }
  std::sort(curve.points.begin(), curve.points.end(), [](const RocPoint& a, const RocPoint& b) {
    if (a.fpr != b.fpr) return a.fpr < b.fpr;
    if (a.tpr != b.tpr) return a.tpr < b.tpr;
    return a.tau > b.tau;
  });
  return curve;
}

}  // namespace

RocCurve roc_curve(const WeightScheme& scheme, const InfoEnvironment& env,
                   const ThresholdGrid& grid) {
  const auto dists = conditional_distributions(scheme, env);
  const auto taus = sweep_thresholds(scheme, grid);
  return build_curve(dists, taus, grid.mode);
}

double auc_trapezoid(const RocCurve& curve) {
  if (curve.points.size() < 2) {
    throw ValidationError("AUC needs at least two ROC points");
  }
  std::vector<RocPoint> pts = curve.points;
  std::sort(pts.begin(), pts.end(), [](const RocPoint& a, const RocPoint& b) {
    return a.fpr != b.fpr ? a.fpr < b.fpr : a.tpr < b.tpr;
  });
  double area = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    area += (pts[i].fpr - pts[i - 1].fpr) * (pts[i].tpr + pts[i - 1].tpr) / 2.0;
  }
  return area;
}

double auc_exact(const SumDistribution& aggressive, const SumDistribution& benign) {
  double above = 0.0;
  double tied = 0.0;
  for (std::size_t i = 0; i < aggressive.support.size(); ++i) {
    for (std::size_t j = 0; j < benign.support.size(); ++j) {
      const double diff = aggressive.support[i] - benign.support[j];
      const double joint = aggressive.mass[i] * benign.mass[j];
      if (std::abs(diff) <= kSumMergeTolerance) {
        tied += joint;
      } else if (diff > 0.0) {
        above += joint;
      }
    }
  }
  return above + 0.5 * tied;
}

YoudenResult youden(const WeightScheme& scheme, const InfoEnvironment& env,
                    const ThresholdGrid& grid) {
  const auto dists = conditional_distributions(scheme, env);
  YoudenResult result;
  result.taus = sweep_thresholds(scheme, grid);
  result.j_values.reserve(result.taus.size());
  result.j_star = -std::numeric_limits<double>::infinity();
  for (const double tau : result.taus) {
    const double j = tail_probability(dists.aggressive, tau) - tail_probability(dists.benign, tau);
    result.j_values.push_back(j);
    // Ascending tau; values within kJTieTolerance count as ties, so the
    // smallest maximizer is kept even when rounding differs between plateaus.
    if (j > result.j_star + kJTieTolerance) {
      result.j_star = j;
      result.tau_star = tau;
    }
  }
  return result;
}

AucStats auc_statistics(const WeightScheme& scheme, std::span<const InfoEnvironment> envs,
                        const ThresholdGrid& grid) {
  if (envs.empty()) throw ValidationError("AUC statistics need at least one environment");
  AucStats stats{scheme.name, 0.0, std::numeric_limits<double>::infinity(),
                 -std::numeric_limits<double>::infinity()};
  for (const auto& env : envs) {
    const double auc = auc_trapezoid(roc_curve(scheme, env, grid));
    stats.mean += auc;
    stats.min = std::min(stats.min, auc);
    stats.max = std::max(stats.max, auc);
  }
  stats.mean /= static_cast<double>(envs.size());
  return stats;
}

JStats j_statistics(const WeightScheme& scheme, std::span<const InfoEnvironment> envs,
                    const ThresholdGrid& grid) {
  if (envs.empty()) throw ValidationError("J statistics need at least one environment");
  JStats stats{scheme.name, 0.0, std::numeric_limits<double>::infinity(),
               -std::numeric_limits<double>::infinity(), 0.0};
  for (const auto& env : envs) {
    const auto result = youden(scheme, env, grid);
    stats.mean_j += result.j_star;
    stats.min_j = std::min(stats.min_j, result.j_star);
    stats.max_j = std::max(stats.max_j, result.j_star);
    stats.mean_tau_star += result.tau_star;
  }
  const auto count = static_cast<double>(envs.size());
  stats.mean_j /= count;
  stats.mean_tau_star /= count;
  return stats;
}

}  // namespace deterrence
