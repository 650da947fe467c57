#pragma once

// Built-in four-member dataset: the fourteen information environments and
// the published AUC / Youden statistics they were summarized into.

#include <string>
#include <string_view>
#include <vector>

#include "deterrence/model.hpp"

namespace deterrence {

// The fourteen (p, q) environments, ids "env01".."env14".
const std::vector<InfoEnvironment>& paper_environments();

const InfoEnvironment& find_paper_environment(std::string_view id);

// Id of the near-random environment (p = 0.55, q = 0.45 for every member).
inline constexpr std::string_view kOutlierEnvironmentId = "env09";

// paper_environments() without the near-random outlier (13 environments).
std::vector<InfoEnvironment> conclusion_battery();

// Environments behind the four featured single-environment ROC figures.
struct FeaturedEnvironment {
  std::string figure;  // file stem, e.g. "fig1_high_high"
  std::string env_id;
  std::string title;
};
const std::vector<FeaturedEnvironment>& featured_environments();

struct PublishedAucRow {
  std::string scheme;
  double mean;
  double min;
  double max;
};

struct PublishedJRow {
  std::string scheme;
  double mean_j;
  double min_j;
  double max_j;
  double mean_tau_star;
};

const std::vector<PublishedAucRow>& published_auc_table();
const std::vector<PublishedJRow>& published_j_table();

// Headline single-environment values (high resolve, high accuracy).
inline constexpr double kPublishedDictatorHighHighAuc = 0.879;
inline constexpr double kPublishedBestHighHighAuc = 0.998;  // unbiased, technology, two-bloc

// Averages for the unbiased scheme at tau = 2 over conclusion_battery().
inline constexpr double kPublishedMeanRetaliation = 0.92;
inline constexpr double kPublishedMeanFalseAlarm = 0.12;
inline constexpr double kPublishedBreakevenRatio = 11.5;
inline constexpr double kConclusionThreshold = 2.0;

// Comparison tolerances against the published numbers.
inline constexpr double kAucTolerance = 0.01;
inline constexpr double kJTolerance = 0.01;
inline constexpr double kTauStarTolerance = 0.15;
inline constexpr double kHeadlineAucTolerance = 0.002;
inline constexpr double kAverageRateTolerance = 0.01;

}  // namespace deterrence
