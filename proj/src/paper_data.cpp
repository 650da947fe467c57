#include "deterrence/paper_data.hpp"

#include <algorithm>

#include "deterrence/errors.hpp"

namespace deterrence {

const std::vector<InfoEnvironment>& paper_environments() {
  static const std::vector<InfoEnvironment> envs = {
      {"env01", {0.85, 0.85, 0.85, 0.85}, {0.05, 0.05, 0.05, 0.05}},
      {"env02", {0.75, 0.75, 0.75, 0.75}, {0.10, 0.10, 0.10, 0.10}},
      {"env03", {0.60, 0.60, 0.60, 0.60}, {0.20, 0.20, 0.20, 0.20}},
      {"env04", {0.90, 0.80, 0.70, 0.60}, {0.05, 0.10, 0.15, 0.20}},
      {"env05", {0.85, 0.70, 0.55, 0.40}, {0.05, 0.10, 0.20, 0.30}},
      {"env06", {0.60, 0.65, 0.70, 0.75}, {0.25, 0.20, 0.15, 0.10}},
      {"env07", {0.55, 0.65, 0.75, 0.85}, {0.35, 0.25, 0.15, 0.05}},
      {"env08", {0.50, 0.60, 0.75, 0.90}, {0.40, 0.30, 0.15, 0.05}},
      {"env09", {0.55, 0.55, 0.55, 0.55}, {0.45, 0.45, 0.45, 0.45}},
      {"env10", {0.85, 0.55, 0.80, 0.50}, {0.05, 0.25, 0.10, 0.30}},
      {"env11", {0.90, 0.88, 0.60, 0.50}, {0.05, 0.06, 0.25, 0.30}},
      {"env12", {0.72, 0.58, 0.81, 0.63}, {0.11, 0.22, 0.07, 0.19}},
      {"env13", {0.78, 0.82, 0.79, 0.40}, {0.12, 0.10, 0.11, 0.35}},
      {"env14", {0.88, 0.55, 0.70, 0.83}, {0.06, 0.28, 0.18, 0.10}},
  };
  return envs;
}

const InfoEnvironment& find_paper_environment(std::string_view id) {
  const auto& envs = paper_environments();
  const auto it = std::find_if(envs.begin(), envs.end(),
                               [&](const InfoEnvironment& e) { return e.id == id; });
  if (it == envs.end()) {
    throw ValidationError("unknown environment '" + std::string(id) + "' (env01..env14)");
  }
  return *it;
}

std::vector<InfoEnvironment> conclusion_battery() {
  std::vector<InfoEnvironment> out;
  for (const auto& env : paper_environments()) {
    if (env.id != kOutlierEnvironmentId) out.push_back(env);
  }
  return out;
}

const std::vector<FeaturedEnvironment>& featured_environments() {
  static const std::vector<FeaturedEnvironment> featured = {
      {"fig1_high_high", "env01", "High accuracy and resolve"},
      {"fig2_low_low", "env03", "Low accuracy and resolve"},
      {"fig3_decreasing_p", "env05", "Decreasing p"},
      {"fig4_increasing_p", "env08", "Increasing p"},
  };
  return featured;
}

const std::vector<PublishedAucRow>& published_auc_table() {
  static const std::vector<PublishedAucRow> rows = {
      {"unbiased", 0.932, 0.606, 0.998},     {"dictator", 0.719, 0.426, 0.903},
      {"veto", 0.902, 0.594, 0.991},         {"technology", 0.931, 0.606, 0.998},
      {"frontline", 0.922, 0.602, 0.996},    {"geographical", 0.914, 0.600, 0.988},
      {"two-bloc", 0.929, 0.606, 0.998},
  };
  return rows;
}

const std::vector<PublishedJRow>& published_j_table() {
  static const std::vector<PublishedJRow> rows = {
      {"unbiased", 0.807, 0.150, 0.974, 1.17},     {"dictator", 0.566, 0.100, 0.850, 0.10},
      {"veto", 0.705, 0.125, 0.934, 0.84},         {"technology", 0.802, 0.150, 0.974, 1.44},
      {"frontline", 0.757, 0.149, 0.934, 1.19},    {"geographical", 0.760, 0.149, 0.946, 1.48},
      {"two-bloc", 0.807, 0.150, 0.974, 1.47},
  };
  return rows;
}

}  // namespace deterrence
