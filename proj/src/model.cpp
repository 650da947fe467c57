#include "deterrence/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "deterrence/errors.hpp"

namespace deterrence {

CoalitionSize::CoalitionSize(std::size_t n) : n_(n) {
  if (n == 0) throw ValidationError("coalition must have at least one member");
}

double WeightScheme::total() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

void WeightScheme::validate() const {
  if (weights.empty()) {
    throw ValidationError("weight scheme '" + name + "' has no weights");
  }
  bool any_positive = false;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!std::isfinite(w) || w < 0.0) {
      std::ostringstream msg;
      msg << "weight scheme '" << name << "': weight at index " << i
          << " must be a finite non-negative number";
      throw ValidationError(msg.str());
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) {
    throw ValidationError("weight scheme '" + name + "' has no positive weight");
  }
}

VoteVector::VoteVector(std::vector<std::uint8_t> votes) : votes_(std::move(votes)) {
  for (std::size_t i = 0; i < votes_.size(); ++i) {
    if (votes_[i] > 1) {
      throw ValidationError("vote at index " + std::to_string(i) + " is not 0 or 1");
    }
  }
}

VoteVector VoteVector::from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<std::uint8_t> votes(n);
  for (std::size_t i = 0; i < n; ++i) votes[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
  return VoteVector(std::move(votes));
}

void GameParams::validate() const {
  if (!(benefit > 0.0) || !std::isfinite(benefit)) {
    throw ValidationError("benefit must be a positive number");
  }
  if (!(cost > 0.0) || !std::isfinite(cost)) {
    throw ValidationError("cost must be a positive number");
  }
  if (!(prior >= 0.0 && prior <= 1.0)) {
    throw ValidationError("prior must lie in [0, 1]");
  }
}

void validate_probabilities(std::span<const double> probs, std::string_view label) {
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] >= 0.0 && probs[i] <= 1.0)) {
      std::ostringstream msg;
      msg << label << ": probability at index " << i << " (" << probs[i]
          << ") is outside [0, 1]";
      throw ValidationError(msg.str());
    }
  }
}

const InfoEnvironment& validate_environment(const InfoEnvironment& env, CoalitionSize n) {
  const auto check_length = [&](const std::vector<double>& v, std::string_view label) {
    if (v.size() != n.value()) {
      std::ostringstream msg;
      msg << "environment '" << env.id << "': " << label << " has length " << v.size()
          << " but the coalition has " << n.value() << " members";
      throw ValidationError(msg.str());
    }
  };
  check_length(env.p, "p");
  check_length(env.q, "q");
  validate_probabilities(env.p, "environment '" + env.id + "' p");
  validate_probabilities(env.q, "environment '" + env.id + "' q");
  return env;
}

const std::vector<WeightScheme>& paper_schemes() {
  static const std::vector<WeightScheme> schemes = {
      {"unbiased", {1.0, 1.0, 1.0, 1.0}},
      {"dictator", {4.0, 0.0, 0.0, 0.0}},
      {"veto", {2.5, 0.5, 0.5, 0.5}},
      {"technology", {1.2, 1.1, 0.9, 0.8}},
      {"frontline", {1.6, 0.8, 0.8, 0.8}},
      {"geographical", {1.6, 1.2, 0.8, 0.4}},
      {"two-bloc", {1.3, 1.3, 0.7, 0.7}},
  };
  return schemes;
}

const WeightScheme& find_paper_scheme(std::string_view name) {
  const auto& schemes = paper_schemes();
  const auto it = std::find_if(schemes.begin(), schemes.end(),
                               [&](const WeightScheme& s) { return s.name == name; });
  if (it == schemes.end()) {
    std::string known;
    for (const auto& s : schemes) known += (known.empty() ? "" : ", ") + s.name;
    throw ValidationError("unknown scheme '" + std::string(name) + "' (known: " + known + ")");
  }
  return *it;
}

WeightScheme normalize_scheme(std::span<const double> weights, double target_sum,
                              std::string name) {
  if (!(target_sum > 0.0) || !std::isfinite(target_sum)) {
    throw ValidationError("target sum must be a positive number");
  }
  WeightScheme input{std::move(name), {weights.begin(), weights.end()}};
  input.validate();
  const double scale = target_sum / input.total();
  for (double& w : input.weights) w *= scale;
  return input;
}

}  // namespace deterrence
