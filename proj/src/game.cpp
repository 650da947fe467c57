#include "deterrence/game.hpp"

#include <limits>

#include "deterrence/distribution.hpp"
#include "deterrence/errors.hpp"
#include "deterrence/roc.hpp"

namespace deterrence {
namespace {

void check_probability(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw ValidationError("retaliation probability must lie in [0, 1]");
  }
}

}  // namespace

double expected_attack_payoff(double retaliation_prob, const GameParams& params) {
  check_probability(retaliation_prob);
  params.validate();
  return (1.0 - retaliation_prob) * params.benefit - retaliation_prob * params.cost;
}

AttackAssessment assess_attack(double retaliation_prob, const GameParams& params) {
  AttackAssessment out;
  out.expected_payoff = expected_attack_payoff(retaliation_prob, params);
  out.retaliation_prob = retaliation_prob;
  out.deterrence_threshold = params.benefit / (params.benefit + params.cost);
  out.attacks = retaliation_prob < out.deterrence_threshold;
  return out;
}

double breakeven_benefit_ratio(double retaliation_prob) {
  check_probability(retaliation_prob);
  if (retaliation_prob == 1.0) return std::numeric_limits<double>::infinity();
  return retaliation_prob / (1.0 - retaliation_prob);
}

AverageRates average_rates(const WeightScheme& scheme, double tau,
                           std::span<const InfoEnvironment> envs) {
  if (envs.empty()) throw ValidationError("average rates need at least one environment");
  AverageRates rates;
  for (const auto& env : envs) {
    const auto dists = conditional_distributions(scheme, env);
    rates.mean_retaliation += tail_probability(dists.aggressive, tau);
    rates.mean_false_alarm += tail_probability(dists.benign, tau);
  }
  const auto count = static_cast<double>(envs.size());
  rates.mean_retaliation /= count;
  rates.mean_false_alarm /= count;
  return rates;
}

}  // namespace deterrence
