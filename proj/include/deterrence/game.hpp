#pragma once

// Attack decision of an aggressive adversary facing a coalition that
// retaliates with probability R: it attacks iff (1 - R) B - R C > 0, i.e.
// iff R < B / (B + C).

#include <span>

#include "deterrence/model.hpp"

namespace deterrence {

struct AttackAssessment {
  double expected_payoff = 0.0;
  bool attacks = false;
  double deterrence_threshold = 0.0;  // B / (B + C)
  double retaliation_prob = 0.0;
};

// (1 - R) B - R C
double expected_attack_payoff(double retaliation_prob, const GameParams& params);

// R exactly at the deterrence threshold counts as deterred.
AttackAssessment assess_attack(double retaliation_prob, const GameParams& params);

// R / (1 - R): the benefit-to-cost ratio above which attacking pays.
// +infinity when R = 1.
double breakeven_benefit_ratio(double retaliation_prob);

struct AverageRates {
  double mean_retaliation = 0.0;   // mean R(tau)
  double mean_false_alarm = 0.0;   // mean F(tau)
};

AverageRates average_rates(const WeightScheme& scheme, double tau,
                           std::span<const InfoEnvironment> envs);

}  // namespace deterrence
