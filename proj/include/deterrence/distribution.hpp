#pragma once

// Exact distribution of the weighted vote sum S = sum_i w_i v_i when each
// vote is an independent Bernoulli draw, plus the equal-weight binomial closed
// form and a seeded Monte Carlo estimator used as an independent oracle.

#include <cstdint>
#include <span>
#include <vector>

#include "deterrence/model.hpp"

namespace deterrence {

// Two weighted sums closer than this are the same support point.
inline constexpr double kSumMergeTolerance = 1e-9;
// "S >= tau" is evaluated as S >= tau - kThresholdTolerance.
inline constexpr double kThresholdTolerance = 1e-9;

enum class AdversaryType : int { kBenign = 0, kAggressive = 1 };

// Pr(S = s | T) over the distinct achievable sums, support ascending.
struct SumDistribution {
  std::vector<double> support;
  std::vector<double> mass;
  AdversaryType type = AdversaryType::kAggressive;

  double total_mass() const;
};

// prod_i probs_i^{v_i} (1 - probs_i)^{1 - v_i}
double vote_vector_probability(const VoteVector& votes, std::span<const double> probs);

// Enumerates all 2^n vote vectors (bit i of the index = member i) and merges
// equal weighted sums; zero-mass sums are dropped from the support. Throws
// ValidationError for length mismatch, invalid weights/probabilities or
// n > kMaxEnumerationMembers.
SumDistribution weighted_sum_distribution(const WeightScheme& scheme,
                                          std::span<const double> probs,
                                          AdversaryType type = AdversaryType::kAggressive);

// Every distinct value sum_i w_i v_i can take, ascending, merged as above.
std::vector<double> achievable_sums(const WeightScheme& scheme);

// Pr(S >= tau). R(tau) when dist conditions on T = 1, F(tau) for T = 0.
double tail_probability(const SumDistribution& dist, double tau);

// sum_{k=tau}^{n} C(n,k) prob^k (1-prob)^{n-k}, for 0 <= tau <= n.
double binomial_tail(int n, double prob, int tau);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t trials = 0;
};

// Fraction of `trials` sampled vote vectors with weighted sum >= tau.
// Randomness comes from std::mt19937_64 seeded with `seed`; uniforms are built
// from the top 53 bits of each draw so results are identical on every
// platform. standard_error = sqrt(est (1 - est) / trials).
MonteCarloEstimate monte_carlo_tail(const WeightScheme& scheme, std::span<const double> probs,
                                    double tau, std::uint64_t trials, std::uint64_t seed);

}  // namespace deterrence
