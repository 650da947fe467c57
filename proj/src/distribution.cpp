#include "deterrence/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "deterrence/errors.hpp"

namespace deterrence {
namespace {

void check_inputs(const WeightScheme& scheme, std::span<const double> probs) {
  scheme.validate();
  if (probs.size() != scheme.weights.size()) {
    std::ostringstream msg;
    msg << "scheme '" << scheme.name << "' has " << scheme.weights.size()
        << " members but " << probs.size() << " probabilities were given";
    throw ValidationError(msg.str());
  }
  validate_probabilities(probs, "probabilities");
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double SumDistribution::total_mass() const {
  return std::accumulate(mass.begin(), mass.end(), 0.0);
}

double vote_vector_probability(const VoteVector& votes, std::span<const double> probs) {
  if (votes.size() != probs.size()) {
    throw ValidationError("vote vector has " + std::to_string(votes.size()) +
                          " entries but " + std::to_string(probs.size()) +
                          " probabilities were given");
  }
  double product = 1.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    product *= votes[i] ? probs[i] : 1.0 - probs[i];
  }
  return product;
}

std::vector<double> achievable_sums(const WeightScheme& scheme) {
  const std::vector<double> half(scheme.weights.size(), 0.5);
  return weighted_sum_distribution(scheme, half).support;
}

SumDistribution weighted_sum_distribution(const WeightScheme& scheme,
                                          std::span<const double> probs,
                                          AdversaryType type) {
  check_inputs(scheme, probs);
  const std::size_t n = scheme.weights.size();
  if (n > kMaxEnumerationMembers) {
    throw ValidationError("coalition of " + std::to_string(n) +
                          " members is too large to enumerate (limit " +
                          std::to_string(kMaxEnumerationMembers) + ")");
  }

  // Tables indexed by vote mask, grown one member at a time.
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> sums(count, 0.0);
  std::vector<double> probability(count, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t mask = 0; mask < half; ++mask) {
      sums[mask | half] = sums[mask] + scheme.weights[i];
      probability[mask | half] = probability[mask] * probs[i];
      probability[mask] *= 1.0 - probs[i];
    }
  }

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sums[a] < sums[b]; });

  SumDistribution dist;
  dist.type = type;
  double cluster_start = 0.0;
  bool open = false;
  for (const std::size_t mask : order) {
    if (!open || sums[mask] - cluster_start > kSumMergeTolerance) {
      cluster_start = sums[mask];
      open = true;
      dist.support.push_back(sums[mask]);
      dist.mass.push_back(probability[mask]);
    } else {
      dist.mass.back() += probability[mask];
    }
  }
  // Sums that can only arise from a certain-to-fail vote carry no mass.
  std::size_t kept = 0;
  for (std::size_t i = 0; i < dist.support.size(); ++i) {
    if (dist.mass[i] > 0.0) {
      dist.support[kept] = dist.support[i];
      dist.mass[kept] = dist.mass[i];
      ++kept;
    }
  }
  dist.support.resize(kept);
  dist.mass.resize(kept);
  return dist;
}

double tail_probability(const SumDistribution& dist, double tau) {
  const double cutoff = tau - kThresholdTolerance;
  const auto first = std::lower_bound(dist.support.begin(), dist.support.end(), cutoff);
  if (first == dist.support.begin()) return 1.0;
  double tail = 0.0;
  for (auto i = static_cast<std::size_t>(first - dist.support.begin()); i < dist.mass.size();
       ++i) {
    tail += dist.mass[i];
  }
  return std::min(tail, 1.0);
}

double binomial_tail(int n, double prob, int tau) {
  if (n < 1) throw ValidationError("binomial_tail needs n >= 1");
  if (tau < 0 || tau > n) {
    throw ValidationError("threshold " + std::to_string(tau) + " outside [0, " +
                          std::to_string(n) + "]");
  }
  if (!(prob >= 0.0 && prob <= 1.0)) throw ValidationError("probability outside [0, 1]");
  if (tau == 0) return 1.0;

  double tail = 0.0;
  double choose = 1.0;  // C(n, k), advanced incrementally
  for (int k = 0; k <= n; ++k) {
    if (k > 0) choose = choose * (n - k + 1) / k;
    if (k >= tau) tail += choose * std::pow(prob, k) * std::pow(1.0 - prob, n - k);
  }
  return tail;
}

MonteCarloEstimate monte_carlo_tail(const WeightScheme& scheme, std::span<const double> probs,
                                    double tau, std::uint64_t trials, std::uint64_t seed) {
  check_inputs(scheme, probs);
  if (trials == 0) throw ValidationError("trials must be at least 1");

  std::mt19937_64 rng(seed);
  const double cutoff = tau - kThresholdTolerance;
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    double sum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (uniform01(rng) < probs[i]) sum += scheme.weights[i];
    }
    if (sum >= cutoff) ++hits;
  }

  MonteCarloEstimate result;
  result.trials = trials;
  result.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  result.standard_error =
      std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(trials));
  return result;
}

}  // namespace deterrence
