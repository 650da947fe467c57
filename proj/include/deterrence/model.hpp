#pragma once

// Domain types for a coalition that decides on retaliation with a weighted
// threshold vote: member weights, per-member signal probabilities under each
// adversary type, vote vectors and the adversary's payoff parameters.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deterrence {

// Largest coalition for which the 2^n vote-vector table is built.
inline constexpr std::size_t kMaxEnumerationMembers = 24;

// Number of coalition members (n >= 1).
class CoalitionSize {
 public:
  explicit CoalitionSize(std::size_t n);

  std::size_t value() const { return n_; }
  bool enumerable() const { return n_ <= kMaxEnumerationMembers; }

  friend bool operator==(CoalitionSize, CoalitionSize) = default;

 private:
  std::size_t n_;
};

// A named weight vector w. The aggregate decision is "retaliate" when
// sum_i w_i v_i >= tau; the threshold itself lives in ThresholdGrid.
struct WeightScheme {
  std::string name;
  std::vector<double> weights;

  CoalitionSize size() const { return CoalitionSize(weights.size()); }
  double total() const;

  // Throws ValidationError unless every weight is finite and >= 0 with at
  // least one strictly positive.
  void validate() const;

  friend bool operator==(const WeightScheme&, const WeightScheme&) = default;
};

// One information environment: p_i = Pr(s_i = 1 | T = 1) (resolve) and
// q_i = Pr(s_i = 1 | T = 0) (false alarm).
struct InfoEnvironment {
  std::string id;
  std::vector<double> p;
  std::vector<double> q;

  friend bool operator==(const InfoEnvironment&, const InfoEnvironment&) = default;
};

// Member votes, each 0 or 1. Votes equal signals (truthful voting).
class VoteVector {
 public:
  VoteVector() = default;
  explicit VoteVector(std::vector<std::uint8_t> votes);
  // Bit i of `mask` is member i's vote.
  static VoteVector from_mask(std::uint64_t mask, std::size_t n);

  std::span<const std::uint8_t> votes() const { return votes_; }
  std::size_t size() const { return votes_.size(); }
  bool operator[](std::size_t i) const { return votes_[i] != 0; }

 private:
  std::vector<std::uint8_t> votes_;
};

// Adversary benefit B (attack, no retaliation), cost C (retaliation) and the
// coalition's prior pi = Pr(T = 1). The prior is carried for reporting only;
// the attack condition does not depend on it.
struct GameParams {
  double benefit = 1.0;
  double cost = 1.0;
  double prior = 0.5;

  void validate() const;
};

// Checks lengths against n and every probability against [0, 1]. Errors name
// the offending vector and index. Returns the environment unchanged.
const InfoEnvironment& validate_environment(const InfoEnvironment& env, CoalitionSize n);

// Validates a single probability vector (used for p or q on their own).
void validate_probabilities(std::span<const double> probs, std::string_view label);

// The seven four-member schemes, in order: unbiased, dictator, veto,
// technology, frontline, geographical, two-bloc. Each sums to 4.
const std::vector<WeightScheme>& paper_schemes();

// Looks up one of paper_schemes() by name; throws ValidationError otherwise.
const WeightScheme& find_paper_scheme(std::string_view name);

// Rescales non-negative weights so that they sum to target_sum.
WeightScheme normalize_scheme(std::span<const double> weights, double target_sum,
                              std::string name = "custom");

}  // namespace deterrence
