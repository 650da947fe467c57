#include <cmath>
#include <vector>

#include "deterrence/distribution.hpp"
#include "deterrence/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace deterrence;

namespace {
const std::vector<double> kHighP{0.85, 0.85, 0.85, 0.85};
const std::vector<double> kHighQ{0.05, 0.05, 0.05, 0.05};
const WeightScheme kUnbiased{"unbiased", {1, 1, 1, 1}};
const WeightScheme kDictator{"dictator", {4, 0, 0, 0}};
}  // namespace

TEST_CASE("vote_vector_probability") {
  CHECK(vote_vector_probability(VoteVector({1, 1, 1, 1}), kHighP) ==
        doctest::Approx(0.52200625).epsilon(1e-14));
  CHECK(vote_vector_probability(VoteVector({0, 0, 0, 0}), kHighQ) ==
        doctest::Approx(0.81450625).epsilon(1e-14));
  CHECK(vote_vector_probability(VoteVector({1, 0}), std::vector<double>{1.0, 0.3}) ==
        doctest::Approx(0.7).epsilon(1e-15));
  CHECK_THROWS_AS(vote_vector_probability(VoteVector({1, 0}), kHighP), ValidationError);
}

TEST_CASE("dictator distribution has two support points") {
  const auto dist = weighted_sum_distribution(kDictator, kHighP);
  REQUIRE(dist.support.size() == 2);
  CHECK(dist.support[0] == 0.0);
  CHECK(dist.support[1] == 4.0);
  CHECK(dist.mass[0] == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(dist.mass[1] == doctest::Approx(0.85).epsilon(1e-14));
}

TEST_CASE("unbiased distribution matches the binomial pmf") {
  const auto dist = weighted_sum_distribution(kUnbiased, kHighP);
  REQUIRE(dist.support.size() == 5);
  for (int k = 0; k <= 4; ++k) {
    CHECK(dist.support[static_cast<std::size_t>(k)] == doctest::Approx(k));
    CHECK(std::abs(dist.mass[static_cast<std::size_t>(k)] - oracle::binomial_pmf(4, 0.85, k)) <=
          1e-15);
  }
  CHECK(dist.mass[4] == doctest::Approx(0.52200625).epsilon(1e-14));
}

TEST_CASE("certain votes give a point mass at the weight total") {
  const WeightScheme tech{"technology", {1.2, 1.1, 0.9, 0.8}};
  const auto dist = weighted_sum_distribution(tech, std::vector<double>{1, 1, 1, 1});
  REQUIRE(dist.support.size() == 1);
  CHECK(dist.support[0] == doctest::Approx(4.0));
  CHECK(dist.mass[0] == 1.0);
}

TEST_CASE("coinciding sums are merged") {
  // 1.3 + 0.7 == 0.7 + 1.3 == 2.0 in several float orderings.
  const WeightScheme bloc{"two-bloc", {1.3, 1.3, 0.7, 0.7}};
  const auto sums = achievable_sums(bloc);
  const std::vector<double> expected{0.0, 0.7, 1.3, 1.4, 2.0, 2.6, 2.7, 3.3, 4.0};
  REQUIRE(sums.size() == expected.size());
  for (std::size_t i = 0; i < sums.size(); ++i) CHECK(sums[i] == doctest::Approx(expected[i]));
}

TEST_CASE("enumeration limit") {
  const WeightScheme big{"big", std::vector<double>(25, 1.0)};
  CHECK_THROWS_WITH_AS(weighted_sum_distribution(big, std::vector<double>(25, 0.5)),
                       doctest::Contains("too large"), ValidationError);
  CHECK_THROWS_AS(weighted_sum_distribution(kUnbiased, std::vector<double>{0.5}),
                  ValidationError);
}

TEST_CASE("tail_probability examples") {
  const auto r = weighted_sum_distribution(kUnbiased, kHighP);
  const auto f = weighted_sum_distribution(kUnbiased, kHighQ, AdversaryType::kBenign);
  CHECK(tail_probability(r, 2.0) == doctest::Approx(0.98801875).epsilon(1e-14));
  CHECK(tail_probability(f, 2.0) == doctest::Approx(0.01401875).epsilon(1e-14));
  CHECK(std::abs(tail_probability(r, 2.0) - oracle::tail(kUnbiased.weights, kHighP, 2.0)) <= 1e-15);
  CHECK(tail_probability(r, 0.0) == 1.0);
  CHECK(tail_probability(r, -3.0) == 1.0);
  CHECK(tail_probability(r, 4.5) == 0.0);
  // tau exactly at an achievable sum selects that sum.
  const auto d = weighted_sum_distribution(kDictator, kHighP);
  CHECK(tail_probability(d, 4.0) == doctest::Approx(0.85).epsilon(1e-14));
  CHECK(tail_probability(d, 4.0 + 1e-6) == 0.0);
}

TEST_CASE("binomial_tail") {
  CHECK(binomial_tail(4, 0.85, 4) == doctest::Approx(0.52200625).epsilon(1e-14));
  CHECK(binomial_tail(4, 0.05, 1) == doctest::Approx(0.18549375).epsilon(1e-14));
  CHECK(binomial_tail(4, 0.5, 0) == 1.0);
  CHECK_THROWS_AS(binomial_tail(4, 0.5, 5), ValidationError);
  CHECK_THROWS_AS(binomial_tail(4, 0.5, -1), ValidationError);
  for (int k = 1; k <= 4; ++k) {
    double oracle_tail = 0.0;
    for (int j = k; j <= 4; ++j) oracle_tail += oracle::binomial_pmf(4, 0.37, j);
    CHECK(std::abs(binomial_tail(4, 0.37, k) - oracle_tail) <= 1e-15);
  }
}

TEST_CASE("monte_carlo_tail") {
  SUBCASE("dictator at tau 4") {
    const auto mc = monte_carlo_tail(kDictator, kHighP, 4.0, 1'000'000, 42);
    CHECK(mc.trials == 1'000'000);
    CHECK(std::abs(mc.estimate - 0.85) <= 3.0 * mc.standard_error);
  }
  SUBCASE("unbiased at tau 2") {
    const auto mc = monte_carlo_tail(kUnbiased, kHighP, 2.0, 1'000'000, 7);
    CHECK(std::abs(mc.estimate - 0.98801875) <= 3.0 * mc.standard_error);
  }
  SUBCASE("nobody votes") {
    const auto mc = monte_carlo_tail(kUnbiased, std::vector<double>{0, 0, 0, 0}, 0.5, 100, 1);
    CHECK(mc.estimate == 0.0);
    CHECK(mc.standard_error == 0.0);
  }
  SUBCASE("deterministic for a seed") {
    const auto a = monte_carlo_tail(kUnbiased, kHighQ, 1.0, 5000, 99);
    const auto b = monte_carlo_tail(kUnbiased, kHighQ, 1.0, 5000, 99);
    const auto c = monte_carlo_tail(kUnbiased, kHighQ, 1.0, 5000, 100);
    CHECK(a.estimate == b.estimate);
    CHECK(a.estimate != c.estimate);
  }
  SUBCASE("zero trials") {
    CHECK_THROWS_AS(monte_carlo_tail(kUnbiased, kHighP, 1.0, 0, 1), ValidationError);
  }
}

TEST_CASE("monte carlo generator is platform independent") {
  // 46 of 64 hits, from an independent mt19937_64 reimplementation using the
  // same top-53-bit uniforms and member order.
  const auto mc = monte_carlo_tail(kUnbiased, std::vector<double>{0.5, 0.5, 0.5, 0.5}, 2.0, 64,
                                   2024);
  CHECK(mc.estimate == 46.0 / 64.0);
}
