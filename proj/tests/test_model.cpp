#include <cmath>
#include <numeric>

#include "deterrence/errors.hpp"
#include "deterrence/model.hpp"
#include "doctest.h"

using namespace deterrence;

TEST_CASE("validate_environment accepts a well-formed environment") {
  const InfoEnvironment env{"env01", {0.85, 0.85, 0.85, 0.85}, {0.05, 0.05, 0.05, 0.05}};
  const auto& out = validate_environment(env, CoalitionSize(4));
  CHECK(&out == &env);
  // Idempotent: validating the result again changes nothing.
  CHECK(validate_environment(out, CoalitionSize(4)) == env);
}

TEST_CASE("validate_environment reports length mismatch") {
  const InfoEnvironment env{"short", {0.5}, {0.5}};
  CHECK_THROWS_WITH_AS(validate_environment(env, CoalitionSize(4)),
                       doctest::Contains("p has length 1"), ValidationError);
}

TEST_CASE("validate_environment reports the offending index") {
  const InfoEnvironment env{"bad", {1.2, 0, 0, 0}, {0, 0, 0, 0}};
  CHECK_THROWS_WITH_AS(validate_environment(env, CoalitionSize(4)),
                       doctest::Contains("index 0"), ValidationError);
  const InfoEnvironment env_q{"bad", {0, 0, 0, 0}, {0, 0, -0.1, 0}};
  CHECK_THROWS_WITH_AS(validate_environment(env_q, CoalitionSize(4)),
                       doctest::Contains("q: probability at index 2"), ValidationError);
}

TEST_CASE("coalition size must be positive") {
  CHECK_THROWS_AS(CoalitionSize(0), ValidationError);
  CHECK(CoalitionSize(24).enumerable());
  CHECK_FALSE(CoalitionSize(25).enumerable());
}

TEST_CASE("built-in schemes") {
  const auto& schemes = paper_schemes();
  REQUIRE(schemes.size() == 7);
  CHECK(schemes[0].name == "unbiased");
  CHECK(schemes[0].weights == std::vector<double>{1, 1, 1, 1});
  CHECK(find_paper_scheme("dictator").weights == std::vector<double>{4, 0, 0, 0});
  CHECK(find_paper_scheme("veto").weights == std::vector<double>{2.5, 0.5, 0.5, 0.5});
  CHECK(find_paper_scheme("technology").weights == std::vector<double>{1.2, 1.1, 0.9, 0.8});
  CHECK(find_paper_scheme("frontline").weights == std::vector<double>{1.6, 0.8, 0.8, 0.8});
  CHECK(find_paper_scheme("geographical").weights == std::vector<double>{1.6, 1.2, 0.8, 0.4});
  CHECK(find_paper_scheme("two-bloc").weights == std::vector<double>{1.3, 1.3, 0.7, 0.7});
  for (const auto& s : schemes) {
    CAPTURE(s.name);
    CHECK(s.total() == doctest::Approx(4.0).epsilon(1e-15));
    CHECK_NOTHROW(s.validate());
  }
  CHECK_THROWS_AS(find_paper_scheme("oligarchy"), ValidationError);
}

TEST_CASE("normalize_scheme rescales to the target sum") {
  CHECK(normalize_scheme(std::vector<double>{2, 2, 2, 2}, 4).weights ==
        std::vector<double>{1, 1, 1, 1});
  CHECK(normalize_scheme(std::vector<double>{8, 0, 0, 0}, 4).weights ==
        std::vector<double>{4, 0, 0, 0});
  CHECK(normalize_scheme(std::vector<double>{1, 1}, 4).weights == std::vector<double>{2, 2});

  const std::vector<double> odd{0.3, 1.7, 2.9, 0.01, 5.5};
  const auto scaled = normalize_scheme(odd, 3.25);
  CHECK(std::abs(scaled.total() - 3.25) <= 1e-12);

  CHECK_THROWS_AS(normalize_scheme(std::vector<double>{0, 0, 0}, 4), ValidationError);
  CHECK_THROWS_AS(normalize_scheme(std::vector<double>{1, -1, 2}, 4), ValidationError);
  CHECK_THROWS_AS(normalize_scheme(std::vector<double>{1, 1}, 0), ValidationError);
}

TEST_CASE("negative weights are rejected") {
  const WeightScheme s{"neg", {1.0, -0.5}};
  CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("index 1"), ValidationError);
}

TEST_CASE("vote vectors hold binary entries") {
  const auto v = VoteVector::from_mask(0b1010, 4);
  CHECK_FALSE(v[0]);
  CHECK(v[1]);
  CHECK_FALSE(v[2]);
  CHECK(v[3]);
  CHECK_THROWS_AS(VoteVector(std::vector<std::uint8_t>{0, 2}), ValidationError);
}

TEST_CASE("game parameters") {
  CHECK_NOTHROW(GameParams{11.5, 1.0, 0.3}.validate());
  CHECK_THROWS_AS((GameParams{0.0, 1.0, 0.5}.validate()), ValidationError);
  CHECK_THROWS_AS((GameParams{1.0, -1.0, 0.5}.validate()), ValidationError);
  CHECK_THROWS_AS((GameParams{1.0, 1.0, 1.5}.validate()), ValidationError);
}
