#include <algorithm>

#include "doctest.h"
#include "lucaskit/errors.hpp"
#include "lucaskit/exact_engine.hpp"
#include "lucaskit/zero_census.hpp"

using namespace lucaskit;

TEST_CASE("predicted intervals") {
  CHECK(predicted_intervals(6) ==
        std::vector<IntervalSpec>{{1, 1, 4}, {2, 8, 10}, {3, 15, 16}, {4, 22, 22}});
  std::vector<IntervalSpec> k4 = predicted_intervals(4);
  REQUIRE(k4.size() == 2);
  CHECK(k4[0].lo == 1);
  CHECK(k4[0].hi == 2);
  CHECK(k4[1].lo == 6);
  CHECK(k4[1].hi == 6);
  CHECK(predicted_intervals(2).empty());
  std::vector<IntervalSpec> k3 = predicted_intervals(3);
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].lo == 1);
  CHECK(k3[0].hi == 1);
}

TEST_CASE("multiplicity formula") {
  CHECK(multiplicity_formula(7) == 15);
  CHECK(multiplicity_formula(2) == 0);
  CHECK(multiplicity_formula(3) == 1);
}

TEST_CASE("census") {
  ZeroSet z5 = census(5, 100);
  CHECK(z5.zeros == std::vector<long>{1, 2, 3, 7, 8, 13});
  CHECK(z5.sporadic.empty());
  CHECK(census(3, 100).zeros == std::vector<long>{1});
  ZeroSet z10 = census(10, 1000);
  CHECK(z10.zeros.size() == 36);
  CHECK(z10.consistent());
  CHECK_THROWS_AS(census(10, 50), Error);
}

TEST_CASE("census is monotone in the limit") {
  for (int k = 3; k <= 9; ++k) {
    std::vector<long> small = census(k, k * k).zeros;
    std::vector<long> big = census(k, 8 * k * k).zeros;
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  }
}

TEST_CASE("census matches the predicted intervals for k up to 30") {
  for (int k = 2; k <= 30; ++k) {
    ZeroSet z = census(k, 4L * k * k);
    INFO("k=" << k);
    CHECK(z.consistent());
    CHECK(static_cast<long>(z.zeros.size()) == multiplicity_formula(k));
  }
}

TEST_CASE("even sign audit") {
  CHECK(even_sign_audit(4, 7, 15).pass());
  CHECK(even_sign_audit(4, 7, 15).checked == 9);
  CHECK(even_sign_audit(6, 23, 500).pass());
  CHECK(even_sign_audit(4, 7, 7).pass());
  CHECK(q_at(SeqParams(4), 7) == -2);
  CHECK_THROWS_AS(even_sign_audit(5, 20, 40), Error);
  CHECK_THROWS_AS(even_sign_audit(6, 5, 40), Error);
}
