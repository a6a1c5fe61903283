#include <random>

#include "doctest.h"
#include "lucaskit/diophantine_bounds.hpp"
#include "lucaskit/closed_forms.hpp"
#include "lucaskit/errors.hpp"

using namespace lucaskit;

namespace {
double log10_of(const LogMagnitude& x) { return x.log10().to_double(); }
}  // namespace

TEST_CASE("structural constant") {
  CHECK(matveev_structural_constant(3).to_double() == doctest::Approx(1.3437e14).epsilon(0.001));
}

TEST_CASE("linear form coefficient") {
  for (int k : {5, 9, 15}) {
    double c = matveev_k9_coefficient(k, 1.0).to_double();
    CHECK(c == doctest::Approx(4.2e15).epsilon(0.05));
  }
  Real v = matveev_log_lower(matveev_instance(5, 1e6));
  CHECK(v.is_finite());
  CHECK(v.sign() < 0);
}

TEST_CASE("lower bound decreases in every parameter") {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> u(1.0, 50.0);
  for (int trial = 0; trial < 200; ++trial) {
    MatveevInput in;
    in.t = 3;
    in.dK = u(rng);
    in.B = u(rng) * 100;
    in.A = {u(rng), u(rng), u(rng)};
    const Real base = matveev_log_lower(in);
    for (std::size_t i = 0; i < 3; ++i) {
      MatveevInput up = in;
      up.A[i] *= 1.5;
      REQUIRE(matveev_log_lower(up) < base);
    }
    MatveevInput upB = in;
    upB.B *= 2;
    REQUIRE(matveev_log_lower(upB) < base);
    MatveevInput upD = in;
    upD.dK += 1;
    REQUIRE(matveev_log_lower(upD) < base);
  }
}

TEST_CASE("bounds for all n") {
  CHECK(even_k_bound(4).to_double() == doctest::Approx(7.70e10).epsilon(0.01));
  CHECK(log10_of(even_k_bound(4)) == doctest::Approx(10.887).epsilon(0.0005));
  CHECK(log10_of(even_k_bound(6)) == doctest::Approx(29.30).epsilon(0.001));
  CHECK(log10_of(even_k_bound(500)) == doctest::Approx(674744).epsilon(0.0001));
  CHECK(log10_of(odd_k_bound(5)) == doctest::Approx(46.3).epsilon(0.002));
  CHECK(log10_of(odd_k_bound(7)) == doctest::Approx(83.66).epsilon(0.001));
  CHECK_THROWS_AS(even_k_bound(5), Error);
  CHECK_THROWS_AS(odd_k_bound(4), Error);
}

TEST_CASE("bound inversion") {
  CHECK(invert_bound(1, LogMagnitude::from_int(1000000)).to_double() == doctest::Approx(2.7631e7).epsilon(0.0001));
  CHECK(invert_bound(1, LogMagnitude::from_int(17)).to_double() == doctest::Approx(96.33).epsilon(0.001));
}

TEST_CASE("even C_k regression values") {
  PrecisionPolicy p;
  CHECK(even_Ck(4, p) == 163);
  CHECK(even_Ck(6, p) == 574);
  CHECK(even_Ck(10, p) == 2770);
  for (int k = 4; k <= 40; k += 2) {
    REQUIRE(LogMagnitude::from_int(even_Ck(k, p)) <= even_k_bound(k));
  }
}

TEST_CASE("odd chain") {
  CHECK(log10_of(odd_chain_bound(5)) == doctest::Approx(32.1).epsilon(0.01));
  CHECK(log10_of(odd_chain_bound(885)) == doctest::Approx(133.2).epsilon(0.002));
  CHECK_THROWS_AS(odd_chain_bound(886), Error);
  for (int k = 5; k < 60; k += 2) REQUIRE(odd_chain_bound(k) < odd_chain_bound(k + 2));
  CHECK(odd_k_zero_floor(901) > odd_chain_bound(901));
  const int cap = k_cap_scan();
  CHECK(cap >= 884);
  CHECK(cap <= 888);
  CHECK(k_cap_scan(512) == cap);
}

TEST_CASE("gap solve") {
  LogMagnitude n = gap_solve(7.93e44, -10.48, 1.78e-8);
  CHECK(n.to_double() == doctest::Approx(1.08e55).epsilon(0.01));
  CHECK_FALSE(gap_inequality_holds(7.93e44, -10.48, 1.78e-8, LogMagnitude::from_log10(n.log10() + 1)));
  CHECK(floor_k_cap(n) == 366);
  LogMagnitude small = gap_solve(1, 0, 1);
  CHECK(small.to_double() < 10);
  for (long m = 10; m < 200; ++m) {
    REQUIRE_FALSE(gap_inequality_holds(1, 0, 1, LogMagnitude::from_int(m)));
  }
}

TEST_CASE("band constants") {
  PrecisionPolicy p;
  BandAudit b = band_constants_audit({501, 601}, p);
  REQUIRE(b.samples.size() == 2);
  CHECK(b.samples[0].f_in_band);
  CHECK(b.samples[0].ratio_in_band);
  CHECK(b.samples[1].f_in_band);
  CHECK(b.samples[1].ratio_in_band);
}
