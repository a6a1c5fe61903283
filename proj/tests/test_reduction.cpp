#include "doctest.h"
#include "lucaskit/errors.hpp"
#include "lucaskit/reduction.hpp"

using namespace lucaskit;

namespace {

const mpfr_prec_t kBits = digits_to_bits(60);

ReductionProblem toy() {
  return {ValidatedReal::from(sqrt(Interval::from_long(2, kBits))), ValidatedReal::from(Interval::from_ratio(1, 2, kBits)),
          Interval::from_long(10, kBits), Interval::from_long(2, kBits), ExactInt(100)};
}

void check_convergents(const ContinuedFraction& cf) {
  for (std::size_t i = 1; i < cf.q.size(); ++i) {
    ExactInt det = cf.p[i] * cf.q[i - 1] - cf.p[i - 1] * cf.q[i];
    REQUIRE(abs(det) == 1);
  }
}

}  // namespace

TEST_CASE("continued fraction of sqrt 2") {
  ContinuedFraction cf = continued_fraction(ValidatedReal::from(sqrt(Interval::from_long(2, digits_to_bits(50)))), 600);
  REQUIRE(cf.quotients.size() >= 3);
  CHECK(cf.quotients[0] == 1);
  for (std::size_t i = 1; i < cf.quotients.size(); ++i) CHECK(cf.quotients[i] == 2);
  CHECK(cf.q.back() == 985);
  check_convergents(cf);
}

TEST_CASE("continued fraction of the golden ratio") {
  Interval phi = (sqrt(Interval::from_long(5, kBits)) + 1L) / Interval::from_long(2, kBits);
  ContinuedFraction cf = continued_fraction(ValidatedReal::from(phi), ExactInt("1000000000000"));
  for (const ExactInt& a : cf.quotients) CHECK(a == 1);
  for (std::size_t i = 2; i < cf.q.size(); ++i) CHECK(cf.q[i] == cf.q[i - 1] + cf.q[i - 2]);
  CHECK(cf.p[5] == cf.q[6]);
  check_convergents(cf);
}

TEST_CASE("coarse input exhausts precision") {
  ValidatedReal x{Real::from_string("1.41421356", kBits), Real::from_string("1e-3", kBits)};
  try {
    continued_fraction(x, 1000000);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrecisionExhausted);
  }
}

TEST_CASE("toy reduction") {
  ReductionResult r = bd_reduce(toy());
  CHECK(r.q == 985);
  CHECK(r.epsilon.mid().to_double() == doctest::Approx(0.4641).epsilon(0.001));
  CHECK(r.epsilon.positive());
  CHECK(r.w_cap == 14);
}

TEST_CASE("toy reduction is sound by exhaustive search") {
  ReductionProblem p = toy();
  ReductionResult r = bd_reduce(p);
  const Interval tau = p.tau.enclosure();
  const Interval mu = p.mu.enclosure();
  for (long w = r.w_cap + 1; w <= r.w_cap + 5; ++w) {
    Interval bound = p.A / pow(p.B, w);
    for (long u = 0; u <= 100; ++u) {
      Interval x = tau * u + mu;
      ExactInt v0 = floor_to_int(x.mid());
      for (ExactInt v = v0 - 1; v <= v0 + 2; ++v) {
        Interval lam = abs(x - Interval::from_int(v, kBits));
        if (lam.positive()) REQUIRE_FALSE(certainly_less(lam, bound));
      }
    }
  }
}

TEST_CASE("degenerate rational input fails to reduce") {
  ReductionProblem p{ValidatedReal::from(Interval::from_ratio(1, 8, kBits)), ValidatedReal::from(Interval::from_long(0, kBits)),
                     Interval::from_long(10, kBits), Interval::from_long(2, kBits), ExactInt(10)};
  try {
    bd_reduce(p);
    FAIL("expected a reduction failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReductionFailure);
  }
}

TEST_CASE("problem validation") {
  ReductionProblem p = toy();
  p.B = Interval::from_ratio(1, 2, kBits);
  CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("odd-k instances at desk scale") {
  PrecisionPolicy policy;
  const ExactInt M("15000000000000000000000000000000000000000000000");
  CHECK(reduction_digits(M, policy) >= 2 * 47 + 30);

  ReductionProblem p5 = build_odd_problem(5, M, policy);
  CHECK(p5.tau.value.to_double() >= 1.59);
  CHECK(p5.tau.value.to_double() <= 1.99);
  CHECK(p5.B.lo() > Real::from_long(1, p5.B.bits()));

  ReductionProblem p7 = build_odd_problem(7, M, policy);
  CHECK(p7.mu.value.to_double() >= 0.70);
  CHECK(p7.mu.value.to_double() <= 1.99);

  OddReduction r5 = reduce_odd_k(5, M, policy);
  CHECK(r5.result.q > ExactInt(6) * M);
  CHECK(r5.result.q < ExactInt("3000000000000000000000000000000000000000000000000000000000"));
  CHECK(r5.R <= 445906682970649L);
  CHECK(r5.R == r5.result.w_cap - 1);

  OddReduction r9 = reduce_odd_k(9, M, policy);
  CHECK(r9.R <= 445906682970649L);
  CHECK(r9.result.epsilon.positive());

  OddReduction small = reduce_odd_k(5, ExactInt(100), policy);
  CHECK(small.result.epsilon.positive());
  CHECK(small.R > 0);

  CHECK_THROWS_AS(reduce_odd_k(6, M, policy), Error);
}
