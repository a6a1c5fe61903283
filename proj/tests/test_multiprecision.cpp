#include "doctest.h"
#include "lucaskit/log_magnitude.hpp"
#include "lucaskit/multiprecision.hpp"

using namespace lucaskit;

TEST_CASE("interval arithmetic encloses exact results") {
  const mpfr_prec_t b = digits_to_bits(50);
  Interval third = Interval::from_ratio(1, 3, b);
  Interval one = third * 3L;
  CHECK(one.contains(Real::from_long(1, b)));
  CHECK(one.width() < Real::from_string("1e-45", b));

  Interval r2 = sqrt(Interval::from_long(2, b));
  CHECK(sqr(r2).contains(Real::from_long(2, b)));
  CHECK(certainly_less(Interval::from_ratio(1, 3, b), Interval::from_ratio(1, 2, b)));
  CHECK_FALSE(certainly_less(third, third));
}

TEST_CASE("complex boxes") {
  const mpfr_prec_t b = 200;
  CInterval i(Interval::from_long(0, b), Interval::from_long(1, b));
  CInterval m1 = i * i;
  CHECK(m1.re.contains(Real::from_long(-1, b)));
  CHECK(m1.im.contains_zero());
  CHECK(abs(i).contains(Real::from_long(1, b)));
  CHECK(pow(i, -2).re.contains(Real::from_long(-1, b)));
  Interval a = arg(i);
  CHECK((a * 2L).contains((Interval::pi(b)).mid()));
}

TEST_CASE("rounding to integers") {
  const mpfr_prec_t b = 128;
  CHECK(floor_to_int(Real::from_string("-2.5", b)) == -3);
  CHECK(ceil_to_int(Real::from_string("2.1", b)) == 3);
  CHECK(round_to_int(Real::from_string("122.99", b)) == 123);
}

TEST_CASE("log magnitudes order huge values") {
  LogMagnitude a = LogMagnitude::from_log10(Real::from_long(674744, LogMagnitude::kBits));
  LogMagnitude b = LogMagnitude::from_int(ExactInt("1000000000000000000000000"));
  CHECK(b < a);
  CHECK_FALSE(b.exact().has_value());
  CHECK(LogMagnitude::from_int(ExactInt("123456789012")).exact() == ExactInt("123456789012"));
  CHECK(LogMagnitude::from_int(ExactInt(-5)) < LogMagnitude::zero());
  CHECK(LogMagnitude::from_int(ExactInt(1000)).log10().to_double() == doctest::Approx(3.0));
}
