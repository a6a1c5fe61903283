#include "doctest.h"
#include "lucaskit/algebraic_numbers.hpp"
#include "lucaskit/errors.hpp"
#include "lucaskit/exact_engine.hpp"

using namespace lucaskit;

namespace {

PrecisionPolicy digits(int d) {
  PrecisionPolicy p;
  p.start_digits = d;
  return p;
}

bool near(const Interval& x, const char* value, const char* tol) {
  const mpfr_prec_t b = x.bits();
  return abs(x.mid() - Real::from_string(value, b)) < Real::from_string(tol, b);
}

}  // namespace

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(2) == std::vector<ExactInt>{1, -1, -1});
  CHECK(char_poly(3) == std::vector<ExactInt>{1, -1, -1, -1});
  std::vector<ExactInt> p5 = char_poly(5);
  CHECK(p5.size() == 6);
  CHECK(p5[1] == -1);
}

TEST_CASE("roots for small k") {
  RootSystem r2 = roots(2, digits(64));
  CHECK(near(r2.gamma(), "1.6180339887498948482045868343656381177203", "1e-40"));
  CHECK(near(r2.at(2).box.re, "-0.6180339887498948482045868343656381177203", "1e-40"));
  CHECK(r2.real_count == 2);

  RootSystem r3 = roots(3, digits(64));
  CHECK(near(r3.gamma(), "1.8392867552141611325518525646532866004242", "1e-40"));
  CHECK(near(r3.at(2).modulus, "0.7373527057603279", "1e-15"));
  CHECK(r3.at(2).modulus.overlaps(r3.at(3).modulus));
  CHECK(r3.at(2).conjugate == 3);
  CHECK(r3.at(2).box.im.positive());
  CHECK(r3.real_count == 1);

  RootSystem r10 = roots(10, digits(64));
  CHECK(r10.gamma().lo() > Real::from_string("1.998046875", r10.bits));
  CHECK(r10.gamma().hi() < Real::from_long(2, r10.bits));
}

TEST_CASE("root self-consistency and parity") {
  for (int k = 2; k <= 40; ++k) {
    RootSystem rs = roots(k, digits(64));
    INFO("k=" << k);
    CHECK(rs.trace.contains(Real::from_long(1, rs.bits)));
    CHECK(rs.modulus_product.contains(Real::from_long(1, rs.bits)));
    CHECK(rs.real_count == (k % 2 == 0 ? 2 : 1));
    for (int i = 2; i <= k; ++i) CHECK(rs.at(i).modulus.hi() < Real::from_long(1, rs.bits));
  }
}

TEST_CASE("f_k at roots") {
  RootSystem r2 = roots(2, digits(64));
  Interval f = f_value(2, r2.gamma());
  CHECK(near(f, "0.72360679774997896964091736687312762354406", "1e-40"));
  CHECK(abs(f_value(2, r2.at(2).box)).hi() < Real::from_string("0.5", r2.bits));
  for (int k = 2; k <= 100; ++k) {
    Interval fk = f_value(k, shared_roots(k, digits(64))->gamma());
    REQUIRE(fk.lo() >= Real::from_string("0.5", fk.bits()));
    REQUIRE(fk.hi() <= Real::from_string("0.75", fk.bits()));
  }
}

TEST_CASE("binet evaluation") {
  BinetEval b = binet_eval(2, 10, digits(64));
  CHECK(b.exact == 123);
  CHECK(near(b.dominant, "122.9918693812442", "1e-12"));
  CHECK(near(b.residual, "0.0081306187557833", "1e-12"));
  BinetEval b4 = binet_eval(4, 5, digits(64));
  CHECK(b4.exact == 22);
  CHECK(b4.residual_ok());
  CHECK(binet_eval(6, -4, digits(64)).residual_ok());
  CHECK_THROWS_AS(binet_eval(6, -5, digits(64)), Error);
}

TEST_CASE("binet full sum rounds to the exact term") {
  for (int k = 2; k <= 10; ++k) {
    std::shared_ptr<const RootSystem> rs = shared_roots(k, digits(100));
    for (long n = 2 - k; n <= 300; n += 7) {
      BinetEval b = binet_eval(*rs, n);
      REQUIRE(b.exact == lucas_at(SeqParams(k), n));
      REQUIRE(b.residual_ok());
      REQUIRE(b.full_sum_rounds());
    }
  }
}

TEST_CASE("root property audit") {
  RootPropertyAudit a4 = root_property_audit(4, digits(64));
  CHECK(a4.pass());
  bool saw_even_gap = false;
  for (const AuditItem& it : a4.items) {
    if (it.id == "even_ratio_gap") {
      saw_even_gap = true;
      CHECK(it.status == CheckStatus::Pass);
    }
  }
  CHECK(saw_even_gap);
  CHECK(root_property_audit(2, digits(64)).pass());

  RootPropertyAudit a12 = root_property_audit(12, digits(64));
  CHECK(a12.pass());
  CHECK(a12.digits >= 300);

  RootPropertyAudit a30 = root_property_audit(30, digits(64));
  for (const AuditItem& it : a30.items) {
    if (it.id == "ratio_gap_cubic" || it.id == "even_ratio_gap") CHECK(it.status == CheckStatus::Skipped);
  }
}

TEST_CASE("policy validation") {
  PrecisionPolicy p;
  p.start_digits = 8;
  CHECK_THROWS_AS(p.validate(), Error);
}
