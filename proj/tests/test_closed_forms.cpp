#include "doctest.h"
#include "lucaskit/closed_forms.hpp"
#include "lucaskit/errors.hpp"
#include "lucaskit/exact_engine.hpp"

using namespace lucaskit;

namespace {
ExactInt Q(int k, long n) { return q_at(SeqParams(k), n); }
ExactInt H(int k, long n) { return h_at(SeqParams(k), n); }
}  // namespace

TEST_CASE("binomial conventions") {
  CHECK(psi(7, -1) == 1);
  CHECK(psi(1, 3) == 0);
  CHECK(psi(2, 0) == 4);
  CHECK(psi(2, 1) == 5);
  CHECK(psi(2, -2) == 0);
  CHECK(binom(-3, 1) == 0);
  CHECK(binom(10, 11) == 0);
  CHECK(binom(10, 3) == 120);
}

TEST_CASE("dyadic sums") {
  DyadicSum s;
  s.add(3, -1);
  s.add(1, -1);
  s.add(5, 2);
  CHECK(s.to_integer("t") == 22);
  DyadicSum t;
  t.add(1, -3);
  CHECK_FALSE(t.is_integer());
  CHECK_THROWS_AS(t.to_integer("t"), Error);
}

TEST_CASE("zero predicate is strict") {
  CHECK(q_zero_predicate(5, 0, 2));
  CHECK(Q(5, 2) == 0);
  CHECK_FALSE(q_zero_predicate(5, 1, 1));
  CHECK(Q(5, 6) == -2);
  CHECK(q_zero_predicate(4, 1, 2));
  CHECK(Q(4, 6) == 0);
}

TEST_CASE("diagonal and small blocks") {
  CHECK(q_diagonal(4, 2) == -2);
  CHECK(q_diagonal(6, 3) == -4);
  CHECK(q_diagonal(5, 1) == -1);
  CHECK(q_closed_small(4, 2, 0) == 7);
  CHECK(q_closed_small(4, 2, 1) == -7);
  CHECK(q_closed_small(5, 2, 2) == 2);
}

TEST_CASE("general psi series") {
  CHECK(q_closed_general(4, 3, 0) == 16);
  CHECK(q_closed_general(4, 6, 0) == 195);
  CHECK(q_closed_general(2, 3, -1) == -11);
  CHECK(q_closed_general(2, 3, -1) == Q(2, 5));
}

TEST_CASE("block diagonal sums start at j = r - 1") {
  CHECK(q_block_diag(5, 3, 0) == 16);
  CHECK(q_block_diag(5, 3, 1) == -21);
  CHECK(q_block_diag(5, 3, 2) == 11);
  CHECK(Q(5, 16) == -21);
}

TEST_CASE("H closed forms") {
  CHECK(h_closed(5, 3, 1) == 5);
  CHECK(h_closed(4, 2, 1) == 1);
  CHECK(h_closed(5, 2, 0) == -3);
  CHECK(H(5, 16) == 5);
}

TEST_CASE("block series index base") {
  CHECK(block_index(4, 1, 1, 0) == 11);
  CHECK(block_value(4, 1, 1, 0) == -4);
  CHECK(block_value(4, 1, 2, 0) == -10);
  CHECK(block_value(4, 2, 1, 0) == -105);
  CHECK(Q(4, 23) == -105);
  std::vector<mpq_class> t = block_terms(4, 2, 1, 0);
  REQUIRE(t.size() == 3);
  CHECK(t[0] == -32);
  CHECK(t[1] == -73);
  CHECK(t[2] == 0);
}

TEST_CASE("two-term and general block series agree at b = 1") {
  for (int k = 3; k <= 12; ++k) {
    for (long j = 0; j <= k - 2; ++j) {
      for (long r = 0; r <= k - 2; ++r) {
        REQUIRE(block_terms(k, 1, j, r) == first_block_terms(k, j, r));
      }
    }
  }
}

TEST_CASE("small and general forms agree on their overlap") {
  for (int k = 3; k <= 12; ++k) {
    const long m = k - 2;
    for (long r = 0; r <= m; ++r) {
      if (r > k - 2) continue;
      REQUIRE(q_closed_small(k, m, r) == q_closed_general(k, m, r));
    }
  }
}

TEST_CASE("closed-form sweep against the recurrence") {
  for (int k : {2, 3, 4, 5, 8, 13, 20}) {
    for (const FormCheck& f : closed_form_sweep(k, 2000)) {
      INFO("k=" << k << " form=" << f.form << " " << f.first_mismatch);
      CHECK(f.checked > 0);
      CHECK(f.mismatches == 0);
    }
  }
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(q_closed_small(4, 3, 0), Error);
  CHECK_THROWS_AS(block_value(2, 1, 0, 0), Error);
  CHECK_THROWS_AS(nu2_binom(3, 5), Error);
}

TEST_CASE("2-adic valuations") {
  CHECK(nu2_binom(4, 1) == 2);
  CHECK(nu2_binom(4, 2) == 1);
  CHECK(nu2_psi(3, 1) == 0L);
  CHECK_FALSE(nu2_psi(1, 3).has_value());
  CHECK(x_form(4, 4) == 38);
  CHECK(nu2(x_form(4, 4)) == 1L);
  CHECK(x_form(4, 5) == 8);
  CHECK(nu2(x_form(4, 5)) == 3L);
  for (long y = 0; y <= 300; ++y) {
    for (long z = 0; z <= y; ++z) REQUIRE(nu2_binom(y, z) == *nu2(binom(y, z)));
  }
}

TEST_CASE("kummer audit reports findings") {
  KummerReport r = kummer_audit(64);
  CHECK(r.y_max == 64);
  CHECK(r.evaluated > 0);
  CHECK(r.max_valuation >= 0);
  for (const KummerViolation& v : r.violations) CHECK(v.y <= 64);
}

TEST_CASE("odd zero floor") {
  CHECK(odd_k_zero_floor(5).exact() == ExactInt(4));
  CHECK(odd_k_zero_floor(11).exact() == ExactInt(32));
  CHECK(odd_k_zero_floor(887).log10().to_double() == doctest::Approx(133.35).epsilon(0.001));
  CHECK_THROWS_AS(odd_k_zero_floor(6), Error);
}
