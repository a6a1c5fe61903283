#include "doctest.h"
#include "lucaskit/errors.hpp"
#include "lucaskit/exact_engine.hpp"

using namespace lucaskit;

TEST_CASE("lucas and fibonacci terms in both directions") {
  SeqParams p(4);
  CHECK(lucas_at(p, 0) == 2);
  CHECK(lucas_at(p, -6) == 0);
  CHECK(lucas_at(p, -3) == -1);
  CHECK(lucas_at(p, 5) == 22);
  CHECK(fib_at(p, 1) == 1);
  CHECK(fib_at(p, -3) == 1);
  CHECK(fib_at(p, -4) == -1);
}

TEST_CASE("mirrored sequences") {
  CHECK(q_at(SeqParams(4), 4) == 3);
  CHECK(q_at(SeqParams(5), 13) == 0);
  CHECK(h_at(SeqParams(5), 10) == -3);
}

TEST_CASE("two-term recurrence for Q") {
  CHECK(q_short_recurrence(SeqParams(4), 8) == 7);
  CHECK(q_short_recurrence(SeqParams(4), 23) == -105);
  CHECK(q_short_recurrence(SeqParams(5), 7) == 0);
  for (int k = 2; k <= 12; ++k) {
    std::vector<ExactInt> t = q_short_table(SeqParams(k), 400);
    for (long n = 0; n <= 400; ++n) REQUIRE(t[n] == q_at(SeqParams(k), n));
  }
}

TEST_CASE("identity audit") {
  CHECK(identity_audit(SeqParams(4), 23).pass());
  CHECK(identity_audit(SeqParams(2), 50).pass());
  CHECK(identity_audit(SeqParams(6), 1000).pass());
  CHECK_THROWS_AS(identity_audit(SeqParams(3), 0), Error);
}

TEST_CASE("k = 2 mirror is the classical sign flip") {
  SeqParams p(2);
  for (long n = 0; n <= 200; ++n) {
    ExactInt want = (n % 2 == 0) ? lucas_at(p, n) : ExactInt(-lucas_at(p, n));
    REQUIRE(lucas_at(p, -n) == want);
  }
}

TEST_CASE("window sums hold on materialized tables") {
  for (int k : {2, 3, 7, 15}) {
    Sequence& s = shared_sequence(SeqParams(k), SeqKind::Lucas);
    CHECK(satisfies_recurrence(s.table(-300, 300)));
    CHECK(satisfies_recurrence(shared_sequence(SeqParams(k), SeqKind::Fibonacci).table(-200, 200)));
  }
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(SeqParams(1), Error);
  try {
    SeqParams bad(0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parameter);
  }
  CHECK_THROWS_AS(q_at(SeqParams(3), -1), Error);
}
