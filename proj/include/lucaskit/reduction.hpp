#pragma once

// Validated continued fractions and the Baker-Davenport reduction in the
// Dujella-Petho form: for a convergent p/q of tau with q > 6M and
// eps = ||mu q|| - M ||tau q|| > 0, the inequality
// 0 < |u tau - v + mu| < A B^{-w} has no solution with u <= M and
// w >= log(A q / eps) / log B.

#include <string>
#include <vector>

#include "lucaskit/algebraic_numbers.hpp"
#include "lucaskit/multiprecision.hpp"

namespace lucaskit {

struct ValidatedReal {
  Real value;
  Real abs_error;

  static ValidatedReal from(const Interval& x) { return {x.mid(), x.rad()}; }
  Interval enclosure() const { return Interval::around(value, abs_error); }
};

struct ContinuedFraction {
  std::vector<ExactInt> quotients;
  std::vector<ExactInt> p;
  std::vector<ExactInt> q;
  // True when the expansion ended because x is rational.
  bool terminated = false;
};

// Produces partial quotients one at a time; every floor is certified against
// the enclosure (ErrorCode::PrecisionExhausted otherwise).
class CFExpander {
 public:
  explicit CFExpander(const Interval& x);

  // False once the expansion has terminated.
  bool next();
  bool terminated() const { return terminated_; }
  long index() const { return static_cast<long>(a_.size()) - 1; }
  const ExactInt& quotient() const { return a_.back(); }
  const ExactInt& p() const { return p_; }
  const ExactInt& q() const { return q_; }
  ContinuedFraction snapshot() const { return {a_, ps_, qs_, terminated_}; }

 private:
  Interval x_;
  std::vector<ExactInt> a_, ps_, qs_;
  ExactInt p_ = 1, q_ = 0, p_prev_ = 0, q_prev_ = 1;
  bool terminated_ = false;
};

// Quotients and convergents up to and including the first q > q_limit.
ContinuedFraction continued_fraction(const ValidatedReal& x, const ExactInt& q_limit);

struct ReductionProblem {
  ValidatedReal tau;
  ValidatedReal mu;
  Interval A;
  Interval B;
  ExactInt M;

  // ErrorCode::Parameter unless A > 0, B > 1, M >= 1 (certified).
  void validate() const;
};

struct ReductionAttempt {
  long index = 0;
  ExactInt q;
  Interval epsilon;
};

struct ReductionResult {
  long convergent_index = 0;
  ExactInt q;
  Interval epsilon;
  // Largest w not excluded.
  long w_cap = 0;
  std::vector<ReductionAttempt> attempts;
};

constexpr int kReductionAttempts = 50;

// ErrorCode::ReductionFailure after kReductionAttempts convergents with
// q > 6M and no certified eps > 0 (the message carries the eps trace).
ReductionResult bd_reduce(const ReductionProblem& problem);

// tau = -2 arg(g_k)/pi, mu = 2 arg(f_k(g_k)/(2 g_k - 1))/pi, A = 20/|f_k(g_k)|,
// B = |g_{k-2}/g_k|, arguments in (-pi, pi]. Working precision is at least
// 2 * digits(6M) + 30. k odd >= 5.
ReductionProblem build_odd_problem(int k, const ExactInt& M, const PrecisionPolicy& policy);
int reduction_digits(const ExactInt& M, const PrecisionPolicy& policy);

struct OddReduction {
  int k = 0;
  // Cap on n, with w = n + 1.
  long R = 0;
  ReductionProblem problem;
  ReductionResult result;
};

// k odd in [5, 885], M >= 1.
OddReduction reduce_odd_k(int k, const ExactInt& M, const PrecisionPolicy& policy);

}  // namespace lucaskit
