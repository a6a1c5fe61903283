#include "lucaskit/reduction.hpp"

#include <sstream>

#include "lucaskit/errors.hpp"

namespace lucaskit {

namespace {

// Enclosure of the distance to the nearest integer, min(|d|, 1 - |d|) with
// d = y - round(mid y); valid while the enclosure is narrower than 1.
Interval nearest_distance(const Interval& y, const char* what) {
  if (!(y.width() < Real::from_double(0.5, y.bits()))) {
    fail(ErrorCode::PrecisionExhausted, std::string("enclosure of ") + what + " is too wide; raise precision");
  }
  Interval a = abs(y - Interval::from_int(round_to_int(y.mid()), y.bits()));
  Interval b = Interval::from_long(1, y.bits()) - a;
  return Interval(min(a.lo(), b.lo()), min(a.hi(), b.hi()));
}

}  // namespace

CFExpander::CFExpander(const Interval& x) : x_(x) {}

bool CFExpander::next() {
  if (terminated_) return false;
  const ExactInt a = floor_to_int(x_.lo());
  if (a != floor_to_int(x_.hi())) {
    fail(ErrorCode::PrecisionExhausted,
         "partial quotient " + std::to_string(a_.size()) + " is ambiguous at the given precision");
  }
  a_.push_back(a);
  ExactInt p = a * p_ + p_prev_;
  ExactInt q = a * q_ + q_prev_;
  p_prev_ = p_;
  q_prev_ = q_;
  p_ = p;
  q_ = q;
  ps_.push_back(p_);
  qs_.push_back(q_);
  Interval frac = x_ - Interval::from_int(a, x_.bits());
  if (frac.lo().is_zero() && frac.hi().is_zero()) {
    terminated_ = true;
  } else {
    x_ = Interval::from_long(1, x_.bits()) / frac;  // throws if frac straddles zero
  }
  return true;
}

ContinuedFraction continued_fraction(const ValidatedReal& x, const ExactInt& q_limit) {
  CFExpander cf(x.enclosure());
  try {
    while (cf.next()) {
      if (cf.q() > q_limit) break;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Domain) {
      fail(ErrorCode::PrecisionExhausted, "partial quotient " + std::to_string(cf.index() + 1) + " is ambiguous at the given precision");
    }
    throw;
  }
  return cf.snapshot();
}

void ReductionProblem::validate() const {
  if (!A.positive()) fail(ErrorCode::Parameter, "A must be certified positive");
  if (!(B.lo() > Real::from_long(1, B.bits()))) fail(ErrorCode::Parameter, "B must be certified > 1");
  if (M < 1) fail(ErrorCode::Parameter, "M must be >= 1");
}

ReductionResult bd_reduce(const ReductionProblem& problem) {
  problem.validate();
  const Interval tau = problem.tau.enclosure();
  const Interval mu = problem.mu.enclosure();
  const mpfr_prec_t bits = tau.bits();
  const ExactInt six_m = problem.M * 6;
  const Interval M = Interval::from_int(problem.M, bits);

  CFExpander cf(tau);
  ReductionResult out;
  auto advance = [&]() {
    try {
      return cf.next();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Domain) fail(ErrorCode::PrecisionExhausted, "continued fraction of tau ran out of precision");
      throw;
    }
  };
  while (true) {
    if (!advance()) {
      fail(ErrorCode::ReductionFailure, "tau is rational with denominator " + cf.q().get_str() + " <= 6M");
    }
    if (cf.q() > six_m) break;
  }
  for (int attempt = 0; attempt < kReductionAttempts; ++attempt) {
    if (attempt > 0 && !advance()) break;
    const Interval q = Interval::from_int(cf.q(), bits);
    Interval eps = nearest_distance(mu * q, "mu q") - M * nearest_distance(tau * q, "tau q");
    out.attempts.push_back({cf.index(), cf.q(), eps});
    if (eps.positive()) {
      out.convergent_index = cf.index();
      out.q = cf.q();
      out.epsilon = eps;
      Interval x = log(problem.A * q / Interval::point(eps.lo())) / log(Interval::point(problem.B.lo()));
      out.w_cap = ceil_to_int(x.hi()).get_si() - 1;
      return out;
    }
  }
  std::ostringstream msg;
  msg << "no convergent with q > 6M gave eps > 0 in " << out.attempts.size() << " attempts; eps trace:";
  for (const ReductionAttempt& a : out.attempts) msg << ' ' << a.epsilon.mid().str(6);
  fail(ErrorCode::ReductionFailure, msg.str());
}

int reduction_digits(const ExactInt& M, const PrecisionPolicy& policy) {
  const ExactInt six_m = M * 6;
  const int d = static_cast<int>(six_m.get_str().size());
  return std::max(policy.start_digits, 2 * d + 30);
}

ReductionProblem build_odd_problem(int k, const ExactInt& M, const PrecisionPolicy& policy) {
  if (k % 2 == 0) fail(ErrorCode::Parity, "the reduction instance is built for odd k");
  if (k < 5) fail(ErrorCode::Range, "the reduction instance needs k >= 5");
  if (M < 1) fail(ErrorCode::Parameter, "M must be >= 1");
  PrecisionPolicy raised = policy;
  raised.start_digits = reduction_digits(M, policy);
  const RootSystem& rs = *shared_roots(k, raised);
  const mpfr_prec_t bits = rs.bits;
  const CInterval& gk = rs.at(k).box;
  const CInterval fk = f_value(k, gk);
  const Interval pi = Interval::pi(bits);

  ReductionProblem pr;
  pr.tau = ValidatedReal::from(-(arg(gk) * 2) / pi);
  pr.mu = ValidatedReal::from(arg(fk / (gk * 2 - 1)) * 2 / pi);
  pr.A = Interval::from_long(20, bits) / abs(fk);
  pr.B = rs.at(k - 2).modulus / rs.at(k).modulus;
  pr.M = M;
  pr.validate();
  return pr;
}

OddReduction reduce_odd_k(int k, const ExactInt& M, const PrecisionPolicy& policy) {
  if (k > 885) fail(ErrorCode::Range, "reduce_odd_k covers odd k in [5, 885]");
  OddReduction out;
  out.k = k;
  out.problem = build_odd_problem(k, M, policy);
  out.result = bd_reduce(out.problem);
  out.R = out.result.w_cap - 1;
  return out;
}

}  // namespace lucaskit
