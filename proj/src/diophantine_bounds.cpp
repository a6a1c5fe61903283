#include "lucaskit/diophantine_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lucaskit/errors.hpp"

namespace lucaskit {

namespace {

constexpr mpfr_prec_t kBits = LogMagnitude::kBits;

Real num(double v, mpfr_prec_t bits = kBits) { return Real::from_double(v, bits); }
Real num_str(const char* v, mpfr_prec_t bits = kBits) { return Real::from_string(v, bits); }

void require_parity(int k, int parity, int k_min) {
  if (k % 2 != parity) fail(ErrorCode::Parity, parity == 0 ? "bound applies to even k only" : "bound applies to odd k only");
  if (k < k_min) fail(ErrorCode::Range, "bound needs k >= " + std::to_string(k_min));
}

}  // namespace

void MatveevInput::validate() const {
  if (t < 1) fail(ErrorCode::Parameter, "t must be >= 1");
  if (!(dK >= 1)) fail(ErrorCode::Parameter, "dK must be >= 1");
  if (!(B >= 1)) fail(ErrorCode::Parameter, "B must be >= 1");
  if (A.size() != static_cast<std::size_t>(t)) fail(ErrorCode::Parameter, "need exactly t height parameters");
  for (double a : A) {
    if (!(a > 0)) fail(ErrorCode::Parameter, "height parameters must be positive");
  }
}

Real matveev_structural_constant(long t) {
  return pow(num(30), t + 4) * pow(num(t + 1), num(5.5)) * 3;
}

Real matveev_log_lower(const MatveevInput& in) {
  in.validate();
  Real dK = num(in.dK);
  Real v = matveev_structural_constant(in.t) * dK * dK * (log(dK) + 1) * (log(num(in.B) * in.t) + 1);
  for (double a : in.A) v *= num(a);
  return -v;
}

MatveevInput matveev_instance(int k, double B) {
  const double kd = k;
  MatveevInput in;
  in.t = 3;
  in.dK = kd * kd;
  in.B = B;
  in.A = {4 * kd * kd * std::log(kd), 8 * kd * kd * std::log(2.0), 1.4 * kd};
  return in;
}

Real matveev_k9_coefficient(int k, double B) {
  Real kk = num(k);
  Real scale = pow(kk, 9L) * log(kk) * (log(kk * kk) + 1) * (log(num(B) * 3) + 1);
  return -matveev_log_lower(matveev_instance(k, B)) / scale;
}

LogMagnitude even_k_bound(int k) {
  require_parity(k, 0, 4);
  Real kk = num(k);
  Real l10 = log10(num(2)) + log10(kk) * (static_cast<long>(k) * k) + log10(log(kk * kk * 490));
  return LogMagnitude::from_log10(l10);
}

LogMagnitude odd_k_bound(int k) {
  require_parity(k, 1, 5);
  Real kk = num(k);
  Real l10 = log10(num_str("1.5e17")) + log10(num_str("1.454")) * (static_cast<long>(k) * k * k) + log10(kk) * 12 +
             log10(log(kk)) * 2;
  return LogMagnitude::from_log10(l10);
}

LogMagnitude invert_bound(int r, const LogMagnitude& H) {
  if (r < 1) fail(ErrorCode::Domain, "invert_bound needs r >= 1");
  if (H.sign() <= 0) fail(ErrorCode::Domain, "invert_bound needs H > 0");
  const Real lnH = H.ln();
  const Real threshold = log(num(4.0 * r * r)) * r;
  if (!(lnH > threshold)) fail(ErrorCode::Domain, "invert_bound needs H > (4r^2)^r");
  Real ln_cap = log(num(2)) * r + lnH + log(lnH) * r;
  return LogMagnitude::from_ln(ln_cap);
}

long even_Ck(int k, const PrecisionPolicy& policy) {
  require_parity(k, 0, 4);
  if (k > 500) fail(ErrorCode::Range, "even_Ck covers k <= 500");
  const RootSystem& rs = *shared_roots(k, policy);
  Interval rho = rs.at(k - 1).modulus / rs.at(k).modulus;
  Interval x = log(Interval::from_long(490L * k * k, rs.bits)) / log(rho);
  // n + 1 < x
  ExactInt lo = ceil_to_int(x.lo());
  ExactInt hi = ceil_to_int(x.hi());
  if (lo != hi) fail(ErrorCode::Certification, "C_k enclosure straddles an integer; raise precision");
  return lo.get_si() - 2;
}

LogMagnitude odd_chain_bound(int k, mpfr_prec_t bits) {
  require_parity(k, 1, 5);
  Real kk = Real::from_long(k, bits);
  Real pe = Real::pi(bits) / exp(Real::from_long(1, bits));
  Real l10 = log10(num_str("1.7e17", bits)) + log10(kk) * num(19.6, bits) + log10(log(kk)) * 3 + log10(pe) * k;
  return LogMagnitude::from_log10(l10);
}

int k_cap_scan(mpfr_prec_t bits, int k_max) {
  const Real log2_10 = log10(Real::from_long(2, bits));
  int best = 0;
  for (int k = 5; k <= k_max; k += 2) {
    Real floor_l10 = log2_10 * ((k - 1) / 2);
    if (floor_l10 <= odd_chain_bound(k, bits).log10()) best = k;
  }
  return best;
}

bool gap_inequality_holds(double c_log, double c_const, double c_lin, const LogMagnitude& n) {
  // x = n + 1; n is large enough here that adding 1 only matters for the exact path.
  Real x = n.exact() ? Real::from_int(*n.exact() + 1, kBits) : pow(num(10), n.log10()) + 1;
  return num(c_log) * log(x) > num(c_const) + num(c_lin) * x;
}

LogMagnitude gap_solve(double c_log, double c_const, double c_lin) {
  if (!(c_log > 0) || !(c_lin > 0)) fail(ErrorCode::Domain, "gap_solve needs c_log > 0 and c_lin > 0");
  Real H = (num(c_log) + num(std::max(0.0, -c_const))) / num(c_lin);
  if (H > num(4)) return invert_bound(1, LogMagnitude::from_real(H));
  // Small H: any solution has x / log x < 4, so x < 16; scan it.
  long cap = 0;
  for (long n = 0; n < 64; ++n) {
    if (gap_inequality_holds(c_log, c_const, c_lin, LogMagnitude::from_int(n))) cap = n + 1;
  }
  return LogMagnitude::from_int(cap);
}

long floor_k_cap(const LogMagnitude& n_cap) {
  if (n_cap.sign() <= 0) fail(ErrorCode::Domain, "floor_k_cap needs a positive cap");
  Real k = n_cap.log10() / log10(num(2)) * 2 + 1;
  return floor_to_int(k).get_si();
}

bool BandAudit::pass() const {
  return std::all_of(samples.begin(), samples.end(), [](const BandSample& s) { return s.f_in_band && s.ratio_in_band; });
}

BandAudit band_constants_audit(const std::vector<int>& ks, const PrecisionPolicy& policy) {
  BandAudit out;
  for (int k : ks) {
    require_parity(k, 1, 501);
    if (k > 885) fail(ErrorCode::Range, "band audit covers odd k in [501, 885]");
  }
  for (int k : ks) {
    const RootSystem& rs = *shared_roots(k, policy);
    const mpfr_prec_t bits = rs.bits;
    BandSample s;
    s.k = k;
    s.log_f = log(abs(f_value(k, rs.at(k).box)) / Interval::from_long(30, bits));
    s.log_ratio = log(rs.at(k - 2).modulus / rs.at(k).modulus);
    auto inside = [bits](const Interval& v, double lo, double hi) {
      return v.lo() >= Real::from_double(lo, bits) && v.hi() <= Real::from_double(hi, bits);
    };
    s.f_in_band = inside(s.log_f, out.f_lo, out.f_hi);
    s.ratio_in_band = inside(s.log_ratio, out.ratio_lo, out.ratio_hi);
    out.samples.push_back(s);
  }
  return out;
}

}  // namespace lucaskit
