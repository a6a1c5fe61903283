#pragma once

// Explicit bounds: the lower bound for linear forms in logarithms, the even
// and odd caps on zero indices, bound inversion, the root-ratio cap C_k, and
// the odd-k chain ending in caps on k and n.
//
// "log" is the natural logarithm throughout.

#include <vector>

#include "lucaskit/algebraic_numbers.hpp"
#include "lucaskit/log_magnitude.hpp"

namespace lucaskit {

struct MatveevInput {
  long t = 1;
  double dK = 1;
  double B = 1;
  std::vector<double> A;

  // ErrorCode::Parameter unless t >= 1, dK >= 1, B >= 1, A.size() == t, A_i > 0.
  void validate() const;
};

// -3 * 30^{t+4} (t+1)^{5.5} dK^2 (1 + log dK) (1 + log tB) A_1 ... A_t.
Real matveev_log_lower(const MatveevInput& in);
// 3 * 30^{t+4} (t+1)^{5.5}.
Real matveev_structural_constant(long t);
// The instance t = 3, dK = k^2, A = (4k^2 log k, 8k^2 log 2, 1.4k).
MatveevInput matveev_instance(int k, double B);
// -matveev_log_lower(instance) / (k^9 log k (1 + log k^2)(1 + log 3B)).
Real matveev_k9_coefficient(int k, double B);

// 2 k^{k^2} log(490 k^2); k even >= 4, ErrorCode::Parity for odd k.
LogMagnitude even_k_bound(int k);
// 1.5e17 * 1.454^{k^3} k^12 (log k)^2; k odd >= 5, ErrorCode::Parity for even k.
LogMagnitude odd_k_bound(int k);

// 2^r H (log H)^r, a cap on any L with L / (log L)^r < H.
// ErrorCode::Domain unless r >= 1 and H > (4r^2)^r.
LogMagnitude invert_bound(int r, const LogMagnitude& H);

// Largest n with rho^{n+1} < 490 k^2, rho = |g_{k-1}| / |g_k|; k even in [4, 500].
long even_Ck(int k, const PrecisionPolicy& policy);

// 1.7e17 * k^{19.6} (log k)^3 (pi/e)^k; k odd >= 5.
LogMagnitude odd_chain_bound(int k, mpfr_prec_t bits = LogMagnitude::kBits);
// Largest odd k with 2^{(k-1)/2} <= odd_chain_bound(k), scanned up to k_max.
int k_cap_scan(mpfr_prec_t bits = LogMagnitude::kBits, int k_max = 20001);

// A cap n_hat with c_log log(n+1) > c_const + c_lin (n+1) impossible for
// n >= n_hat. Uses H = (c_log + max(0, -c_const)) / c_lin and invert_bound(1, H);
// for H <= 4 the inequality is scanned directly. ErrorCode::Domain unless
// c_log, c_lin > 0.
LogMagnitude gap_solve(double c_log, double c_const, double c_lin);
bool gap_inequality_holds(double c_log, double c_const, double c_lin, const LogMagnitude& n);
// Largest k with 2^{(k-1)/2} <= n_cap.
long floor_k_cap(const LogMagnitude& n_cap);

struct BandSample {
  int k = 0;
  Interval log_f;      // log |f_k(g_k) / 30|
  Interval log_ratio;  // log |g_{k-2} / g_k|
  bool f_in_band = false;
  bool ratio_in_band = false;
};

struct BandAudit {
  double f_lo = -10.48, f_hi = -10.02;
  double ratio_lo = 1.78e-8, ratio_hi = 1.04e-7;
  std::vector<BandSample> samples;

  bool pass() const;
};

// k odd in [501, 885] (ErrorCode::Range / ErrorCode::Parity otherwise).
BandAudit band_constants_audit(const std::vector<int>& ks, const PrecisionPolicy& policy);

}  // namespace lucaskit
