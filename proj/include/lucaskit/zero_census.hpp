#pragma once

// Zeros of Q_n = L_{-n} found by exhaustive scan, set against the predicted
// blocks of consecutive zero indices.

#include <optional>
#include <vector>

#include "lucaskit/multiprecision.hpp"

namespace lucaskit {

struct IntervalSpec {
  long j;
  long lo;
  long hi;

  long size() const { return hi - lo + 1; }
  bool contains(long n) const { return lo <= n && n <= hi; }
  bool operator==(const IntervalSpec&) const = default;
};

struct ZeroSet {
  int k = 0;
  long limit = 0;
  std::vector<long> zeros;
  // Predicted intervals whose every index is a zero.
  std::vector<IntervalSpec> matched;
  // Zeros outside every predicted interval.
  std::vector<long> sporadic;
  // Predicted indices that are not zeros.
  std::vector<long> missing;

  bool consistent() const { return sporadic.empty() && missing.empty(); }
};

// I_j = [1 + (j-1)(k+1), jk - 2] for j = 1..k-2; empty for k = 2.
std::vector<IntervalSpec> predicted_intervals(int k);
// (k-1)(k-2)/2.
long multiplicity_formula(int k);
// Scans Q_0..Q_N. ErrorCode::ScanLimit when N < k^2.
ZeroSet census(int k, long limit);

struct SignAudit {
  int k = 0;
  long n_lo = 0;
  long n_hi = 0;
  long checked = 0;
  std::optional<long> first_violation;

  bool pass() const { return !first_violation.has_value(); }
};

// Q_n > 0 for even n and Q_n < 0 for odd n on [n_lo, n_hi].
// ErrorCode::Parity for odd k, ErrorCode::Range when n_lo < k^2 - 2k - 1.
SignAudit even_sign_audit(int k, long n_lo, long n_hi);

}  // namespace lucaskit
