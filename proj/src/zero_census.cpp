#include "lucaskit/zero_census.hpp"

#include <algorithm>
#include <string>

#include "lucaskit/errors.hpp"
#include "lucaskit/exact_engine.hpp"

namespace lucaskit {

std::vector<IntervalSpec> predicted_intervals(int k) {
  SeqParams{k};
  std::vector<IntervalSpec> out;
  for (long j = 1; j <= k - 2; ++j) out.push_back({j, 1 + (j - 1) * (k + 1), j * k - 2});
  return out;
}

long multiplicity_formula(int k) {
  SeqParams{k};
  return static_cast<long>(k - 1) * (k - 2) / 2;
}

ZeroSet census(int k, long limit) {
  const SeqParams params(k);
  const long need = static_cast<long>(k) * k;
  if (limit < need) {
    fail(ErrorCode::ScanLimit,
         "scan limit " + std::to_string(limit) + " does not cover the predicted intervals; use at least " +
             std::to_string(need));
  }
  ZeroSet out;
  out.k = k;
  out.limit = limit;
  const TermTable table = shared_sequence(params, SeqKind::Lucas).table(-limit, 0);
  for (long n = 0; n <= limit; ++n) {
    if (table.at(-n) == 0) out.zeros.push_back(n);
  }
  const std::vector<IntervalSpec> predicted = predicted_intervals(k);
  auto is_zero = [&](long n) { return std::binary_search(out.zeros.begin(), out.zeros.end(), n); };
  for (const IntervalSpec& iv : predicted) {
    bool full = true;
    for (long n = iv.lo; n <= iv.hi; ++n) {
      if (!is_zero(n)) {
        out.missing.push_back(n);
        full = false;
      }
    }
    if (full) out.matched.push_back(iv);
  }
  for (long n : out.zeros) {
    bool inside = std::any_of(predicted.begin(), predicted.end(), [n](const IntervalSpec& iv) { return iv.contains(n); });
    if (!inside) out.sporadic.push_back(n);
  }
  return out;
}

SignAudit even_sign_audit(int k, long n_lo, long n_hi) {
  const SeqParams params(k);
  if (k % 2 != 0) fail(ErrorCode::Parity, "the sign pattern holds for even k only");
  const long threshold = static_cast<long>(k) * k - 2L * k - 1;
  if (n_lo < threshold) {
    fail(ErrorCode::Range, "sign audit must start at n >= k^2 - 2k - 1 = " + std::to_string(threshold));
  }
  if (n_hi < n_lo) fail(ErrorCode::Range, "empty sign audit range");
  SignAudit out{k, n_lo, n_hi, 0, std::nullopt};
  const TermTable table = shared_sequence(params, SeqKind::Lucas).table(-n_hi, -n_lo);
  for (long n = n_lo; n <= n_hi; ++n) {
    ++out.checked;
    const int want = n % 2 == 0 ? 1 : -1;
    if (sgn(table.at(-n)) != want) {
      out.first_violation = n;
      break;
    }
  }
  return out;
}

}  // namespace lucaskit
