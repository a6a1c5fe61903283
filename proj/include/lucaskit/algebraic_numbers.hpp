#pragma once

// Certified roots of x^k - x^{k-1} - ... - x - 1.
//
// Roots are computed on the trinomial x^{k+1} - 2x^k + 1 = (x - 1) * char_poly,
// whose extra root 1 is known exactly. Every root sits in a box certified to
// contain exactly one root, and moduli of distinct classes are separated.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lucaskit/multiprecision.hpp"

namespace lucaskit {

struct PrecisionPolicy {
  int start_digits = 64;
  int max_doublings = 4;
  double target_error = 1e-30;

  // ErrorCode::Parameter unless start_digits >= 32 and max_doublings >= 1.
  void validate() const;
  int max_digits() const { return start_digits << max_doublings; }
};

struct RootEnclosure {
  CInterval box;
  Interval modulus;
  bool real = false;
  // 1-based label of the complex conjugate; the root's own label when real.
  int conjugate = 0;

  Complex value() const { return box.mid(); }
};

struct RootSystem {
  int k = 0;
  int digits = 0;
  mpfr_prec_t bits = 0;
  // roots[0] is the dominant root, then decreasing modulus; inside a
  // conjugate pair the root with positive imaginary part comes first.
  std::vector<RootEnclosure> roots;
  int real_count = 0;
  // Enclosures of the sum of all roots and of the product of all moduli.
  Interval trace;
  Interval modulus_product;

  // gamma_label, 1-based.
  const RootEnclosure& at(int label) const { return roots.at(static_cast<std::size_t>(label - 1)); }
  const Interval& gamma() const { return roots.front().box.re; }
  const RootEnclosure& smallest() const { return roots.back(); }
  Interval min_inner_modulus() const { return roots.back().modulus; }
};

// Leading coefficient first: {1, -1, ..., -1}.
std::vector<ExactInt> char_poly(int k);

// Throws ErrorCode::Certification when enclosures still overlap after the
// last precision doubling.
RootSystem roots(int k, const PrecisionPolicy& policy);
// Memoized roots() keyed by (k, policy).
std::shared_ptr<const RootSystem> shared_roots(int k, const PrecisionPolicy& policy);

// f_k(x) = (x - 1) / (2 + (k + 1)(x - 2)). ErrorCode::Domain when the
// denominator enclosure contains zero.
CInterval f_value(int k, const CInterval& x);
Interval f_value(int k, const Interval& x);

struct BinetEval {
  int k = 0;
  long n = 0;
  ExactInt exact;
  // f_k(gamma) (2 gamma - 1) gamma^{n-1}.
  Interval dominant;
  // |L_n - dominant|.
  Interval residual;
  // Sum of (2 g - 1) f_k(g) g^{n-1} over all k roots.
  CInterval full_sum;
  // Upper bound on |full_sum - L_n|.
  Real full_error;

  bool residual_ok() const;
  bool full_sum_rounds() const;
};

// n >= 2 - k (ErrorCode::Domain otherwise). ErrorCode::PrecisionExhausted
// when the full-sum enclosure is too wide to pin down an integer.
BinetEval binet_eval(const RootSystem& rs, long n);
BinetEval binet_eval(int k, long n, const PrecisionPolicy& policy);

enum class CheckStatus { Pass, Fail, Skipped };
const char* check_status_name(CheckStatus s);

struct AuditItem {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct RootPropertyAudit {
  int k = 0;
  int digits = 0;
  std::vector<AuditItem> items;
  int real_roots = 0;
  Interval min_inner_modulus;
  Interval trace;
  Interval modulus_product;

  bool pass() const;
};

// Checks the root and f_k bounds with enclosures. Items outside their
// feasibility range (ratio gap 1 + 1.454^{-k^3} for k <= 12, even-k gap
// 1 + k^{-k^2} for k <= 20) are Skipped. ErrorCode::Feasibility when an
// applicable item needs more digits than policy.max_digits().
RootPropertyAudit root_property_audit(int k, const PrecisionPolicy& policy);

// Smallest lower bound of |gamma_i| / |gamma_{i+1}| over consecutive roots
// of distinct modulus.
Interval min_modulus_ratio(const RootSystem& rs);

}  // namespace lucaskit
