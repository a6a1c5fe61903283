#pragma once

// Closed-form expressions for Q_n = L_{-n} and H_n = F_{-n}, the binomial
// combinator psi, and 2-adic valuation tools.
//
// Every formula with powers 2^e (e possibly negative) is summed exactly as a
// dyadic rational; a non-integral total raises ErrorCode::Integrality.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lucaskit/log_magnitude.hpp"
#include "lucaskit/multiprecision.hpp"

namespace lucaskit {

// Exact accumulator for sums of c * 2^e.
class DyadicSum {
 public:
  void add(const ExactInt& c, long exp2);
  void add(long c, long exp2) { add(ExactInt(c), exp2); }
  mpq_class value() const;
  bool is_integer() const;
  // Throws ErrorCode::Integrality when the sum is not an integer.
  ExactInt to_integer(const char* what) const;

 private:
  ExactInt acc_ = 0;
  long base_exp_ = 0;
  bool empty_ = true;
};

// C(y, z), zero for z < 0, z > y, or y < 0.
ExactInt binom(long y, long z);
// C(y, z) + C(y+1, z+1); psi(y, -1) = 1 follows from the binomial convention.
ExactInt psi(long y, long z);

// Index of a block entry: the value at (b, j, r) is Q at this index.
long block_index(int k, long b, long j, long r);

// True exactly when 0 <= m < r <= k-2, which forces Q_{mk+r} = 0.
bool q_zero_predicate(int k, long m, long r);
// -2^{m-1} = Q_{mk-1} for m in [1, k-2].
ExactInt q_diagonal(int k, long m);
// Q_{mk+r} for 1 <= m <= k-2, 0 <= r <= m.
ExactInt q_closed_small(int k, long m, long r);
// Q_{mk+r} by the alternating psi series; r in [-1, k-2] and m >= k-2
// (k = 2: r in {-1, 0}, m >= 1).
ExactInt q_closed_general(int k, long m, long r);
// Q_{mk+r} for m in [1, k-2]: r = -1 gives -2^{m-1}, r = 0 gives (m+5)2^{m-2},
// 1 <= r < m the sum -sum_{j=r-1}^{m-1} 2^{m-1-j} Q_{jk+r-1}.
ExactInt q_block_diag(int k, long m, long r);
// H_{mk+r} for m in [1, k-1] with the same r selector.
ExactInt h_closed(int k, long m, long r);
// Q at block_index(k, b, j, r) from the (b+1)-term psi series; k > 2, b >= 1,
// j, r in [0, k-2].
ExactInt block_value(int k, long b, long j, long r);
// Per-term values of the series behind block_value, and of the two-term
// b = 1 form, for term-by-term comparison.
std::vector<mpq_class> block_terms(int k, long b, long j, long r);
std::vector<mpq_class> first_block_terms(int k, long j, long r);

// Exact 2-adic valuation; nullopt for zero.
std::optional<long> nu2(const ExactInt& v);
// Number of carries when adding z and y-z in base 2 (0 <= z <= y).
long nu2_binom(long y, long z);
// 2-adic valuation of psi(y, z); nullopt when psi(y, z) = 0.
std::optional<long> nu2_psi(long y, long z);

// 4 psi(y, z-1) + psi(y, z).
ExactInt x_form(long y, long z);

struct KummerViolation {
  long y;
  long z;
  long valuation;
};

struct KummerReport {
  long y_max = 0;
  long evaluated = 0;
  long zero_values = 0;
  long max_valuation = -1;
  long max_at_y = 0;
  long max_at_z = 0;
  // Cases with nu2(X) > 2 log2(y) + 2.
  std::vector<KummerViolation> violations;
};

// Scans 1 <= y <= y_max, 0 <= z <= y+1 and compares nu2(x_form(y, z)) with
// 2 log2(y) + 2. Violations are findings, not errors.
KummerReport kummer_audit(long y_max);

struct FormCheck {
  std::string form;
  long checked = 0;
  long mismatches = 0;
  std::string first_mismatch;
};

// Every closed form above against the recurrence, over all parameters whose
// index is <= n_max. One entry per form; forms that do not apply to k are
// omitted.
std::vector<FormCheck> closed_form_sweep(int k, long n_max);

// 2^{(k-1)/2} for odd k >= 3; ErrorCode::Parity for even k.
LogMagnitude odd_k_zero_floor(int k);

}  // namespace lucaskit
