#pragma once

// Exact evaluation of the order-k Lucas and Fibonacci sequences at every
// integer index, plus the negative-index companions Q_n = L_{-n} and
// H_n = F_{-n}.

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lucaskit/multiprecision.hpp"

namespace lucaskit {

struct SeqParams {
  int k;

  // Throws ErrorCode::Parameter for k < 2.
  explicit SeqParams(int order);
};

enum class SeqKind { Lucas, Fibonacci };

struct TermTable {
  SeqParams params;
  long lo;
  long hi;
  std::vector<ExactInt> values;

  const ExactInt& at(long n) const { return values.at(static_cast<std::size_t>(n - lo)); }
};

// Memoized two-sided table for one (k, kind). Forward terms come from the
// k-term sum, negative indices from the rearranged recurrence
// u_{n-k} = u_n - u_{n-1} - ... - u_{n-k+1}. Growth is serialized by a mutex,
// so an instance can be shared between threads.
class Sequence {
 public:
  Sequence(SeqParams params, SeqKind kind);

  const SeqParams& params() const { return params_; }
  SeqKind kind() const { return kind_; }

  ExactInt at(long n);
  TermTable table(long lo, long hi);

 private:
  void grow_to(long n);
  const ExactInt& get(long n) const;

  SeqParams params_;
  SeqKind kind_;
  std::mutex mutex_;
  std::vector<ExactInt> nonneg_;  // index n >= 0
  std::vector<ExactInt> neg_;     // index n < 0 stored at -n-1
  ExactInt forward_sum_;          // sum of the k terms preceding nonneg_.size()
  ExactInt backward_sum_;         // sum of the k-1 lowest stored terms
};

// Process-wide memo shared by the free functions below.
Sequence& shared_sequence(SeqParams params, SeqKind kind);

ExactInt lucas_at(SeqParams params, long n);
ExactInt fib_at(SeqParams params, long n);
// n >= 0, ErrorCode::Domain otherwise.
ExactInt q_at(SeqParams params, long n);
ExactInt h_at(SeqParams params, long n);

// Q_n from the two-term recurrence Q_n = 2 Q_{n-k} - Q_{n-k-1}, seeded only
// with Q_0..Q_k.
ExactInt q_short_recurrence(SeqParams params, long n);
// Q_0..Q_n by the same two-term recurrence.
std::vector<ExactInt> q_short_table(SeqParams params, long n);

// True when every window of k+1 consecutive entries whose top index is in the
// recurrence's range satisfies u_n = u_{n-1} + ... + u_{n-k}.
bool satisfies_recurrence(const TermTable& table);

struct IdentityAudit {
  int k = 0;
  long limit = 0;
  long checked = 0;
  std::optional<long> first_failure;
  std::string failed_identity;

  bool pass() const { return !first_failure.has_value(); }
};

// Checks Q_n = 2H_{n-1} - H_n, L_n = 2F_{n+1} - F_n and the two-term Q
// recurrence for 0 <= n <= limit.
IdentityAudit identity_audit(SeqParams params, long limit);

}  // namespace lucaskit
