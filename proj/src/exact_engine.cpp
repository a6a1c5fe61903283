#include "lucaskit/exact_engine.hpp"

#include <map>
#include <memory>
#include <utility>

#include "lucaskit/errors.hpp"

namespace lucaskit {

SeqParams::SeqParams(int order) : k(order) {
  if (order < 2) fail(ErrorCode::Parameter, "order k must be at least 2, got " + std::to_string(order));
}

Sequence::Sequence(SeqParams params, SeqKind kind) : params_(params), kind_(kind) {
  const int k = params_.k;
  // Initial terms occupy indices 2-k .. 1.
  nonneg_.push_back(kind_ == SeqKind::Lucas ? ExactInt(2) : ExactInt(0));
  nonneg_.push_back(ExactInt(1));
  for (int i = 1; i <= k - 2; ++i) neg_.emplace_back(0);

  forward_sum_ = 0;
  for (long n = 2 - k; n <= 1; ++n) forward_sum_ += get(n);
  // Window for the backward step: indices 2-k .. 0.
  backward_sum_ = forward_sum_ - get(1);
}

const ExactInt& Sequence::get(long n) const {
  if (n >= 0) return nonneg_[static_cast<std::size_t>(n)];
  return neg_[static_cast<std::size_t>(-n - 1)];
}

void Sequence::grow_to(long n) {
  const int k = params_.k;
  while (n >= static_cast<long>(nonneg_.size())) {
    const long top = static_cast<long>(nonneg_.size());
    ExactInt next = forward_sum_;
    forward_sum_ += next;
    forward_sum_ -= get(top - k);
    nonneg_.push_back(std::move(next));
  }
  while (n < -static_cast<long>(neg_.size())) {
    // With low the lowest stored index, u_{low-1} = u_{low+k-1} minus the
    // k-1 terms low .. low+k-2 held in backward_sum_.
    const long low = -static_cast<long>(neg_.size());
    ExactInt next = get(low + k - 1) - backward_sum_;
    backward_sum_ += next;
    backward_sum_ -= get(low + k - 2);
    neg_.push_back(std::move(next));
  }
}

ExactInt Sequence::at(long n) {
  std::lock_guard<std::mutex> lock(mutex_);
  grow_to(n);
  return get(n);
}

TermTable Sequence::table(long lo, long hi) {
  if (lo > hi) fail(ErrorCode::Range, "empty index range");
  std::lock_guard<std::mutex> lock(mutex_);
  grow_to(lo);
  grow_to(hi);
  TermTable t{params_, lo, hi, {}};
  t.values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long n = lo; n <= hi; ++n) t.values.push_back(get(n));
  return t;
}

Sequence& shared_sequence(SeqParams params, SeqKind kind) {
  static std::mutex registry_mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<Sequence>> registry;
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto key = std::make_pair(params.k, static_cast<int>(kind));
  auto it = registry.find(key);
  if (it == registry.end()) {
    it = registry.emplace(key, std::make_unique<Sequence>(params, kind)).first;
  }
  return *it->second;
}

ExactInt lucas_at(SeqParams params, long n) { return shared_sequence(params, SeqKind::Lucas).at(n); }

ExactInt fib_at(SeqParams params, long n) { return shared_sequence(params, SeqKind::Fibonacci).at(n); }

ExactInt q_at(SeqParams params, long n) {
  if (n < 0) fail(ErrorCode::Domain, "Q_n is defined for n >= 0");
  return lucas_at(params, -n);
}

ExactInt h_at(SeqParams params, long n) {
  if (n < 0) fail(ErrorCode::Domain, "H_n is defined for n >= 0");
  return fib_at(params, -n);
}

std::vector<ExactInt> q_short_table(SeqParams params, long n) {
  if (n < 0) fail(ErrorCode::Domain, "Q_n is defined for n >= 0");
  const long k = params.k;
  const long seed_top = std::min(n, k);
  TermTable seed = shared_sequence(params, SeqKind::Lucas).table(-seed_top, 0);
  std::vector<ExactInt> q;
  q.reserve(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= seed_top; ++i) q.push_back(seed.at(-i));
  for (long i = k + 1; i <= n; ++i) {
    q.push_back(2 * q[static_cast<std::size_t>(i - k)] - q[static_cast<std::size_t>(i - k - 1)]);
  }
  return q;
}

ExactInt q_short_recurrence(SeqParams params, long n) {
  if (n < 0) fail(ErrorCode::Domain, "Q_n is defined for n >= 0");
  const long k = params.k;
  if (n <= k) return q_at(params, n);
  // Ring of the last k+1 values.
  std::vector<ExactInt> ring = q_short_table(params, k);
  const std::size_t width = static_cast<std::size_t>(k + 1);
  for (long i = k + 1; i <= n; ++i) {
    ExactInt next = 2 * ring[static_cast<std::size_t>(i - k) % width] - ring[static_cast<std::size_t>(i - k - 1) % width];
    ring[static_cast<std::size_t>(i) % width] = std::move(next);
  }
  return ring[static_cast<std::size_t>(n) % width];
}

bool satisfies_recurrence(const TermTable& table) {
  const long k = table.params.k;
  for (long top = table.lo + k; top <= table.hi; ++top) {
    ExactInt sum = 0;
    for (long j = 1; j <= k; ++j) sum += table.at(top - j);
    if (sum != table.at(top)) return false;
  }
  return true;
}

IdentityAudit identity_audit(SeqParams params, long limit) {
  if (limit < 1) fail(ErrorCode::Range, "scan limit must be at least 1");
  IdentityAudit audit;
  audit.k = params.k;
  audit.limit = limit;

  Sequence& lucas = shared_sequence(params, SeqKind::Lucas);
  Sequence& fib = shared_sequence(params, SeqKind::Fibonacci);
  TermTable l = lucas.table(-limit, limit);
  TermTable f = fib.table(-limit, limit + 1);
  std::vector<ExactInt> q_short = q_short_table(params, limit);

  for (long n = 0; n <= limit; ++n) {
    // Q_n = L_{-n}, H_n = F_{-n}; H_{-1} = F_1.
    const ExactInt& q = l.at(-n);
    if (q != 2 * f.at(-(n - 1)) - f.at(-n)) {
      audit.first_failure = n;
      audit.failed_identity = "Q_n = 2H_{n-1} - H_n";
      return audit;
    }
    if (l.at(n) != 2 * f.at(n + 1) - f.at(n)) {
      audit.first_failure = n;
      audit.failed_identity = "L_n = 2F_{n+1} - F_n";
      return audit;
    }
    if (q != q_short[static_cast<std::size_t>(n)]) {
      audit.first_failure = n;
      audit.failed_identity = "Q_n = 2Q_{n-k} - Q_{n-k-1}";
      return audit;
    }
    ++audit.checked;
  }
  return audit;
}

}  // namespace lucaskit
