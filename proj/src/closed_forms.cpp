#include "lucaskit/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "lucaskit/errors.hpp"
#include "lucaskit/exact_engine.hpp"

namespace lucaskit {

namespace {

bool odd(long v) { return (v % 2 + 2) % 2 == 1; }

ExactInt pow2(long e) {
  ExactInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

mpq_class dyadic(const ExactInt& c, long e) {
  mpq_class q(c);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::Range, what);
}

void require_order(int k) { SeqParams{k}; }

// Multiplies c by num_extra * prod (top - t) / (den_extra * prod (t + 1)) for
// t in [from, to). Small factors are batched into one word per pass.
void binom_walk(ExactInt& c, unsigned long num, unsigned long den, long top, long from, long to) {
  long t = from;
  do {
    while (t < to && num < (1UL << 40) && den < (1UL << 40)) {
      num *= static_cast<unsigned long>(top - t);
      den *= static_cast<unsigned long>(t + 1);
      ++t;
    }
    mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), num);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), den);
    num = den = 1;
  } while (t < to);
}

// sum_{i=0}^{imax} (-1)^{ik+sigma} [ psi(y0-i, z0+ik-1) 2^{e0-i(k+1)}
//                                   + psi(y0-i, z0+ik)   2^{e0-i(k+1)-2} ]
//
// Each bracket is X = 4 psi(y, z-1) + psi(y, z) times 2^{e-2}, and with
// c = C(y, z-1) Pascal's rule gives X = c * N / (z (z+1)) where
// N = 8z(z+1) + 6(y-z+1)(z+1) + (y-z+1)(y-z). Consecutive terms move the
// binomial one row up and k columns right, so c is carried along; the sum is
// accumulated Horner style since the exponent drops by k+1 per term.
DyadicSum psi_series(long k, long y0, long z0, long e0, long sigma, long imax) {
  DyadicSum sum;
  bool have = false;
  ExactInt c;  // C(wy, wz)
  ExactInt x;
  ExactInt acc = 0;
  long wy = 0, wz = 0;
  long last = -1;
  for (long i = 0; i <= imax; ++i) {
    const long y = y0 - i;
    const long z = z0 + i * k;
    const long zm = z - 1;
    if (y < -1) break;
    if (y >= 0 && zm >= 0) {
      // Every binomial in this term, and in all later ones, vanishes.
      if (zm > y) break;
      if (have && wy == y + 1 && wz == zm - k) {
        binom_walk(c, static_cast<unsigned long>(wy - wz), static_cast<unsigned long>(wy), y, wz, zm);
      } else {
        c = binom(y, zm);
      }
      wy = y;
      wz = zm;
      have = true;
      const unsigned long d = y - z + 1;
      const unsigned long n = 8UL * z * (z + 1) + 6UL * d * (z + 1) + d * (d - 1);
      mpz_mul_ui(x.get_mpz_t(), c.get_mpz_t(), n);
      mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(z) * (z + 1));
    } else {
      have = false;
      x = 4 * psi(y, zm) + psi(y, z);
    }
    if (last >= 0) mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<mp_bitcnt_t>((i - last) * (k + 1)));
    if (odd(i * k + sigma)) {
      acc -= x;
    } else {
      acc += x;
    }
    last = i;
  }
  if (last >= 0) sum.add(acc, e0 - last * (k + 1) - 2);
  return sum;
}

}  // namespace

// ---- DyadicSum --------------------------------------------------------------

void DyadicSum::add(const ExactInt& c, long exp2) {
  if (empty_) {
    acc_ = c;
    base_exp_ = exp2;
    empty_ = false;
    return;
  }
  if (exp2 < base_exp_) {
    mpz_mul_2exp(acc_.get_mpz_t(), acc_.get_mpz_t(), static_cast<mp_bitcnt_t>(base_exp_ - exp2));
    base_exp_ = exp2;
  }
  ExactInt shifted = c;
  mpz_mul_2exp(shifted.get_mpz_t(), shifted.get_mpz_t(), static_cast<mp_bitcnt_t>(exp2 - base_exp_));
  acc_ += shifted;
}

mpq_class DyadicSum::value() const {
  if (empty_) return mpq_class(0);
  mpq_class q = dyadic(acc_, base_exp_);
  q.canonicalize();
  return q;
}

bool DyadicSum::is_integer() const {
  if (empty_ || base_exp_ >= 0 || acc_ == 0) return true;
  return mpz_divisible_2exp_p(acc_.get_mpz_t(), static_cast<mp_bitcnt_t>(-base_exp_)) != 0;
}

ExactInt DyadicSum::to_integer(const char* what) const {
  if (empty_) return 0;
  if (!is_integer()) {
    fail(ErrorCode::Integrality, std::string(what) + ": closed form evaluated to the non-integer " + value().get_str());
  }
  ExactInt r = acc_;
  if (base_exp_ >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(base_exp_));
  } else {
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), pow2(-base_exp_).get_mpz_t());
  }
  return r;
}

// ---- binomials --------------------------------------------------------------

ExactInt binom(long y, long z) {
  if (y < 0 || z < 0 || z > y) return 0;
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(y), static_cast<unsigned long>(z));
  return r;
}

ExactInt psi(long y, long z) { return binom(y, z) + binom(y + 1, z + 1); }

long block_index(int k, long b, long j, long r) { return b * k * (k - 1) - 1 + (j - 1) * k + r; }

// ---- closed forms -----------------------------------------------------------

bool q_zero_predicate(int k, long m, long r) {
  require_order(k);
  require(m >= 0 && r >= 0 && r <= k - 2, "zero predicate needs m >= 0 and 0 <= r <= k-2");
  return m < r;
}

ExactInt q_diagonal(int k, long m) {
  require_order(k);
  require(m >= 1 && m <= k - 2, "diagonal form needs m in [1, k-2]");
  return -pow2(m - 1);
}

ExactInt q_closed_small(int k, long m, long r) {
  require_order(k);
  require(m >= 1 && m <= k - 2, "small-block form needs m in [1, k-2]");
  require(r >= 0 && r <= m, "small-block form needs r in [0, m]");
  DyadicSum sum;
  const int s = odd(r) ? -1 : 1;
  sum.add(s * psi(m - 1, r - 1), m - r);
  sum.add(s * psi(m - 1, r), m - r - 2);
  return sum.to_integer("q_closed_small");
}

ExactInt q_closed_general(int k, long m, long r) {
  require_order(k);
  long upper;
  if (k == 2) {
    require(r == -1 || r == 0, "for k = 2 the general form needs r in {-1, 0}");
    require(m >= 1, "for k = 2 the general form needs m >= 1");
    upper = m;
  } else {
    require(r >= -1 && r <= k - 2, "general form needs r in [-1, k-2]");
    require(m >= k - 2 && m >= 1, "general form needs m >= k-2");
    upper = (m + 1) / (k - 1);
  }
  return psi_series(k, m - 1, r, m - r, r, upper).to_integer("q_closed_general");
}

ExactInt q_block_diag(int k, long m, long r) {
  require_order(k);
  require(m >= 1 && m <= k - 2, "block-diagonal form needs m in [1, k-2]");
  require(r >= -1 && r <= m - 1, "block-diagonal form needs r in [-1, m-1]");
  if (r == -1) return -pow2(m - 1);
  if (r == 0) {
    DyadicSum sum;
    sum.add(m + 5, m - 2);
    return sum.to_integer("q_block_diag");
  }
  const SeqParams params(k);
  ExactInt total = 0;
  for (long j = r - 1; j <= m - 1; ++j) total += pow2(m - 1 - j) * q_at(params, j * k + r - 1);
  return -total;
}

ExactInt h_closed(int k, long m, long r) {
  require_order(k);
  require(m >= 1 && m <= k - 1, "H block form needs m in [1, k-1]");
  require(r >= -1 && r <= m - 1, "H block form needs r in [-1, m-1]");
  if (r == -1) return pow2(m - 1);
  if (r == 0) {
    DyadicSum sum;
    sum.add(-(m + 1), m - 2);
    return sum.to_integer("h_closed");
  }
  const SeqParams params(k);
  ExactInt total = 0;
  for (long j = r; j <= m - 1; ++j) total += pow2(m - 1 - j) * h_at(params, j * k + r - 1);
  return -total;
}

namespace {

void require_block(int k, long b, long j, long r) {
  require_order(k);
  require(k > 2, "block forms need k > 2");
  require(b >= 1, "block number must be >= 1");
  require(j >= 0 && j <= k - 2 && r >= 0 && r <= k - 2, "block forms need j, r in [0, k-2]");
}

}  // namespace

ExactInt block_value(int k, long b, long j, long r) {
  require_block(k, b, j, r);
  return psi_series(k, b * k + j - b - 2, r - 1, b * k + j - r - b, r + 1, b).to_integer("block_value");
}

std::vector<mpq_class> block_terms(int k, long b, long j, long r) {
  require_block(k, b, j, r);
  std::vector<mpq_class> terms;
  for (long i = 0; i <= b; ++i) {
    const long y = b * k + j - b - i - 2;
    const long e = (b - i) * k + j - r - b - i;
    mpq_class t = dyadic(psi(y, i * k + r - 2), e) + dyadic(psi(y, i * k + r - 1), e - 2);
    if (odd(i * k + r + 1)) t = -t;
    terms.push_back(t);
  }
  return terms;
}

std::vector<mpq_class> first_block_terms(int k, long j, long r) {
  require_block(k, 1, j, r);
  mpq_class t0 = dyadic(psi(k + j - 3, r - 2), k + j - r - 1) + dyadic(psi(k + j - 3, r - 1), k + j - r - 3);
  if (odd(r + 1)) t0 = -t0;
  mpq_class t1 = dyadic(psi(k + j - 4, k + r - 2), j - r - 2) + dyadic(psi(k + j - 4, k + r - 1), j - r - 4);
  if (odd(k + r + 1)) t1 = -t1;
  return {t0, t1};
}

// ---- 2-adic valuations ------------------------------------------------------

std::optional<long> nu2(const ExactInt& v) {
  if (v == 0) return std::nullopt;
  return static_cast<long>(mpz_scan1(v.get_mpz_t(), 0));
}

long nu2_binom(long y, long z) {
  require(z >= 0 && z <= y, "nu2_binom needs 0 <= z <= y");
  auto pop = [](long v) { return static_cast<long>(__builtin_popcountl(static_cast<unsigned long>(v))); };
  return pop(z) + pop(y - z) - pop(y);
}

std::optional<long> nu2_psi(long y, long z) { return nu2(psi(y, z)); }

ExactInt x_form(long y, long z) { return 4 * psi(y, z - 1) + psi(y, z); }

KummerReport kummer_audit(long y_max) {
  require(y_max >= 2, "kummer_audit needs y_max >= 2");
  KummerReport report;
  report.y_max = y_max;
  for (long y = 1; y <= y_max; ++y) {
    const ExactInt four_y_sq = ExactInt(4) * y * y;
    for (long z = 0; z <= y + 1; ++z) {
      ++report.evaluated;
      std::optional<long> v = nu2(x_form(y, z));
      if (!v) {
        ++report.zero_values;
        continue;
      }
      if (*v > report.max_valuation) {
        report.max_valuation = *v;
        report.max_at_y = y;
        report.max_at_z = z;
      }
      // v <= 2 log2(y) + 2  <=>  2^v <= 4 y^2
      if (pow2(*v) > four_y_sq) report.violations.push_back({y, z, *v});
    }
  }
  return report;
}

std::vector<FormCheck> closed_form_sweep(int k, long n_max) {
  const SeqParams params(k);
  if (n_max < 0) fail(ErrorCode::Range, "n_max must be >= 0");
  std::vector<FormCheck> out;
  FormCheck* cur = nullptr;
  auto begin = [&](const char* form) {
    out.push_back(FormCheck{form, 0, 0, ""});
    cur = &out.back();
  };
  auto check = [&](bool ok, const std::string& where) {
    ++cur->checked;
    if (!ok && cur->mismatches++ == 0) cur->first_mismatch = where;
  };
  auto at = [](long m, long r) { return "m=" + std::to_string(m) + " r=" + std::to_string(r); };

  if (k > 2) {
    begin("zero_predicate");
    for (long m = 0; m <= k - 2; ++m) {
      for (long r = 0; r <= k - 2 && m * k + r <= n_max; ++r) check(q_zero_predicate(k, m, r) == (q_at(params, m * k + r) == 0), at(m, r));
    }
    begin("diagonal");
    for (long m = 1; m <= k - 2 && m * k - 1 <= n_max; ++m) check(q_diagonal(k, m) == q_at(params, m * k - 1), at(m, -1));
    begin("small_block");
    for (long m = 1; m <= k - 2; ++m) {
      for (long r = 0; r <= m && m * k + r <= n_max; ++r) check(q_closed_small(k, m, r) == q_at(params, m * k + r), at(m, r));
    }
    begin("small_general_overlap");
    const long m = k - 2;
    for (long r = 0; r <= k - 2 && m * k + r <= n_max; ++r) check(q_closed_small(k, m, r) == q_closed_general(k, m, r), at(m, r));
    begin("q_block_diag");
    for (long mm = 1; mm <= k - 2; ++mm) {
      for (long r = -1; r <= mm - 1 && mm * k + r <= n_max; ++r) check(q_block_diag(k, mm, r) == q_at(params, mm * k + r), at(mm, r));
    }
  }
  begin("general_series");
  {
    const long r_hi = k == 2 ? 0 : k - 2;
    for (long m = std::max(k - 2, 1); m * k - 1 <= n_max; ++m) {
      for (long r = -1; r <= r_hi && m * k + r <= n_max; ++r) check(q_closed_general(k, m, r) == q_at(params, m * k + r), at(m, r));
    }
  }
  begin("h_block");
  for (long m = 1; m <= k - 1; ++m) {
    for (long r = -1; r <= m - 1 && m * k + r <= n_max; ++r) check(h_closed(k, m, r) == h_at(params, m * k + r), at(m, r));
  }
  if (k > 2) {
    begin("block_series");
    for (long b = 1; block_index(k, b, 0, 0) <= n_max; ++b) {
      for (long j = 0; j <= k - 2; ++j) {
        for (long r = 0; r <= k - 2; ++r) {
          const long idx = block_index(k, b, j, r);
          if (idx > n_max) continue;
          check(block_value(k, b, j, r) == q_at(params, idx),
                "b=" + std::to_string(b) + " j=" + std::to_string(j) + " r=" + std::to_string(r));
        }
      }
    }
    begin("first_block_terms");
    for (long j = 0; j <= k - 2; ++j) {
      for (long r = 0; r <= k - 2; ++r) {
        if (block_index(k, 1, j, r) > n_max) continue;
        check(block_terms(k, 1, j, r) == first_block_terms(k, j, r), "j=" + std::to_string(j) + " r=" + std::to_string(r));
      }
    }
  }
  return out;
}

LogMagnitude odd_k_zero_floor(int k) {
  require_order(k);
  if (k % 2 == 0) fail(ErrorCode::Parity, "the 2-adic floor applies to odd k only");
  require(k >= 3, "the 2-adic floor needs k >= 3");
  return LogMagnitude::from_int(pow2((k - 1) / 2));
}

}  // namespace lucaskit
