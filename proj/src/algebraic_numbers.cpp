#include "lucaskit/algebraic_numbers.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "lucaskit/errors.hpp"
#include "lucaskit/exact_engine.hpp"

namespace lucaskit {

namespace {

using cd = std::complex<double>;

Real two_pow(long e, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_si_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

double upper_double(const Real& x) { return mpfr_get_d(x.raw(), MPFR_RNDU); }

// x^k (x - 2) + 1 and its derivative x^{k-1} ((k+1) x - 2k).
Complex trinomial(const Complex& x, int k) {
  Complex v = pow(x, k) * (x - 2);
  v.re = v.re + 1;
  return v;
}
Complex trinomial_prime(const Complex& x, int k) { return pow(x, k - 1) * (x * (k + 1) - 2L * k); }
CInterval trinomial(const CInterval& x, int k) { return pow(x, k) * (x - 2) + 1; }
CInterval trinomial_prime(const CInterval& x, int k) { return pow(x, k - 1) * (x * (k + 1) - 2L * k); }
Interval trinomial(const Interval& x, int k) { return pow(x, k) * (x - 2) + 1; }

// Largest root, by Newton from x = 2 where the trinomial is increasing and
// convex, so the iterates decrease monotonically onto it. Certified by a sign
// change across a small bracket above the critical point 2k/(k+1).
Interval dominant_root(int k, mpfr_prec_t bits) {
  Real x = Real::from_long(2, bits);
  const Real tol = two_pow(-static_cast<long>(bits) + 8, bits);
  for (int it = 0; it < 4 * static_cast<int>(bits); ++it) {
    Real xk1 = pow(x, static_cast<long>(k - 1));
    Real p = xk1 * x * (x - 2) + 1;
    Real d = xk1 * (x * static_cast<long>(k + 1) - static_cast<long>(2 * k));
    Real step = p / d;
    x -= step;
    if (abs(step) <= tol) break;
  }
  const Interval critical = Interval::from_ratio(2L * k, k + 1, bits);
  const Interval bracket_lo = (Interval::from_long(1, bits) - pow(Interval::from_ratio(1, 2, bits), k)) * 2;
  for (int widen = 0; widen < 12; ++widen) {
    Real delta = two_pow(-static_cast<long>(bits) + 16 + 8 * widen, bits);
    Real lo = x - delta;
    Real hi = x + delta;
    if (!(lo > critical.hi()) || !(lo > bracket_lo.hi()) || !(hi < Real::from_long(2, bits))) continue;
    if (trinomial(Interval::point(lo), k).negative() && trinomial(Interval::point(hi), k).positive()) {
      return Interval(lo, hi);
    }
  }
  fail(ErrorCode::Certification, "dominant root bracket could not be certified");
}

// x = (2 - x)^{-1/k} e^{2 pi i j / k} is a contraction near the unit circle;
// j = 1..k-1 lands on the k-1 roots other than 1 and the dominant one.
cd inner_seed(int k, int j) {
  const double theta = 2.0 * std::numbers::pi * j / k;
  cd w = std::polar(1.0, theta);
  if (2 * j == k) w = cd(-1.0, 0.0);
  cd x = w;
  for (int it = 0; it < 80; ++it) x = std::exp(-std::log(2.0 - x) / static_cast<double>(k)) * w;
  if (2 * j == k) x = cd(x.real(), 0.0);
  return x;
}

Complex polish(const cd& seed, int k, mpfr_prec_t bits) {
  Complex x(Real::from_double(seed.real(), bits), Real::from_double(seed.imag(), bits));
  const Real tol = two_pow(-static_cast<long>(bits) + 8, bits);
  bool last = false;
  for (int it = 0; it < 200; ++it) {
    Complex step = trinomial(x, k) / trinomial_prime(x, k);
    x = x - step;
    if (last) break;
    if (abs(step) <= tol) last = true;
  }
  return x;
}

struct Disk {
  cd center;
  double radius;  // rounded up
  CInterval box;
};

bool maybe_overlap(const Disk& a, const Disk& b) {
  return std::abs(a.center - b.center) <= a.radius + b.radius + 1e-12 && a.box.overlaps(b.box);
}

RootSystem build(int k, int digits) {
  const mpfr_prec_t bits = digits_to_bits(digits);
  RootSystem rs;
  rs.k = k;
  rs.digits = digits;
  rs.bits = bits;

  const Interval gamma = dominant_root(k, bits);
  std::vector<Disk> disks;
  disks.push_back({cd(1.0, 0.0), 0.0, CInterval::real(Interval::from_long(1, bits))});
  disks.push_back({cd(gamma.mid().to_double(), 0.0), upper_double(gamma.rad()), CInterval::real(gamma)});

  std::vector<Complex> centers;
  for (int j = 1; j < k; ++j) {
    Complex c = polish(inner_seed(k, j), k, bits);
    CInterval pc = CInterval::point(c);
    Interval num = abs(trinomial(pc, k));
    Interval den = abs(trinomial_prime(pc, k));
    if (den.contains_zero()) fail(ErrorCode::Certification, "derivative vanishes near an inner root");
    Real radius = (num / den * static_cast<long>(k + 1)).hi();
    disks.push_back({cd(c.re.to_double(), c.im.to_double()), upper_double(radius), CInterval::disk(c, radius)});
    centers.push_back(std::move(c));
  }

  // k+1 pairwise disjoint disks each holding a root of a degree k+1
  // polynomial hold exactly one root each.
  for (std::size_t a = 0; a < disks.size(); ++a) {
    for (std::size_t b = a + 1; b < disks.size(); ++b) {
      if (maybe_overlap(disks[a], disks[b])) fail(ErrorCode::Certification, "root enclosures overlap");
    }
  }

  const int inner = k - 1;
  std::vector<RootEnclosure> enc(static_cast<std::size_t>(inner));
  std::vector<int> partner(static_cast<std::size_t>(inner), -1);
  for (int i = 0; i < inner; ++i) {
    const Disk& di = disks[static_cast<std::size_t>(i + 2)];
    Disk mirrored{std::conj(di.center), di.radius, conj(di.box)};
    int found = -1;
    for (int m = 0; m < inner; ++m) {
      if (!maybe_overlap(mirrored, disks[static_cast<std::size_t>(m + 2)])) continue;
      if (found >= 0) fail(ErrorCode::Certification, "conjugate enclosure is ambiguous");
      found = m;
    }
    if (found < 0) fail(ErrorCode::Certification, "conjugate enclosure not found");
    partner[static_cast<std::size_t>(i)] = found;
    RootEnclosure& e = enc[static_cast<std::size_t>(i)];
    e.box = di.box;
    e.real = found == i;
    if (e.real) {
      e.box.im = Interval::from_long(0, bits);
      e.modulus = abs(e.box.re);
    } else {
      e.modulus = abs(e.box);
    }
  }

  // Modulus classes: single real roots and conjugate pairs (upper first).
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < inner; ++i) {
    const int p = partner[static_cast<std::size_t>(i)];
    if (p == i) {
      classes.push_back({i});
    } else if (i < p) {
      const bool upper = enc[static_cast<std::size_t>(i)].box.im.positive();
      classes.push_back(upper ? std::vector<int>{i, p} : std::vector<int>{p, i});
    }
  }
  auto mod_of = [&](const std::vector<int>& c) -> const Interval& { return enc[static_cast<std::size_t>(c[0])].modulus; };
  std::sort(classes.begin(), classes.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) { return mod_of(a).mid() > mod_of(b).mid(); });
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!(mod_of(classes[c]).hi() < Real::from_long(1, bits))) {
      fail(ErrorCode::Certification, "inner root modulus not certified below 1");
    }
    if (c > 0 && !certainly_less(mod_of(classes[c]), mod_of(classes[c - 1]))) {
      fail(ErrorCode::Certification, "modulus enclosures of distinct classes overlap");
    }
  }

  RootEnclosure dom;
  dom.box = CInterval::real(gamma);
  dom.modulus = gamma;
  dom.real = true;
  dom.conjugate = 1;
  rs.roots.push_back(dom);
  std::vector<int> label(static_cast<std::size_t>(inner));
  for (const auto& c : classes) {
    for (int i : c) {
      label[static_cast<std::size_t>(i)] = static_cast<int>(rs.roots.size()) + 1;
      rs.roots.push_back(enc[static_cast<std::size_t>(i)]);
    }
  }
  for (int i = 0; i < inner; ++i) {
    rs.roots[static_cast<std::size_t>(label[static_cast<std::size_t>(i)] - 1)].conjugate =
        label[static_cast<std::size_t>(partner[static_cast<std::size_t>(i)])];
  }

  rs.real_count = static_cast<int>(std::count_if(rs.roots.begin(), rs.roots.end(), [](const RootEnclosure& r) { return r.real; }));
  const int expected_real = k % 2 == 0 ? 2 : 1;
  if (rs.real_count != expected_real) fail(ErrorCode::Certification, "unexpected number of real roots");

  rs.trace = Interval::from_long(0, bits);
  rs.modulus_product = Interval::from_long(1, bits);
  for (const RootEnclosure& r : rs.roots) {
    rs.trace = rs.trace + r.box.re;
    rs.modulus_product = rs.modulus_product * r.modulus;
  }
  return rs;
}

}  // namespace

void PrecisionPolicy::validate() const {
  if (start_digits < 32) fail(ErrorCode::Parameter, "precision policy needs start_digits >= 32");
  if (max_doublings < 1) fail(ErrorCode::Parameter, "precision policy needs max_doublings >= 1");
  if (max_doublings > 16) fail(ErrorCode::Parameter, "precision policy allows at most 16 doublings");
}

std::vector<ExactInt> char_poly(int k) {
  SeqParams{k};
  std::vector<ExactInt> c(static_cast<std::size_t>(k + 1), ExactInt(-1));
  c[0] = 1;
  return c;
}

RootSystem roots(int k, const PrecisionPolicy& policy) {
  SeqParams{k};
  policy.validate();
  // The dominant root lies within 2^{1-k} of 2, so it needs about k bits.
  int digits = std::max(policy.start_digits, static_cast<int>(std::ceil(k * 0.30103)) + 30);
  std::string last;
  for (int attempt = 0; attempt <= policy.max_doublings; ++attempt, digits *= 2) {
    try {
      return build(k, digits);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Certification) throw;
      last = e.what();
    }
  }
  fail(ErrorCode::Certification, "k=" + std::to_string(k) + ": " + last + " at " + std::to_string(digits / 2) + " digits");
}

std::shared_ptr<const RootSystem> shared_roots(int k, const PrecisionPolicy& policy) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const RootSystem>> cache;
  const auto key = std::make_tuple(k, policy.start_digits, policy.max_doublings);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto rs = std::make_shared<const RootSystem>(roots(k, policy));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, rs).first->second;
}

CInterval f_value(int k, const CInterval& x) {
  CInterval den = (x - 2) * (k + 1) + 2;
  if (den.contains_zero()) fail(ErrorCode::Domain, "f_k denominator vanishes on the given enclosure");
  return (x - 1) / den;
}

Interval f_value(int k, const Interval& x) {
  Interval den = (x - 2) * (k + 1) + 2;
  if (den.contains_zero()) fail(ErrorCode::Domain, "f_k denominator vanishes on the given enclosure");
  return (x - 1) / den;
}

bool BinetEval::residual_ok() const { return residual.hi() < Real::from_double(1.5, residual.bits()); }
bool BinetEval::full_sum_rounds() const { return full_error < Real::from_double(0.5, full_error.bits()); }

BinetEval binet_eval(const RootSystem& rs, long n) {
  const int k = rs.k;
  if (n < 2 - k) fail(ErrorCode::Domain, "the root-power formula holds for n >= 2 - k");
  const mpfr_prec_t bits = rs.bits;
  BinetEval out;
  out.k = k;
  out.n = n;
  out.exact = lucas_at(SeqParams(k), n);
  const Interval exact = Interval::from_int(out.exact, bits);

  const Interval& g = rs.gamma();
  out.dominant = f_value(k, g) * (g * 2 - 1) * pow(g, n - 1);
  out.residual = abs(exact - out.dominant);

  CInterval sum = CInterval::real(Interval::from_long(0, bits));
  for (const RootEnclosure& r : rs.roots) sum = sum + f_value(k, r.box) * (r.box * 2 - 1) * pow(r.box, n - 1);
  out.full_sum = sum;
  if (sum.re.width() > Real::from_double(0.25, bits)) {
    fail(ErrorCode::PrecisionExhausted, "root-power sum enclosure too wide at n=" + std::to_string(n) + "; raise --digits");
  }
  out.full_error = (abs(sum.re - exact) + abs(sum.im)).hi();
  return out;
}

BinetEval binet_eval(int k, long n, const PrecisionPolicy& policy) { return binet_eval(*shared_roots(k, policy), n); }

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

bool RootPropertyAudit::pass() const {
  return std::none_of(items.begin(), items.end(), [](const AuditItem& i) { return i.status == CheckStatus::Fail; });
}

Interval min_modulus_ratio(const RootSystem& rs) {
  std::optional<Interval> best;
  for (int i = 1; i < rs.k; ++i) {
    if (rs.at(i).conjugate == i + 1) continue;
    Interval ratio = rs.at(i).modulus / rs.at(i + 1).modulus;
    if (!best || ratio.lo() < best->lo()) best = ratio;
  }
  return *best;
}

namespace {

AuditItem item(std::string id, std::string statement) {
  AuditItem it;
  it.id = std::move(id);
  it.statement = std::move(statement);
  return it;
}

void decide(AuditItem& it, bool ok, std::string detail) {
  it.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  it.detail = std::move(detail);
}

// Threshold above which a certified lower bound must lie.
bool above(const Interval& x, const Interval& threshold) { return x.lo() > threshold.hi(); }
bool below(const Interval& x, const Interval& threshold) { return x.hi() < threshold.lo(); }

}  // namespace

RootPropertyAudit root_property_audit(int k, const PrecisionPolicy& policy) {
  SeqParams{k};
  policy.validate();
  const bool cubic_gap = k <= 12;
  const bool even_gap = k % 2 == 0 && k >= 4 && k <= 20;
  int digits = std::max(policy.start_digits, static_cast<int>(std::ceil(k * 0.30103)) + 30);
  if (cubic_gap) digits = std::max(digits, static_cast<int>(std::ceil(std::pow(k, 3) * std::log10(1.454))) + 40);
  if (even_gap) digits = std::max(digits, static_cast<int>(std::ceil(k * k * std::log10(k))) + 40);
  if (digits > policy.max_digits()) {
    fail(ErrorCode::Feasibility, "k=" + std::to_string(k) + " needs " + std::to_string(digits) +
                                     " digits, policy allows " + std::to_string(policy.max_digits()));
  }
  PrecisionPolicy raised = policy;
  raised.start_digits = digits;
  const RootSystem& rs = *shared_roots(k, raised);
  const mpfr_prec_t bits = rs.bits;
  auto num = [bits](long v) { return Interval::from_long(v, bits); };
  const Interval one = num(1);

  RootPropertyAudit out;
  out.k = k;
  out.digits = rs.digits;
  out.real_roots = rs.real_count;
  out.min_inner_modulus = rs.min_inner_modulus();
  out.trace = rs.trace;
  out.modulus_product = rs.modulus_product;

  const Interval ratio = min_modulus_ratio(rs);
  const Interval& g = rs.gamma();
  const Interval fg = f_value(k, g);
  const Interval& mk = rs.smallest().modulus;
  const Interval fk = abs(f_value(k, rs.smallest().box));
  const Interval logg = log(g);

  {
    AuditItem it = item("ratio_gap_cubic", "|g_i|/|g_j| > 1 + 1.454^(-k^3) whenever |g_i| > |g_j|");
    if (cubic_gap) {
      Interval thr = one + exp(-(log(Interval::from_string("1.454", bits)) * (static_cast<long>(k) * k * k)));
      decide(it, above(ratio, thr), "min ratio " + ratio.lo().str(12));
    } else {
      it.detail = "outside feasibility range k <= 12";
    }
    out.items.push_back(it);
  }
  {
    AuditItem it = item("f_gamma_range", "1/2 <= f_k(g) <= 3/4");
    decide(it, fg.lo() >= Real::from_double(0.5, bits) && fg.hi() <= Real::from_double(0.75, bits),
           "f_k(g) = " + fg.mid().str(15));
    out.items.push_back(it);
  }
  {
    AuditItem it = item("f_inner_bound", "|f_k(g_i)| < min(1/2, 2/(k-1)) for i >= 2");
    Interval cap = k >= 5 ? Interval::from_ratio(2, k - 1, bits) : Interval::from_ratio(1, 2, bits);
    Interval worst = num(0);
    for (int i = 2; i <= k; ++i) {
      Interval v = abs(f_value(k, rs.at(i).box));
      if (v.hi() > worst.hi()) worst = v;
    }
    decide(it, below(worst, cap), "max |f_k(g_i)| " + worst.hi().str(12));
    out.items.push_back(it);
  }
  {
    AuditItem it = item("smallest_root_log_bound", "|g_k| < 1 - log(g)/(2k) and |f_k(g_k)| > log(g)/(2k(3k+1))");
    Interval r1 = one - logg / num(2L * k);
    Interval r2 = logg / num(2L * k * (3L * k + 1));
    decide(it, below(mk, r1) && above(fk, r2), "|g_k| " + mk.mid().str(15) + ", |f_k(g_k)| " + fk.mid().str(12));
    out.items.push_back(it);
  }
  {
    AuditItem it = item("smallest_root_poly_bound", "|g_k| < 1 - 1/(2^8 k^3) and |f_k(g_k)| > 1/(2^8 k^3 (3k+1))");
    const long c = 256L * k * k * k;
    Interval r1 = one - one / num(c);
    Interval r2 = one / (num(c) * (3L * k + 1));
    decide(it, below(mk, r1) && above(fk, r2), "|g_k| " + mk.mid().str(15) + ", |f_k(g_k)| " + fk.mid().str(12));
    out.items.push_back(it);
  }
  {
    AuditItem it = item("even_ratio_gap", "k even: |g_{k-1}|/|g_k| > 1 + k^(-k^2)");
    if (even_gap) {
      Interval r = rs.at(k - 1).modulus / rs.at(k).modulus;
      Interval thr = one + exp(-(log(num(k)) * (static_cast<long>(k) * k)));
      decide(it, above(r, thr), "ratio " + r.lo().str(12));
    } else {
      it.detail = k % 2 == 0 ? "outside feasibility range k <= 20" : "odd k";
    }
    out.items.push_back(it);
  }
  {
    AuditItem it = item("ratio_gap_exponential", "|g_i|/|g_j| > 1 + 1/(10 k^9.6 (pi/e)^k) whenever |g_i| > |g_j|");
    if (k >= 4) {
      Interval pe = Interval::pi(bits) / exp(one);
      Interval den = exp(log(num(k)) * Interval::from_string("9.6", bits)) * pow(pe, k) * 10;
      Interval thr = one + one / den;
      decide(it, above(ratio, thr), "min ratio " + ratio.lo().str(12));
    } else {
      it.detail = "applies to k >= 4";
    }
    out.items.push_back(it);
  }
  {
    AuditItem it = item("inner_moduli_below_one", "|g_i| < 1 for i >= 2; min modulus recorded");
    decide(it, rs.at(2).modulus.hi() < Real::from_long(1, bits), "min |g_i| " + out.min_inner_modulus.mid().str(15));
    out.items.push_back(it);
  }
  return out;
}

}  // namespace lucaskit
