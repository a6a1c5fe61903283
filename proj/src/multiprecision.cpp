#include "lucaskit/multiprecision.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "lucaskit/errors.hpp"

namespace lucaskit {

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 16;
}

int bits_to_digits(mpfr_prec_t bits) {
  return static_cast<int>(std::floor((bits - 16) / 3.321928094887362));
}

// ---- Real -------------------------------------------------------------------

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.bits());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_long(long v, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_si(r.value_, v, MPFR_RNDN);
  return r;
}

Real Real::from_double(double v, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_d(r.value_, v, MPFR_RNDN);
  return r;
}

Real Real::from_int(const ExactInt& v, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Real r(bits);
  mpfr_set_z(r.value_, v.get_mpz_t(), rnd);
  return r;
}

Real Real::from_string(const std::string& s, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Real r(bits);
  if (mpfr_set_str(r.value_, s.c_str(), 10, rnd) != 0) {
    fail(ErrorCode::Parameter, "not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::pi(mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Real r(bits);
  mpfr_const_pi(r.value_, rnd);
  return r;
}

Real Real::infinity(mpfr_prec_t bits, int sign) {
  Real r(bits);
  mpfr_set_inf(r.value_, sign);
  return r;
}

std::string Real::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Real::fixed(int decimals) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", decimals, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

Real& Real::operator+=(const Real& o) {
  *this = *this + o;
  return *this;
}
Real& Real::operator-=(const Real& o) {
  *this = *this - o;
  return *this;
}
Real& Real::operator*=(const Real& o) {
  *this = *this * o;
  return *this;
}
Real& Real::operator/=(const Real& o) {
  *this = *this / o;
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a) {
  Real r(a.bits());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.bits());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(a.bits());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r(a.bits());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(a.bits());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

Real abs(const Real& x) {
  Real r(x.bits());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real sqrt(const Real& x) {
  Real r(x.bits());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real log(const Real& x) {
  Real r(x.bits());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real log10(const Real& x) {
  Real r(x.bits());
  mpfr_log10(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real exp(const Real& x) {
  Real r(x.bits());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real atan2(const Real& y, const Real& x) {
  Real r(wider(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real pow(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
Real pow(const Real& x, long n) {
  Real r(x.bits());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

ExactInt floor_to_int(const Real& x) {
  ExactInt z;
  mpfr_get_z(z.get_mpz_t(), x.raw(), MPFR_RNDD);
  return z;
}
ExactInt ceil_to_int(const Real& x) {
  ExactInt z;
  mpfr_get_z(z.get_mpz_t(), x.raw(), MPFR_RNDU);
  return z;
}
ExactInt round_to_int(const Real& x) {
  ExactInt z;
  mpfr_get_z(z.get_mpz_t(), x.raw(), MPFR_RNDN);
  return z;
}

// ---- Interval ---------------------------------------------------------------

namespace {

using MpfrBinary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Real rounded(MpfrBinary op, const Real& a, const Real& b, mpfr_rnd_t rnd, mpfr_prec_t bits) {
  Real r(bits);
  op(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

Real rounded(MpfrUnary op, const Real& a, mpfr_rnd_t rnd) {
  Real r(a.bits());
  op(r.raw(), a.raw(), rnd);
  return r;
}

mpfr_prec_t wider(const Interval& a, const Interval& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

Interval::Interval(mpfr_prec_t bits) : lo_(bits), hi_(bits) {}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) fail(ErrorCode::Domain, "interval with lo > hi");
}

mpfr_prec_t Interval::bits() const { return std::max(lo_.bits(), hi_.bits()); }

Interval Interval::point(const Real& x) { return Interval(x, x); }

Interval Interval::from_long(long v, mpfr_prec_t bits) {
  Real lo(bits), hi(bits);
  mpfr_set_si(lo.raw(), v, MPFR_RNDD);
  mpfr_set_si(hi.raw(), v, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_int(const ExactInt& v, mpfr_prec_t bits) {
  return Interval(Real::from_int(v, bits, MPFR_RNDD), Real::from_int(v, bits, MPFR_RNDU));
}

Interval Interval::from_ratio(long num, long den, mpfr_prec_t bits) {
  return from_long(num, bits) / from_long(den, bits);
}

Interval Interval::from_string(const std::string& decimal, mpfr_prec_t bits) {
  return Interval(Real::from_string(decimal, bits, MPFR_RNDD), Real::from_string(decimal, bits, MPFR_RNDU));
}

Interval Interval::around(const Real& center, const Real& radius) {
  mpfr_prec_t bits = std::max(center.bits(), radius.bits());
  return Interval(rounded(mpfr_sub, center, radius, MPFR_RNDD, bits),
                  rounded(mpfr_add, center, radius, MPFR_RNDU, bits));
}

Interval Interval::pi(mpfr_prec_t bits) { return Interval(Real::pi(bits, MPFR_RNDD), Real::pi(bits, MPFR_RNDU)); }

Real Interval::mid() const {
  Real m(bits() + 1);
  mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
  mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
  Real out(bits());
  mpfr_set(out.raw(), m.raw(), MPFR_RNDN);
  return out;
}

Real Interval::rad() const {
  Real m = mid();
  Real a = rounded(mpfr_sub, hi_, m, MPFR_RNDU, bits());
  Real b = rounded(mpfr_sub, m, lo_, MPFR_RNDU, bits());
  return max(a, b);
}

Real Interval::width() const { return rounded(mpfr_sub, hi_, lo_, MPFR_RNDU, bits()); }

Real Interval::mag() const { return max(abs(lo_), abs(hi_)); }

Real Interval::mig() const {
  if (contains_zero()) return Real(bits());
  return min(abs(lo_), abs(hi_));
}

bool Interval::contains(const Real& x) const { return lo_ <= x && x <= hi_; }
bool Interval::contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
bool Interval::overlaps(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }

std::string Interval::str(int digits) const { return "[" + lo_.str(digits) + ", " + hi_.str(digits) + "]"; }

Interval operator+(const Interval& a, const Interval& b) {
  mpfr_prec_t p = wider(a, b);
  return Interval(rounded(mpfr_add, a.lo(), b.lo(), MPFR_RNDD, p), rounded(mpfr_add, a.hi(), b.hi(), MPFR_RNDU, p));
}

Interval operator-(const Interval& a, const Interval& b) {
  mpfr_prec_t p = wider(a, b);
  return Interval(rounded(mpfr_sub, a.lo(), b.hi(), MPFR_RNDD, p), rounded(mpfr_sub, a.hi(), b.lo(), MPFR_RNDU, p));
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = wider(a, b);
  const Real* xs[2] = {&a.lo(), &a.hi()};
  const Real* ys[2] = {&b.lo(), &b.hi()};
  Real lo = Real::infinity(p, 1);
  Real hi = Real::infinity(p, -1);
  for (const Real* x : xs) {
    for (const Real* y : ys) {
      Real d = rounded(mpfr_mul, *x, *y, MPFR_RNDD, p);
      Real u = rounded(mpfr_mul, *x, *y, MPFR_RNDU, p);
      if (d < lo) lo = d;
      if (u > hi) hi = u;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) fail(ErrorCode::Domain, "interval division by an interval containing zero");
  mpfr_prec_t p = wider(a, b);
  Interval inv(rounded(mpfr_div, Real::from_long(1, p), b.hi(), MPFR_RNDD, p),
               rounded(mpfr_div, Real::from_long(1, p), b.lo(), MPFR_RNDU, p));
  return a * inv;
}

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval operator*(const Interval& a, long b) { return a * Interval::from_long(b, a.bits()); }
Interval operator+(const Interval& a, long b) { return a + Interval::from_long(b, a.bits()); }
Interval operator-(const Interval& a, long b) { return a - Interval::from_long(b, a.bits()); }

Interval sqr(const Interval& x) {
  Real m = x.mig();
  Real M = x.mag();
  Real lo(x.bits()), hi(x.bits());
  mpfr_sqr(lo.raw(), m.raw(), MPFR_RNDD);
  mpfr_sqr(hi.raw(), M.raw(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(const Interval& x) {
  if (x.lo().sign() < 0) fail(ErrorCode::Domain, "sqrt of an interval with negative part");
  return Interval(rounded(mpfr_sqrt, x.lo(), MPFR_RNDD), rounded(mpfr_sqrt, x.hi(), MPFR_RNDU));
}

Interval log(const Interval& x) {
  if (!x.positive()) fail(ErrorCode::Domain, "log of a non-positive interval");
  return Interval(rounded(mpfr_log, x.lo(), MPFR_RNDD), rounded(mpfr_log, x.hi(), MPFR_RNDU));
}

Interval exp(const Interval& x) {
  return Interval(rounded(mpfr_exp, x.lo(), MPFR_RNDD), rounded(mpfr_exp, x.hi(), MPFR_RNDU));
}

Interval abs(const Interval& x) { return Interval(x.mig(), x.mag()); }

Interval pow(const Interval& x, long n) {
  if (n < 0) return Interval::from_long(1, x.bits()) / pow(x, -n);
  Interval result = Interval::from_long(1, x.bits());
  Interval base = x;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      result = first ? base : result * base;
      first = false;
    }
    n >>= 1;
    if (n > 0) base = sqr(base);
  }
  return result;
}

Interval hull(const Interval& a, const Interval& b) { return Interval(min(a.lo(), b.lo()), max(a.hi(), b.hi())); }

Interval atan2(const Interval& y, const Interval& x) {
  if (y.contains_zero() && x.lo().sign() <= 0) {
    fail(ErrorCode::Certification, "argument enclosure meets the branch cut");
  }
  mpfr_prec_t p = wider(y, x);
  const Real* ys[2] = {&y.lo(), &y.hi()};
  const Real* xs[2] = {&x.lo(), &x.hi()};
  Real lo = Real::infinity(p, 1);
  Real hi = Real::infinity(p, -1);
  for (const Real* a : ys) {
    for (const Real* b : xs) {
      Real d = rounded(mpfr_atan2, *a, *b, MPFR_RNDD, p);
      Real u = rounded(mpfr_atan2, *a, *b, MPFR_RNDU, p);
      if (d < lo) lo = d;
      if (u > hi) hi = u;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

bool certainly_less(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }

// ---- Complex ----------------------------------------------------------------

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }
Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}
Complex operator*(const Complex& a, long b) { return Complex(a.re * b, a.im * b); }
Complex operator-(const Complex& a, long b) { return Complex(a.re - b, a.im); }

Complex pow(const Complex& z, long n) {
  mpfr_prec_t p = std::max(z.re.bits(), z.im.bits());
  if (n < 0) return Complex(Real::from_long(1, p), Real(p)) / pow(z, -n);
  Complex result(Real::from_long(1, p), Real(p));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Real abs(const Complex& z) {
  Real r(std::max(z.re.bits(), z.im.bits()));
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

// ---- CInterval --------------------------------------------------------------

CInterval CInterval::point(const Complex& z) { return CInterval(Interval::point(z.re), Interval::point(z.im)); }

CInterval CInterval::real(const Interval& x) { return CInterval(x, Interval(x.bits())); }

CInterval CInterval::disk(const Complex& center, const Real& radius) {
  return CInterval(Interval::around(center.re, radius), Interval::around(center.im, radius));
}

CInterval operator+(const CInterval& a, const CInterval& b) { return CInterval(a.re + b.re, a.im + b.im); }
CInterval operator-(const CInterval& a, const CInterval& b) { return CInterval(a.re - b.re, a.im - b.im); }
CInterval operator*(const CInterval& a, const CInterval& b) {
  return CInterval(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
CInterval operator/(const CInterval& a, const CInterval& b) {
  Interval d = sqr(b.re) + sqr(b.im);
  return CInterval((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}
CInterval operator*(const CInterval& a, const Interval& b) { return CInterval(a.re * b, a.im * b); }
CInterval operator*(const CInterval& a, long b) { return CInterval(a.re * b, a.im * b); }
CInterval operator+(const CInterval& a, long b) { return CInterval(a.re + b, a.im); }
CInterval operator-(const CInterval& a, long b) { return CInterval(a.re - b, a.im); }

CInterval pow(const CInterval& z, long n) {
  mpfr_prec_t p = std::max(z.re.bits(), z.im.bits());
  if (n < 0) return CInterval::real(Interval::from_long(1, p)) / pow(z, -n);
  CInterval result = CInterval::real(Interval::from_long(1, p));
  CInterval base = z;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      result = first ? base : result * base;
      first = false;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

CInterval conj(const CInterval& z) { return CInterval(z.re, -z.im); }

Interval abs(const CInterval& z) { return sqrt(sqr(z.re) + sqr(z.im)); }

Interval arg(const CInterval& z) {
  if (z.contains_zero()) fail(ErrorCode::Certification, "argument of a box containing zero");
  return atan2(z.im, z.re);
}

}  // namespace lucaskit
