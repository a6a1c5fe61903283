#pragma once

// Arbitrary-precision scalars used across the library.
//
// ExactInt is GMP's mpz_class. Real is an owning MPFR value; every
// arithmetic operator rounds to nearest at the larger operand precision.
// Interval carries outward-rounded bounds and is what certification code
// reasons with: a claim is "certified" when it holds for every point of the
// interval.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace lucaskit {

using ExactInt = mpz_class;

mpfr_prec_t digits_to_bits(int digits);
int bits_to_digits(mpfr_prec_t bits);

class Real {
 public:
  explicit Real(mpfr_prec_t bits = 256);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_long(long v, mpfr_prec_t bits);
  static Real from_double(double v, mpfr_prec_t bits);
  static Real from_int(const ExactInt& v, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real from_string(const std::string& s, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real pi(mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real infinity(mpfr_prec_t bits, int sign = 1);

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  // Scientific notation with `digits` significant digits.
  std::string str(int digits = 20) const;
  // Fixed notation with `decimals` digits after the point.
  std::string fixed(int decimals) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

 private:
  mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real exp(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
ExactInt floor_to_int(const Real& x);
ExactInt ceil_to_int(const Real& x);
ExactInt round_to_int(const Real& x);

// Closed interval [lo, hi] with outward rounding on every operation.
class Interval {
 public:
  explicit Interval(mpfr_prec_t bits = 256);
  Interval(Real lo, Real hi);

  static Interval point(const Real& x);
  static Interval from_long(long v, mpfr_prec_t bits);
  static Interval from_int(const ExactInt& v, mpfr_prec_t bits);
  static Interval from_ratio(long num, long den, mpfr_prec_t bits);
  static Interval from_string(const std::string& decimal, mpfr_prec_t bits);
  static Interval around(const Real& center, const Real& radius);
  static Interval pi(mpfr_prec_t bits);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  mpfr_prec_t bits() const;

  Real mid() const;
  // Upper bound on max(|x - mid()|) over the interval.
  Real rad() const;
  Real width() const;
  // Upper bound on |x| over the interval.
  Real mag() const;
  // Lower bound on |x| over the interval.
  Real mig() const;

  bool contains(const Real& x) const;
  bool contains_zero() const;
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }
  bool overlaps(const Interval& o) const;

  std::string str(int digits = 20) const;

 private:
  Real lo_;
  Real hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, long b);
Interval operator+(const Interval& a, long b);
Interval operator-(const Interval& a, long b);

Interval sqr(const Interval& x);
Interval sqrt(const Interval& x);
Interval log(const Interval& x);
Interval exp(const Interval& x);
Interval abs(const Interval& x);
Interval pow(const Interval& x, long n);
Interval hull(const Interval& a, const Interval& b);
// atan2 over a box that does not meet the branch cut (the closed negative real axis).
Interval atan2(const Interval& y, const Interval& x);

// True when every point of a is strictly below every point of b.
bool certainly_less(const Interval& a, const Interval& b);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t bits = 256) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
Complex pow(const Complex& z, long n);
Real abs(const Complex& z);
Complex conj(const Complex& z);

// Axis-aligned box in the complex plane.
struct CInterval {
  Interval re;
  Interval im;

  explicit CInterval(mpfr_prec_t bits = 256) : re(bits), im(bits) {}
  CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  static CInterval point(const Complex& z);
  static CInterval real(const Interval& x);
  // Box covering the closed disk of the given radius.
  static CInterval disk(const Complex& center, const Real& radius);

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool overlaps(const CInterval& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }
  Complex mid() const { return Complex(re.mid(), im.mid()); }
};

CInterval operator+(const CInterval& a, const CInterval& b);
CInterval operator-(const CInterval& a, const CInterval& b);
CInterval operator*(const CInterval& a, const CInterval& b);
CInterval operator/(const CInterval& a, const CInterval& b);
CInterval operator*(const CInterval& a, const Interval& b);
CInterval operator*(const CInterval& a, long b);
CInterval operator+(const CInterval& a, long b);
CInterval operator-(const CInterval& a, long b);
CInterval pow(const CInterval& z, long n);
CInterval conj(const CInterval& z);
Interval abs(const CInterval& z);
Interval arg(const CInterval& z);

}  // namespace lucaskit
