#include "lucaskit/log_magnitude.hpp"

#include <cmath>
#include <cstdio>

namespace lucaskit {

namespace {

const ExactInt& exact_limit() {
  static const ExactInt limit("1000000000000000000");
  return limit;
}

}  // namespace

LogMagnitude LogMagnitude::zero() {
  LogMagnitude m;
  m.exact_ = ExactInt(0);
  return m;
}

LogMagnitude LogMagnitude::from_int(const ExactInt& v) {
  if (v == 0) return zero();
  LogMagnitude m;
  m.sign_ = sgn(v);
  ExactInt a = abs(v);
  m.log10_ = lucaskit::log10(Real::from_int(a, kBits));
  if (a < exact_limit()) m.exact_ = v;
  return m;
}

LogMagnitude LogMagnitude::from_log10(const Real& log10_abs, int sign) {
  LogMagnitude m;
  m.sign_ = sign == 0 ? 0 : (sign > 0 ? 1 : -1);
  m.log10_ = log10_abs;
  return m;
}

LogMagnitude LogMagnitude::from_ln(const Real& ln_abs, int sign) {
  return from_log10(ln_abs / lucaskit::log(Real::from_long(10, std::max(kBits, ln_abs.bits()))), sign);
}

LogMagnitude LogMagnitude::from_real(const Real& v) {
  if (v.is_zero()) return zero();
  return from_log10(lucaskit::log10(abs(v)), v.sign());
}

Real LogMagnitude::ln() const { return log10_ * lucaskit::log(Real::from_long(10, log10_.bits())); }

double LogMagnitude::to_double() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::pow(10.0, log10_.to_double());
}

std::string LogMagnitude::str(int digits) const {
  if (exact_) return exact_->get_str();
  if (sign_ == 0) return "0";
  Real e = Real::from_int(floor_to_int(log10_), kBits);
  Real mant = pow(Real::from_long(10, kBits), log10_ - e);
  double md = mant.to_double();
  long ed = static_cast<long>(e.to_double());
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s%.*fe%ld", sign_ < 0 ? "-" : "", std::max(digits - 1, 0), md, ed);
  return buf;
}

std::partial_ordering LogMagnitude::operator<=>(const LogMagnitude& o) const {
  if (exact_ && o.exact_) return cmp(*exact_, *o.exact_) <=> 0;
  if (sign_ != o.sign_) return sign_ <=> o.sign_;
  if (sign_ == 0) return std::partial_ordering::equivalent;
  std::partial_ordering mag = log10_ < o.log10_   ? std::partial_ordering::less
                              : log10_ > o.log10_ ? std::partial_ordering::greater
                                                  : std::partial_ordering::equivalent;
  if (sign_ > 0) return mag;
  return 0 <=> mag;
}

}  // namespace lucaskit
