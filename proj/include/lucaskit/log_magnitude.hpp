#pragma once

#include <compare>
#include <optional>
#include <string>

#include "lucaskit/multiprecision.hpp"

namespace lucaskit {

// Sign plus base-10 logarithm, for bounds far outside machine range.
// Integers below 10^18 in magnitude also keep their exact value.
class LogMagnitude {
 public:
  static constexpr mpfr_prec_t kBits = 256;

  static LogMagnitude zero();
  static LogMagnitude from_int(const ExactInt& v);
  static LogMagnitude from_log10(const Real& log10_abs, int sign = 1);
  static LogMagnitude from_ln(const Real& ln_abs, int sign = 1);
  static LogMagnitude from_real(const Real& v);

  int sign() const { return sign_; }
  // Meaningless when sign() == 0.
  const Real& log10() const { return log10_; }
  Real ln() const;
  const std::optional<ExactInt>& exact() const { return exact_; }

  double to_double() const;
  // "7.70245e10" style; exact integers print in full.
  std::string str(int digits = 6) const;

  std::partial_ordering operator<=>(const LogMagnitude& o) const;
  bool operator==(const LogMagnitude& o) const { return (*this <=> o) == std::partial_ordering::equivalent; }

 private:
  int sign_ = 0;
  Real log10_{kBits};
  std::optional<ExactInt> exact_;
};

}  // namespace lucaskit
