#pragma once

#include "fc/real.hpp"

#include <string>

namespace fc {

/// A real number stored as sign and natural log of its magnitude.
///
/// Bound values such as e^{28.2d+5}(d+1)^{(5d+5)/2}|D| overflow doubles at
/// modest degree, so the whole error-bound chain is carried in log scale.
/// Products and sums round the magnitude upward: a LogReal built from
/// overestimates stays an overestimate.
class LogReal {
 public:
  /// Natural log of the largest finite double; `to_real` refuses beyond it.
  static constexpr double kOverflowLog = 709.78;

  LogReal() = default;  // zero

  static LogReal zero() { return {}; }
  /// `value` must be finite; magnitude log rounded in direction `r`.
  static LogReal from_real(const Real& value, Round r = Round::up);
  static LogReal from_log(Real log_mag, int sign = 1);

  int sign() const noexcept { return sign_; }
  bool is_zero() const noexcept { return sign_ == 0; }
  /// Meaningless when zero.
  const Real& log_mag() const noexcept { return log_mag_; }

  bool representable() const;
  /// Throws fc::DomainError when the magnitude exceeds kOverflowLog.
  Real to_real(Round r = Round::up) const;

  /// Plain decimal when representable and below 1e15, `exp(L)` otherwise.
  std::string render(int significant = 6) const;

  friend LogReal operator*(const LogReal& a, const LogReal& b);
  friend LogReal operator/(const LogReal& a, const LogReal& b);
  /// Same-sign addition (log-sum-exp). Mixed signs throw std::logic_error.
  friend LogReal operator+(const LogReal& a, const LogReal& b);

  friend bool operator<(const LogReal& a, const LogReal& b);

 private:
  int sign_ = 0;
  Real log_mag_;
};

}  // namespace fc
