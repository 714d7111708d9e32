#include "fc/log_real.hpp"

#include "fc/errors.hpp"

#include <stdexcept>
#include <utility>

namespace fc {

LogReal LogReal::from_real(const Real& value, Round r) {
  if (!value.is_finite()) throw std::invalid_argument("LogReal from non-finite value");
  LogReal out;
  if (value.is_zero()) return out;
  out.sign_ = value.sign() > 0 ? 1 : -1;
  out.log_mag_ = log(abs(value), r);
  return out;
}

LogReal LogReal::from_log(Real log_mag, int sign) {
  LogReal out;
  if (sign == 0) return out;
  out.sign_ = sign > 0 ? 1 : -1;
  out.log_mag_ = std::move(log_mag);
  return out;
}

bool LogReal::representable() const {
  return is_zero() || log_mag_ <= Real(kOverflowLog);
}

Real LogReal::to_real(Round r) const {
  if (is_zero()) return Real(0L);
  if (!representable()) {
    throw DomainError("LogReal magnitude exp(" + log_mag_.to_general(6) +
                      ") exceeds the plain-real range");
  }
  // Magnitude rounding follows r for positive values, the opposite for negative.
  const Round mag_dir = sign_ > 0 ? r : opposite(r);
  Real mag = exp(log_mag_, mag_dir);
  return sign_ > 0 ? mag : neg(mag);
}

std::string LogReal::render(int significant) const {
  if (is_zero()) return "0";
  if (log_mag_ < Real(34.5)) return to_real(Round::up).to_general(significant);
  std::string out = sign_ < 0 ? "-exp(" : "exp(";
  return out + log_mag_.to_general(significant) + ")";
}

LogReal operator*(const LogReal& a, const LogReal& b) {
  if (a.is_zero() || b.is_zero()) return LogReal::zero();
  return LogReal::from_log(add(a.log_mag_, b.log_mag_, Round::up), a.sign_ * b.sign_);
}

LogReal operator/(const LogReal& a, const LogReal& b) {
  if (b.is_zero()) throw DomainError("LogReal division by zero");
  if (a.is_zero()) return LogReal::zero();
  return LogReal::from_log(sub(a.log_mag_, b.log_mag_, Round::up), a.sign_ * b.sign_);
}

LogReal operator+(const LogReal& a, const LogReal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.sign_ != b.sign_) throw std::logic_error("LogReal addition requires equal signs");
  const bool a_big = !(a.log_mag_ < b.log_mag_);
  const Real& hi = a_big ? a.log_mag_ : b.log_mag_;
  const Real& lo = a_big ? b.log_mag_ : a.log_mag_;
  // log(e^hi + e^lo) = hi + log1p(e^{lo-hi}), every step rounded up.
  Real gap = sub(lo, hi, Round::up);
  Real tail = log1p(exp(gap, Round::up), Round::up);
  return LogReal::from_log(add(hi, tail, Round::up), a.sign_);
}

bool operator<(const LogReal& a, const LogReal& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  if (a.sign_ == 0) return false;
  return a.sign_ > 0 ? a.log_mag_ < b.log_mag_ : b.log_mag_ < a.log_mag_;
}

}  // namespace fc
