#pragma once

// Multiple-precision reals with explicit rounding direction.
//
// Every bound in this library is an overestimate, so most call sites pass
// Round::up (or Round::down for quantities that end up in a denominator).
// Rounding directions compose: if each operation is monotone in its inputs
// and rounded in the direction the final bound needs, the final value is on
// the safe side of the true one.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace fc {

enum class Round { nearest, up, down };

/// Mantissa bits used for newly constructed values (process-wide, default 96).
mpfr_prec_t working_precision() noexcept;
void set_working_precision(mpfr_prec_t bits);

/// RAII guard that restores the previous working precision.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(mpfr_prec_t bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  mpfr_prec_t saved_;
};

class Real {
 public:
  Real();
  Real(double v);  // NOLINT(google-explicit-constructor): exact for doubles
  Real(long v);    // NOLINT
  Real(int v) : Real(static_cast<long>(v)) {}  // NOLINT

  /// Zero with the given precision (the default constructor uses the working precision).
  static Real with_precision(mpfr_prec_t prec);
  static Real from_string(std::string_view decimal, Round r = Round::nearest);
  static Real from_mpz(const mpz_class& z, Round r = Round::nearest);
  static Real from_mpq(const mpq_class& q, Round r = Round::nearest);
  static Real euler_gamma(Round r);
  static Real pi(Round r);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  double to_double(Round r = Round::nearest) const;
  /// Fixed-point rendering with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;
  /// Shortest general rendering with `significant` digits (like %g).
  std::string to_general(int significant) const;

  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b);

 private:
  mpfr_t value_;
};

mpfr_rnd_t to_mpfr(Round r) noexcept;

Real add(const Real& a, const Real& b, Round r = Round::nearest);
Real sub(const Real& a, const Real& b, Round r = Round::nearest);
Real mul(const Real& a, const Real& b, Round r = Round::nearest);
Real div(const Real& a, const Real& b, Round r = Round::nearest);
Real neg(const Real& a);
Real abs(const Real& a);
Real log(const Real& a, Round r = Round::nearest);
Real log1p(const Real& a, Round r = Round::nearest);
Real exp(const Real& a, Round r = Round::nearest);
Real sqrt(const Real& a, Round r = Round::nearest);
Real pow(const Real& a, const Real& b, Round r = Round::nearest);
Real floor(const Real& a);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
/// Reverses the direction; used for terms entering with a minus sign.
Round opposite(Round r) noexcept;

inline Real operator+(const Real& a, const Real& b) { return add(a, b); }
inline Real operator-(const Real& a, const Real& b) { return sub(a, b); }
inline Real operator*(const Real& a, const Real& b) { return mul(a, b); }
inline Real operator/(const Real& a, const Real& b) { return div(a, b); }
inline Real operator-(const Real& a) { return neg(a); }

}  // namespace fc
