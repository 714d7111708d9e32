#pragma once

// Explicit constants of the effective factor-count formula.
//
// Everything here is an upper bound on the quantity it names (or a bracket),
// computed with directed rounding so the computed value is never below the
// true bound. The literals are used exactly as published: 0.64, 0.36232,
// 0.55, 44.86, 40.31, 1.02, 0.02, 28.2.

#include "fc/log_real.hpp"
#include "fc/poly.hpp"
#include "fc/prime_sums.hpp"
#include "fc/real.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace fc {

struct KappaBracket {
  Real lower;
  Real upper;
};

/// 0.36232/sqrt(D) <= kappa <= (e log D / (2(d-1)))^{d-1} for d >= 2.
/// Throws fc::DomainError for d < 2 or when the bracket is vacuous (upper < lower).
KappaBracket kappa_bounds(unsigned d, const mpz_class& d_bold);

/// 0.015744605 / (d * d! * D^{1/d}); reported for comparison only.
Real kappa_lower_stark(unsigned d, const mpz_class& d_bold);

/// d (M_Q(c) + M_Q(sqrt D) + 0.64), rounded up.
Real a_bound(unsigned d, const mpz_class& c_abs, const mpz_class& d_bold);

/// e^{28.2d+5} (d+1)^{(5d+5)/2} |D| (log |D|)^d; zero when |D| = 1.
LogReal lambda_value(unsigned d, const mpz_class& disc_abs);

/// (2 / log x)(Lambda sqrt(D) / 0.36232 (0.55 d^2 + 44.86 d) + 2d).
LogReal b_bound(unsigned d, const mpz_class& disc_abs, const mpz_class& d_bold, const Real& log_x);

/// d (gamma + 1.02 d - 0.02 + (d-1)/2 log D), rounded up.
Real c_bound(unsigned d, const mpz_class& d_bold);

/// Upper bound on Upsilon_K with Lambda_K <= Lambda and kappa >= 0.36232/sqrt(D).
LogReal upsilon_upper(unsigned d, const mpz_class& disc_abs, const mpz_class& d_bold);

/// The x-independent pieces of the main error bound for one polynomial.
struct BoundBreakdown {
  unsigned d = 0;
  mpz_class c_abs;
  mpz_class disc_abs;
  mpz_class d_bold;
  Real m_term;  ///< d M_Q(|D_f|)
  Real a_term;
  Real c_term;
  LogReal lambda;
  /// Lambda sqrt(D)/0.36232 (0.55 d^2 + 44.86 d) + 2d, so B(x) = 2 b_numerator / log x.
  LogReal b_numerator;
  /// Kappa bracket at (d, D) for d >= 2; (1, 1) for d = 1.
  Real kappa_lo;
  Real kappa_hi;
  /// Smallest integer x with x >= max{2, |D_f|, sqrt(D)}.
  mpz_class min_x;

  /// B(x) given log x (which must be positive).
  LogReal b_term(const Real& log_x) const;
  /// Right side of the main inequality at u = loglog x > 0.
  LogReal rhs_at_loglog(const Real& u) const;
};

/// Throws fc::DomainError("repeated factor") when D_f = 0.
BoundBreakdown bound_breakdown(const IntPoly& f);

struct MainRhs {
  LogReal value;
  BoundBreakdown breakdown;
};

/// (d M_Q(|D_f|) + A + B(x) + C) / loglog x. Throws fc::DomainError when x is
/// below max{2, |D_f|, sqrt(D)} or x <= e.
MainRhs main_rhs(const IntPoly& f, double x);

struct Threshold {
  Real u_star;      ///< minimal loglog x with rhs < 1/2, to within 1e-6
  Real log_x_star;  ///< exp(u_star); x* = exp(log_x_star)
};

/// Bisection on u = loglog x over the strictly decreasing rhs_at_loglog.
Threshold certification_threshold(const IntPoly& f);
Threshold certification_threshold(const BoundBreakdown& breakdown);

struct CertificateReport {
  IntPoly f;  ///< primitive part of the input
  double x = 0;
  SumValue f_x;
  long k_hat = 0;
  bool tie = false;
  bool hypothesis_met = false;
  LogReal bound;
  BoundBreakdown breakdown;
  bool certified = false;
  std::optional<Threshold> threshold;
  std::vector<std::string> warnings;
};

/// Strips the content (with a warning), estimates k by rounding F(x), and
/// certifies when the bound is below 1/2 and the hypothesis on x holds.
/// Throws fc::DomainError when f has a repeated factor.
CertificateReport certify(const IntPoly& f, double x, SumMode mode = SumMode::exact);

}  // namespace fc
