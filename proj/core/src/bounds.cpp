#include "fc/bounds.hpp"

#include "fc/elimination.hpp"
#include "fc/errors.hpp"

#include <cmath>
#include <utility>

namespace fc {
namespace {

Real literal(const char* text, Round r) { return Real::from_string(text, r); }

Real from_uint(unsigned long v) {
  Real out;
  mpfr_set_ui(out.get(), v, MPFR_RNDN);
  return out;
}

mpz_class isqrt(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class isqrt_ceil(const mpz_class& n) {
  mpz_class r = isqrt(n);
  if (r * r < n) ++r;
  return r;
}

// Lambda sqrt(D) / 0.36232 * factor, with factor already rounded up.
LogReal lambda_sqrt_over_kappa(const LogReal& lambda, const mpz_class& d_bold, const Real& factor) {
  if (lambda.is_zero()) return LogReal::zero();
  const LogReal sqrt_d = LogReal::from_real(sqrt(Real::from_mpz(d_bold, Round::up), Round::up), Round::up);
  const LogReal kappa_const = LogReal::from_real(literal("0.36232", Round::down), Round::down);
  return lambda * sqrt_d / kappa_const * LogReal::from_real(factor, Round::up);
}

void require_degree(unsigned d) {
  if (d < 1) throw DomainError("degree must be at least 1");
}

}  // namespace

KappaBracket kappa_bounds(unsigned d, const mpz_class& d_bold) {
  if (d < 2) throw DomainError("kappa bracket needs d >= 2 (kappa = 1 for the rationals)");
  if (d_bold < 1) throw DomainError("D must be positive");
  KappaBracket out;
  out.lower = div(literal("0.36232", Round::down), sqrt(Real::from_mpz(d_bold, Round::up), Round::up), Round::down);
  const Real e = exp(Real(1L), Round::up);
  const Real base = div(mul(e, log(Real::from_mpz(d_bold, Round::up), Round::up), Round::up),
                        from_uint(2UL * (d - 1)), Round::up);
  out.upper = pow(base, from_uint(d - 1), Round::up);
  if (out.upper < out.lower) {
    throw DomainError("vacuous kappa bracket: upper bound " + out.upper.to_general(6) + " below lower bound " +
                      out.lower.to_general(6));
  }
  return out;
}

Real kappa_lower_stark(unsigned d, const mpz_class& d_bold) {
  if (d < 2) throw DomainError("Stark bound needs d >= 2");
  if (d_bold < 1) throw DomainError("D must be positive");
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), d);
  Real root = pow(Real::from_mpz(d_bold, Round::up), div(Real(1L), from_uint(d), Round::up), Round::up);
  Real denom = mul(mul(from_uint(d), Real::from_mpz(factorial), Round::up), root, Round::up);
  return div(literal("0.015744605", Round::down), denom, Round::down);
}

Real a_bound(unsigned d, const mpz_class& c_abs, const mpz_class& d_bold) {
  require_degree(d);
  Real inner = add(mertens_q_upper(c_abs), mertens_q_upper(isqrt(d_bold)), Round::up);
  inner = add(inner, literal("0.64", Round::up), Round::up);
  return mul(from_uint(d), inner, Round::up);
}

LogReal lambda_value(unsigned d, const mpz_class& disc_abs) {
  require_degree(d);
  if (disc_abs < 1) throw DomainError("|D| must be positive");
  if (disc_abs == 1) return LogReal::zero();
  const Real disc = Real::from_mpz(disc_abs, Round::up);
  const Real log_disc = log(disc, Round::up);
  Real total = add(mul(literal("28.2", Round::up), from_uint(d), Round::up), Real(5L), Round::up);
  Real power_term = mul(div(from_uint(5UL * d + 5), Real(2L), Round::up), log(from_uint(d + 1), Round::up), Round::up);
  total = add(total, power_term, Round::up);
  total = add(total, log_disc, Round::up);
  total = add(total, mul(from_uint(d), log(log_disc, Round::up), Round::up), Round::up);
  return LogReal::from_log(std::move(total));
}

LogReal b_bound(unsigned d, const mpz_class& disc_abs, const mpz_class& d_bold, const Real& log_x) {
  require_degree(d);
  if (!(log_x > Real(0L))) throw DomainError("b_bound needs log x > 0");
  const Real dd = from_uint(d);
  Real factor = add(mul(literal("0.55", Round::up), mul(dd, dd), Round::up),
                    mul(literal("44.86", Round::up), dd, Round::up), Round::up);
  LogReal numerator = lambda_sqrt_over_kappa(lambda_value(d, disc_abs), d_bold, factor) +
                      LogReal::from_real(from_uint(2UL * d), Round::up);
  return LogReal::from_real(Real(2L), Round::up) * numerator / LogReal::from_real(log_x, Round::down);
}

Real c_bound(unsigned d, const mpz_class& d_bold) {
  require_degree(d);
  if (d_bold < 1) throw DomainError("D must be positive");
  const Real dd = from_uint(d);
  Real inner = add(Real::euler_gamma(Round::up), mul(literal("1.02", Round::up), dd, Round::up), Round::up);
  inner = sub(inner, literal("0.02", Round::down), Round::up);
  if (d > 1) {
    Real half = div(from_uint(d - 1), Real(2L), Round::up);
    inner = add(inner, mul(half, log(Real::from_mpz(d_bold, Round::up), Round::up), Round::up), Round::up);
  }
  return mul(dd, inner, Round::up);
}

LogReal upsilon_upper(unsigned d, const mpz_class& disc_abs, const mpz_class& d_bold) {
  if (d < 2) throw DomainError("upsilon bound needs d >= 2; use the Rosser-Schoenfeld form for the rationals");
  const Real dd = from_uint(d);
  const Real d1 = from_uint(d + 1);
  Real factor = div(mul(d1, d1, Round::up), from_uint(2UL * (d - 1)), Round::up);
  factor = add(factor, mul(literal("0.55", Round::up), mul(dd, d1), Round::up), Round::up);
  factor = add(factor, mul(literal("40.31", Round::up), dd, Round::up), Round::up);
  return lambda_sqrt_over_kappa(lambda_value(d, disc_abs), d_bold, factor) +
         LogReal::from_real(from_uint(d + 1), Round::up);
}

LogReal BoundBreakdown::b_term(const Real& log_x) const {
  if (!(log_x > Real(0L))) throw DomainError("B(x) needs log x > 0");
  return LogReal::from_real(Real(2L), Round::up) * b_numerator / LogReal::from_real(log_x, Round::down);
}

LogReal BoundBreakdown::rhs_at_loglog(const Real& u) const {
  if (!(u > Real(0L))) throw DomainError("loglog nonpositive: need x > e");
  // B(e^{e^u}) = 2 N / e^u, so log B = log(2N) - u.
  LogReal b;
  if (!b_numerator.is_zero()) {
    LogReal two_n = LogReal::from_real(Real(2L), Round::up) * b_numerator;
    b = LogReal::from_log(sub(two_n.log_mag(), u, Round::up));
  }
  Real fixed = add(add(m_term, a_term, Round::up), c_term, Round::up);
  LogReal total = LogReal::from_real(fixed, Round::up) + b;
  return total / LogReal::from_real(u, Round::down);
}

BoundBreakdown bound_breakdown(const IntPoly& f) {
  if (!f.is_nonconstant()) throw DomainError("bounds need a nonconstant polynomial");
  const mpz_class disc = discriminant(f);
  if (disc == 0) throw DomainError("repeated factor");
  BoundBreakdown bd;
  bd.d = static_cast<unsigned>(*f.degree());
  bd.c_abs = abs(f.leading());
  bd.disc_abs = abs(disc);
  bd.d_bold = d_bold(f);
  bd.m_term = mul(from_uint(bd.d), mertens_q_upper(bd.disc_abs), Round::up);
  bd.a_term = a_bound(bd.d, bd.c_abs, bd.d_bold);
  bd.c_term = c_bound(bd.d, bd.d_bold);
  bd.lambda = lambda_value(bd.d, bd.disc_abs);
  const Real dd = from_uint(bd.d);
  Real factor = add(mul(literal("0.55", Round::up), mul(dd, dd), Round::up),
                    mul(literal("44.86", Round::up), dd, Round::up), Round::up);
  bd.b_numerator = lambda_sqrt_over_kappa(bd.lambda, bd.d_bold, factor) +
                   LogReal::from_real(from_uint(2UL * bd.d), Round::up);
  if (bd.d >= 2) {
    try {
      KappaBracket k = kappa_bounds(bd.d, bd.d_bold);
      bd.kappa_lo = std::move(k.lower);
      bd.kappa_hi = std::move(k.upper);
    } catch (const DomainError&) {
      // Vacuous raw bracket (D <= 2); the C estimate caps the upper side at 1.
      bd.kappa_lo = div(literal("0.36232", Round::down), sqrt(Real::from_mpz(bd.d_bold, Round::up), Round::up),
                        Round::down);
      bd.kappa_hi = Real(1L);
    }
  } else {
    bd.kappa_lo = Real(1L);
    bd.kappa_hi = Real(1L);
  }
  bd.min_x = std::max({mpz_class(2), bd.disc_abs, isqrt_ceil(bd.d_bold)});
  return bd;
}

MainRhs main_rhs(const IntPoly& f, double x) {
  BoundBreakdown bd = bound_breakdown(f);
  mpq_class xq(x);
  if (xq < mpq_class(bd.min_x)) {
    throw DomainError("x below the hypothesis x >= max{2, |D_f|, sqrt(D_f)} = " + bd.min_x.get_str());
  }
  if (!(x > std::exp(1.0))) throw DomainError("loglog nonpositive: need x > e");
  LogReal value = bd.rhs_at_loglog(loglog(x, Round::down));
  return {std::move(value), std::move(bd)};
}

Threshold certification_threshold(const IntPoly& f) { return certification_threshold(bound_breakdown(f)); }

Threshold certification_threshold(const BoundBreakdown& bd) {
  const LogReal half = LogReal::from_real(Real(0.5), Round::down);
  const auto below_half = [&](const Real& u) { return bd.rhs_at_loglog(u) < half; };

  // Hypothesis: loglog x >= loglog(min_x); also u > 0.
  Real u_min = Real(1e-9);
  const Real min_x = Real::from_mpz(bd.min_x, Round::up);
  if (min_x > exp(Real(1L), Round::up)) u_min = max(u_min, log(log(min_x, Round::up), Round::up));

  Threshold out;
  if (below_half(u_min)) {
    out.u_star = u_min;
  } else {
    Real lo = u_min;
    Real hi = max(add(u_min, Real(1L)), Real(2L));
    while (!below_half(hi)) {
      lo = hi;
      hi = mul(hi, Real(2L));
    }
    const Real tol(1e-7);
    while (sub(hi, lo) > tol) {
      Real mid = div(add(lo, hi), Real(2L));
      if (below_half(mid)) {
        hi = std::move(mid);
      } else {
        lo = std::move(mid);
      }
    }
    out.u_star = std::move(hi);
  }
  out.log_x_star = exp(out.u_star, Round::up);
  return out;
}

CertificateReport certify(const IntPoly& input, double x, SumMode mode) {
  if (!input.is_nonconstant()) throw DomainError("certify needs a nonconstant polynomial");
  CertificateReport report;
  const mpz_class cont = content(input);
  report.f = input;
  if (cont != 1) {
    report.f = primitive_part(input);
    report.warnings.push_back("stripped content " + cont.get_str() +
                              "; constant factors are not counted as irreducible factors");
  }
  if (discriminant(report.f) == 0) {
    throw DomainError("not squarefree: distinct-factor count undefined for a polynomial with a repeated factor");
  }
  report.x = x;
  report.breakdown = bound_breakdown(report.f);
  report.f_x = f_value(report.f, x, mode);

  // Nearest integer with ties resolved upward.
  const Real shifted = add(report.f_x.value, Real(0.5));
  const Real rounded = floor(shifted);
  report.tie = (rounded == shifted);
  report.k_hat = std::max(1L, mpfr_get_si(rounded.get(), MPFR_RNDN));

  report.hypothesis_met = mpq_class(x) >= mpq_class(report.breakdown.min_x);
  report.bound = report.breakdown.rhs_at_loglog(loglog(x, Round::down));

  const LogReal half = LogReal::from_real(Real(0.5), Round::down);
  bool certified = report.hypothesis_met && !report.tie && report.bound < half;
  if (certified) {
    // |F - k_hat| + radius + bound < 1 pins the count to k_hat.
    Real gap = abs(sub(report.f_x.value, Real(static_cast<long>(report.k_hat)), Round::up));
    gap = add(add(gap, report.f_x.error_radius, Round::up), report.bound.to_real(Round::up), Round::up);
    certified = gap < Real(1L);
  }
  report.certified = certified;
  report.threshold = certification_threshold(report.breakdown);
  return report;
}

}  // namespace fc
