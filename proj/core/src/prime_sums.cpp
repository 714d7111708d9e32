#include "fc/prime_sums.hpp"

#include "fc/errors.hpp"
#include "fc/modp.hpp"
#include "fc/parallel.hpp"
#include "fc/primes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fc {
namespace {

std::uint64_t floor_bound(double x) {
  if (!(x >= 0)) return 0;
  return static_cast<std::uint64_t>(std::floor(x));
}

// 2^{-prec}: |round_nearest(v) - v| <= |v| * unit_roundoff.
Real unit_roundoff(mpfr_prec_t prec) {
  Real u = Real::with_precision(prec);
  mpfr_set_ui_2exp(u.get(), 1, -prec, MPFR_RNDN);
  return u;
}

// Running floating sum with a rigorous bound on accumulated rounding error.
class CheckedSum {
 public:
  CheckedSum() : sum_(0L), radius_(0L), eps_(unit_roundoff(working_precision())) {}

  // `term` carries at most `roundings` correctly rounded operations.
  void add(const Real& term, int roundings) {
    sum_ = fc::add(sum_, term);
    Real term_err = mul(mul(abs(term), Real(static_cast<long>(roundings + 1)), Round::up), eps_, Round::up);
    Real add_err = mul(abs(sum_), eps_, Round::up);
    radius_ = fc::add(radius_, fc::add(term_err, add_err, Round::up), Round::up);
  }

  SumValue finish() && {
    SumValue out;
    out.value = std::move(sum_);
    out.mode = SumMode::floating;
    out.error_radius = std::move(radius_);
    return out;
  }

  const Real& eps() const { return eps_; }

 private:
  Real sum_;
  Real radius_;
  Real eps_;
};

struct Fraction {
  mpz_class num;
  mpz_class den;
};

Fraction split_sum(std::span<const std::uint64_t> primes, std::span<const std::uint64_t> weights,
                   std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) {
    Fraction leaf;
    mpz_set_ui(leaf.num.get_mpz_t(), weights[lo]);
    mpz_set_ui(leaf.den.get_mpz_t(), primes[lo]);
    return leaf;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  Fraction left = split_sum(primes, weights, lo, mid);
  Fraction right = split_sum(primes, weights, mid, hi);
  return {left.num * right.den + right.num * left.den, left.den * right.den};
}

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

SumValue weighted_reciprocal_sum(std::span<const std::uint64_t> primes,
                                 std::span<const std::uint64_t> weights, SumMode mode) {
  if (primes.size() != weights.size()) throw std::invalid_argument("primes and weights differ in length");
  if (mode == SumMode::exact) {
    SumValue out;
    out.mode = SumMode::exact;
    mpq_class q = 0;
    if (!primes.empty()) {
      Fraction f = split_sum(primes, weights, 0, primes.size());
      q = mpq_class(f.num, f.den);
      q.canonicalize();
    }
    out.value = Real::from_mpq(q);
    out.error_radius = Real(0L);
    out.exact = std::move(q);
    return out;
  }
  CheckedSum acc;
  Real term;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (weights[i] == 0) continue;
    mpfr_set_ui(term.get(), weights[i], MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), primes[i], MPFR_RNDN);
    acc.add(term, weights[i] < (1UL << 53) ? 1 : 2);
  }
  return std::move(acc).finish();
}

SumValue mertens_q(double x, SumMode mode) {
  const std::uint64_t n = floor_bound(x);
  if (mode == SumMode::exact && n > kExactSumLimit) {
    throw DomainError("exact mode supports x <= " + std::to_string(kExactSumLimit));
  }
  if (n < 2) return weighted_reciprocal_sum({}, {}, mode);
  auto table = shared_primes(n);
  auto primes = table->up_to(n);
  std::vector<std::uint64_t> ones(primes.size(), 1);
  return weighted_reciprocal_sum(primes, ones, mode);
}

Real mertens_envelope(const Real& x) {
  if (!(x > Real(1L))) throw DomainError("Mertens envelope needs x > 1");
  const Real meissel_mertens = Real::from_string("0.2614972129", Round::up);
  Real log_up = log(x, Round::up);
  Real log_dn = log(x, Round::down);
  Real square_dn = mul(log_dn, log_dn, Round::down);
  Real inv_square = div(Real(1L), square_dn, Round::up);
  return add(add(log(log_up, Round::up), meissel_mertens, Round::up), inv_square, Round::up);
}

Real mertens_q_upper(const mpz_class& y) {
  if (y < 2) return Real(0L);
  if (y <= kExactSumLimit) {
    SumValue s = mertens_q(static_cast<double>(y.get_ui()), SumMode::floating);
    return add(s.value, s.error_radius, Round::up);
  }
  return mertens_envelope(Real::from_mpz(y, Round::up));
}

SumValue prime_zeta_mobius(unsigned k, double tol) {
  if (k < 2) throw DomainError("prime zeta needs k >= 2");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const mpfr_prec_t outer = working_precision();
  const mpfr_prec_t inner = outer + 64;
  // Truncation after N terms: sum_{n>N} log zeta(kn)/n <= 6 * 2^{-k(N+1)} / (N+1).
  unsigned n_max = 1;
  const double target = std::min(tol / 4, std::ldexp(1.0, -static_cast<int>(outer)));
  while (6.0 * std::ldexp(1.0, -static_cast<int>(k * (n_max + 1))) / (n_max + 1) >= target) ++n_max;
  Real total = Real::with_precision(inner);
  {
    ScopedPrecision scope(inner);
    Real zeta;
    for (unsigned n = 1; n <= n_max; ++n) {
      const int mu = mobius(n);
      if (mu == 0) continue;
      mpfr_zeta_ui(zeta.get(), static_cast<unsigned long>(k) * n, MPFR_RNDN);
      Real term = div(log(zeta), Real(static_cast<long>(n)));
      total = mu > 0 ? add(total, term) : sub(total, term);
    }
  }
  SumValue out;
  out.mode = SumMode::floating;
  Real value = Real::with_precision(outer);
  mpfr_set(value.get(), total.get(), MPFR_RNDN);
  out.value = std::move(value);
  // Truncation bound plus inner rounding (a few ulps per term) plus the final rounding.
  Real radius = Real(6.0 * std::ldexp(1.0, -static_cast<int>(k * (n_max + 1))) / (n_max + 1));
  radius = add(radius, mul(Real(static_cast<long>(4 * n_max + 4)), unit_roundoff(inner), Round::up), Round::up);
  radius = add(radius, mul(abs(out.value), unit_roundoff(outer), Round::up), Round::up);
  out.error_radius = std::move(radius);
  return out;
}

SumValue prime_zeta_direct(unsigned k, double tol) {
  if (k < 2) throw DomainError("prime zeta needs k >= 2");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  // Tail over all integers n > B: < B^{1-k}/(k-1). Pick B with tail < tol/2.
  const double exponent = 1.0 / static_cast<double>(k - 1);
  double b = std::ceil(std::pow(2.0 / (tol * static_cast<double>(k - 1)), exponent)) + 1.0;
  b = std::max(b, 10.0);
  if (b > 2e9) throw DomainError("tolerance too small for direct summation at k = " + std::to_string(k));
  const auto bound = static_cast<std::uint64_t>(b);
  auto table = shared_primes(bound);
  CheckedSum acc;
  Real term;
  for (std::uint64_t p : table->up_to(bound)) {
    mpfr_ui_pow_ui(term.get(), p, k, MPFR_RNDN);
    mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
    acc.add(term, 2);
  }
  SumValue out = std::move(acc).finish();
  // The tail is positive and below T, so centre the estimate at T/2.
  Real tail = Real(static_cast<double>(bound));
  tail = pow(tail, Real(1L - static_cast<long>(k)), Round::up);
  tail = div(tail, Real(static_cast<long>(k - 1)), Round::up);
  Real half_tail = div(tail, Real(2L), Round::up);
  out.value = add(out.value, half_tail);
  out.error_radius = add(add(out.error_radius, half_tail, Round::up),
                         mul(abs(out.value), unit_roundoff(working_precision()), Round::up), Round::up);
  return out;
}

SumValue prime_zeta(unsigned k, double tol) {
  return k == 2 ? prime_zeta_mobius(k, tol) : prime_zeta_direct(k, tol);
}

SumValue script_p(double x, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  SumValue out;
  out.mode = SumMode::floating;
  out.value = Real(0L);
  out.error_radius = Real(0L);
  const std::uint64_t top = floor_bound(x);
  if (top < 2) return out;
  // P(k)/k <= 3 * 2^{-k}, so terms past `last` sum to < 3 * 2^{-last} / (last + 1).
  std::uint64_t last = 2;
  while (last < top && 3.0 * std::ldexp(1.0, -static_cast<int>(last)) / (last + 1) >= tol / 4) ++last;
  const double per_term = tol / (2.0 * static_cast<double>(last - 1));
  CheckedSum acc;
  Real radius(0L);
  for (std::uint64_t k = 2; k <= last; ++k) {
    SumValue pk = prime_zeta(static_cast<unsigned>(k), per_term);
    Real kk(static_cast<long>(k));
    acc.add(div(pk.value, kk), 1);
    radius = add(radius, div(pk.error_radius, kk, Round::up), Round::up);
  }
  out = std::move(acc).finish();
  out.error_radius = add(out.error_radius, radius, Round::up);
  if (last < top) {
    Real tail = Real(3.0 * std::ldexp(1.0, -static_cast<int>(last)) / static_cast<double>(last + 1));
    Real half = div(tail, Real(2L), Round::up);
    out.value = add(out.value, half);
    out.error_radius = add(out.error_radius, half, Round::up);
  }
  return out;
}

std::vector<std::uint64_t> omega_values(const IntPoly& f, std::span<const std::uint64_t> primes) {
  if (f.is_zero()) throw DomainError("omega of zero polynomial");
  return parallel_map<std::uint64_t>(primes.size(), [&](std::size_t i) { return omega(f, primes[i]); });
}

SumValue omega_sum(const IntPoly& f, double x, SumMode mode) {
  if (f.is_zero()) throw DomainError("omega of zero polynomial");
  const std::uint64_t n = floor_bound(x);
  if (mode == SumMode::exact && n > kExactSumLimit) {
    throw DomainError("exact mode supports x <= " + std::to_string(kExactSumLimit));
  }
  if (n < 2) return weighted_reciprocal_sum({}, {}, mode);
  auto table = shared_primes(n);
  auto primes = table->up_to(n);
  const auto weights = omega_values(f, primes);
  return weighted_reciprocal_sum(primes, weights, mode);
}

Real loglog(double x, Round r) {
  Real rx(x);
  // log is increasing, so the same direction at both steps is consistent.
  return log(log(rx, r), r);
}

SumValue f_value(const IntPoly& f, double x, SumMode mode) {
  if (!(x > std::exp(1.0))) throw DomainError("loglog nonpositive: need x > e");
  SumValue sum = omega_sum(f, x, mode);
  Real ll = loglog(x);
  SumValue out;
  out.mode = sum.mode;
  out.exact = sum.exact;
  out.value = div(sum.value, ll);
  // loglog and the division each contribute one rounding; the sum's radius scales by 1/loglog.
  const Real eps = unit_roundoff(working_precision());
  Real rounding = mul(mul(abs(out.value), Real(4L), Round::up), eps, Round::up);
  Real scaled = div(sum.error_radius, loglog(x, Round::down), Round::up);
  out.error_radius = add(scaled, rounding, Round::up);
  return out;
}

SumValue nagell_sum(const IntPoly& f, double x) {
  if (!f.is_nonconstant()) throw DomainError("nagell_sum requires a nonconstant polynomial");
  const std::uint64_t n = floor_bound(x);
  CheckedSum acc;
  if (n < 2) return std::move(acc).finish();
  auto table = shared_primes(n);
  auto primes = table->up_to(n);
  const auto weights = omega_values(f, primes);
  Real term;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (weights[i] == 0) continue;
    mpfr_set_ui(term.get(), primes[i], MPFR_RNDN);
    mpfr_log(term.get(), term.get(), MPFR_RNDN);
    mpfr_mul_ui(term.get(), term.get(), weights[i], MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), primes[i], MPFR_RNDN);
    acc.add(term, 3);
  }
  return std::move(acc).finish();
}

}  // namespace fc
