#pragma once

// Sums over rational primes: Mertens sums, the prime zeta function, the
// root-count sum behind the factor-count estimator, and its log-weighted
// variant.
//
// Summation is always in ascending prime order. Per-prime work (root counts)
// may run on several threads, but reduction is sequential, so floating results
// do not depend on FC_THREADS.

#include "fc/poly.hpp"
#include "fc/real.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>

namespace fc {

enum class SumMode { exact, floating };

struct SumValue {
  Real value;
  SumMode mode = SumMode::floating;
  /// Bound on |true sum - value|. Zero for exact sums until rendering.
  Real error_radius;
  /// The exact rational, present in exact mode.
  std::optional<mpq_class> exact;
};

/// Exact mode is available up to this many terms' worth of x.
inline constexpr std::uint64_t kExactSumLimit = 10'000'000;

/// Sum of w_i / n_i in the given order. Exact mode uses binary splitting.
SumValue weighted_reciprocal_sum(std::span<const std::uint64_t> denominators,
                                 std::span<const std::uint64_t> weights, SumMode mode);

/// M_Q(x) = sum_{p <= x} 1/p.
SumValue mertens_q(double x, SumMode mode = SumMode::exact);

/// A rigorous upper bound on M_Q(y) for an integer y of any size: the summed
/// value rounded up for y <= kExactSumLimit, the Rosser-Schoenfeld envelope
/// loglog y + 0.2614972129 + 1/(log y)^2 beyond.
Real mertens_q_upper(const mpz_class& y);

/// Rosser-Schoenfeld envelope for M_Q at x > 1, rounded up.
Real mertens_envelope(const Real& x);

/// P(k) = sum_p p^{-k} within +-tol. k = 2 goes through the Moebius route,
/// larger k through direct summation plus the tail bound B^{1-k}/(k-1).
SumValue prime_zeta(unsigned k, double tol);

/// P(k) via sum_{n>=1} mu(n)/n log zeta(kn); independent of the sieve.
SumValue prime_zeta_mobius(unsigned k, double tol);

/// P(k) via primes <= B plus the integral tail, B chosen from tol.
SumValue prime_zeta_direct(unsigned k, double tol);

/// sum_{2 <= k <= x} P(k)/k within +-tol.
SumValue script_p(double x, double tol);

/// sum_{p <= x} omega_f(p)/p.
SumValue omega_sum(const IntPoly& f, double x, SumMode mode = SumMode::exact);

/// Root counts omega_f(p) for the given primes, computed in parallel.
std::vector<std::uint64_t> omega_values(const IntPoly& f, std::span<const std::uint64_t> primes);

/// log(log(x)), rounded in direction r.
Real loglog(double x, Round r = Round::nearest);

/// F(x) = omega_sum(f, x) / loglog x. Throws fc::DomainError for x <= e.
SumValue f_value(const IntPoly& f, double x, SumMode mode = SumMode::exact);

/// sum_{p <= x} omega_f(p) log p / p, floating mode. Constant f is rejected.
SumValue nagell_sum(const IntPoly& f, double x);

}  // namespace fc
