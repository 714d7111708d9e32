#pragma once

// Prime ideals of K = Q(alpha), h(alpha) = 0, enumerated through the
// factorization of h mod p, and the number-field Mertens sum M_K(x).

#include "fc/poly.hpp"
#include "fc/prime_sums.hpp"
#include "fc/real.hpp"

#include <gmpxx.h>

namespace fc {

struct FieldSpec {
  IntPoly h;
  /// Caller asserts that Z[alpha] is the full ring of integers.
  bool monogenic_asserted = false;
  mpz_class disc_h;

  /// Validates h (monic, nonconstant, nonzero discriminant) and caches D_h.
  static FieldSpec make(IntPoly h, bool monogenic_asserted);
};

struct MertensK {
  SumValue sum;
  /// False when some prime that could divide the index [O_K : Z[alpha]]
  /// contributed a pattern-derived term.
  bool trusted = true;
  std::vector<std::uint64_t> untrusted_primes;
};

/// M_K(x) = sum over prime ideals of norm <= x of 1/N(P). A prime p is taken
/// at face value when monogenicity is asserted or p^2 does not divide D_h.
MertensK mertens_k(const FieldSpec& spec, double x, SumMode mode = SumMode::exact);

/// sum over prime ideals of norm <= x of log N(P) / N(P), floating mode.
MertensK log_weighted_mertens_k(const FieldSpec& spec, double x);

struct NfmReport {
  IntPoly g;
  IntPoly h;
  double x = 0;
  SumValue omega_side;
  SumValue ideal_side;
  /// omega_side - ideal_side.
  Real a_g;
  Real a_bound;
  bool trusted = true;
  bool holds = false;
  std::vector<std::uint64_t> untrusted_primes;
};

/// Compares sum_{p <= x} omega_g(p)/p with M_K(x) for K defined by monicize(g),
/// against d(M_Q(|c|) + M_Q(sqrt D_g) + 0.64). Requires x > max{2, sqrt D_g}.
NfmReport nfm_check(const IntPoly& g, double x, bool monogenic_asserted, SumMode mode = SumMode::exact);

struct Components1Report {
  IntPoly h;
  double x = 0;
  SumValue ideal_side;
  SumValue omega_side;
  /// |M_K(x) - sum omega_h(p)/p|, rounded up.
  Real difference;
  /// d (M_Q(sqrt |D_h|) + 0.64).
  Real bound;
  bool trusted = true;
  bool holds = false;
};

/// Checks |M_K(x) - sum_{p <= x} omega_h(p)/p| < d (M_Q(sqrt|D_h|) + 0.64)
/// for monic irreducible h. Requires x > sqrt|D_h|.
Components1Report components1_check(const IntPoly& h, double x, bool monogenic_asserted = false,
                                    SumMode mode = SumMode::exact);

}  // namespace fc
