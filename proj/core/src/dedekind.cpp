#include "fc/dedekind.hpp"

#include "fc/elimination.hpp"
#include "fc/errors.hpp"
#include "fc/modp.hpp"
#include "fc/parallel.hpp"
#include "fc/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace fc {
namespace {

struct NormTerm {
  std::uint64_t norm;
  std::uint64_t count;
};

struct IdealTerms {
  std::vector<NormTerm> terms;  // ascending norm
  std::vector<std::uint64_t> untrusted;
};

bool p_squared_divides(const mpz_class& n, std::uint64_t p) {
  mpz_class sq = mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
  return mpz_divisible_p(n.get_mpz_t(), sq.get_mpz_t()) != 0;
}

// p^f if it is <= limit.
std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::uint64_t f, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < f; ++i) {
    if (out > limit / p) return std::nullopt;
    out *= p;
  }
  return out;
}

IdealTerms ideal_terms(const FieldSpec& spec, std::uint64_t limit) {
  IdealTerms out;
  if (limit < 2) return out;
  auto table = shared_primes(limit);
  auto primes = table->up_to(limit);
  const auto per_prime = parallel_map<std::vector<NormTerm>>(primes.size(), [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    std::vector<NormTerm> local;
    for (const SplitPart& part : splitting_pattern(spec.h, p).parts) {
      auto norm = bounded_power(p, part.degree, limit);
      if (!norm) continue;
      auto it = std::find_if(local.begin(), local.end(), [&](const NormTerm& t) { return t.norm == *norm; });
      if (it == local.end()) {
        local.push_back({*norm, 1});
      } else {
        ++it->count;
      }
    }
    return local;
  });
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (per_prime[i].empty()) continue;
    if (!spec.monogenic_asserted && p_squared_divides(spec.disc_h, primes[i])) out.untrusted.push_back(primes[i]);
    out.terms.insert(out.terms.end(), per_prime[i].begin(), per_prime[i].end());
  }
  std::stable_sort(out.terms.begin(), out.terms.end(),
                   [](const NormTerm& a, const NormTerm& b) { return a.norm < b.norm; });
  return out;
}

std::uint64_t floor_limit(double x) {
  if (!(x >= 0)) return 0;
  return static_cast<std::uint64_t>(std::floor(x));
}

void require_x(double x) {
  if (!(x >= 2)) throw DomainError("x must be at least 2");
}

// |a - b| with both radii folded in, rounded up.
Real abs_difference_upper(const SumValue& a, const SumValue& b) {
  Real diff = abs(sub(a.value, b.value, Round::up));
  Real alt = abs(sub(a.value, b.value, Round::down));
  diff = max(diff, alt);
  return add(add(diff, a.error_radius, Round::up), b.error_radius, Round::up);
}

mpz_class isqrt(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

FieldSpec FieldSpec::make(IntPoly h, bool monogenic_asserted) {
  if (!h.is_nonconstant()) throw DomainError("field polynomial must be nonconstant");
  if (!h.is_monic()) throw DomainError("field polynomial must be monic");
  FieldSpec spec;
  spec.disc_h = discriminant(h);
  if (spec.disc_h == 0) throw DomainError("field polynomial has a repeated factor");
  spec.h = std::move(h);
  spec.monogenic_asserted = monogenic_asserted;
  return spec;
}

MertensK mertens_k(const FieldSpec& spec, double x, SumMode mode) {
  require_x(x);
  if (!spec.h.is_monic()) throw DomainError("field polynomial must be monic");
  const std::uint64_t limit = floor_limit(x);
  if (mode == SumMode::exact && limit > kExactSumLimit) {
    throw DomainError("exact mode supports x <= " + std::to_string(kExactSumLimit));
  }
  IdealTerms ideals = ideal_terms(spec, limit);
  std::vector<std::uint64_t> norms;
  std::vector<std::uint64_t> counts;
  norms.reserve(ideals.terms.size());
  counts.reserve(ideals.terms.size());
  for (const NormTerm& t : ideals.terms) {
    norms.push_back(t.norm);
    counts.push_back(t.count);
  }
  MertensK out{weighted_reciprocal_sum(norms, counts, mode), ideals.untrusted.empty(), std::move(ideals.untrusted)};
  return out;
}

MertensK log_weighted_mertens_k(const FieldSpec& spec, double x) {
  require_x(x);
  if (!spec.h.is_monic()) throw DomainError("field polynomial must be monic");
  IdealTerms ideals = ideal_terms(spec, floor_limit(x));
  const Real eps = [] {
    Real u;
    mpfr_set_ui_2exp(u.get(), 1, -working_precision(), MPFR_RNDN);
    return u;
  }();
  Real sum(0L);
  Real radius(0L);
  for (const NormTerm& t : ideals.terms) {
    Real n(static_cast<long>(t.norm));
    Real term = div(mul(Real(static_cast<long>(t.count)), log(n)), n);
    sum = add(sum, term);
    // log, multiply, divide, plus the running addition.
    radius = add(radius, mul(add(mul(abs(term), Real(4L), Round::up), abs(sum), Round::up), eps, Round::up),
                 Round::up);
  }
  MertensK out;
  out.sum.value = std::move(sum);
  out.sum.mode = SumMode::floating;
  out.sum.error_radius = std::move(radius);
  out.trusted = ideals.untrusted.empty();
  out.untrusted_primes = std::move(ideals.untrusted);
  return out;
}

NfmReport nfm_check(const IntPoly& g, double x, bool monogenic_asserted, SumMode mode) {
  if (!g.is_nonconstant()) throw DomainError("g must be nonconstant");
  const mpz_class big_d = d_bold(g);
  // x > max{2, sqrt D}  <=>  x > 2 and x^2 > D.
  const mpq_class xq(x);
  if (!(xq > 2) || !(xq * xq > mpq_class(big_d))) {
    throw DomainError("x too small: need x > max{2, sqrt(D_g)} with D_g = " + big_d.get_str());
  }
  NfmReport report;
  report.g = g;
  report.h = monicize(g);
  report.x = x;
  const FieldSpec spec = FieldSpec::make(report.h, monogenic_asserted);
  report.omega_side = omega_sum(g, x, mode);
  MertensK mk = mertens_k(spec, x, mode);
  report.ideal_side = std::move(mk.sum);
  report.trusted = mk.trusted;
  report.untrusted_primes = std::move(mk.untrusted_primes);
  report.a_g = sub(report.omega_side.value, report.ideal_side.value);
  const unsigned d = static_cast<unsigned>(*g.degree());
  Real inner = add(mertens_q_upper(abs(g.leading())), mertens_q_upper(isqrt(big_d)), Round::up);
  inner = add(inner, Real::from_string("0.64", Round::up), Round::up);
  report.a_bound = mul(Real(static_cast<long>(d)), inner, Round::up);
  report.holds = report.trusted && abs_difference_upper(report.omega_side, report.ideal_side) <= report.a_bound;
  return report;
}

Components1Report components1_check(const IntPoly& h, double x, bool monogenic_asserted, SumMode mode) {
  const FieldSpec spec = FieldSpec::make(h, monogenic_asserted);
  const mpz_class disc_abs = abs(spec.disc_h);
  const mpq_class xq(x);
  if (!(xq * xq > mpq_class(disc_abs)) || !(x >= 2)) {
    throw DomainError("x too small: need x > sqrt|D_h| with |D_h| = " + disc_abs.get_str());
  }
  Components1Report report;
  report.h = h;
  report.x = x;
  MertensK mk = mertens_k(spec, x, mode);
  report.ideal_side = std::move(mk.sum);
  report.trusted = mk.trusted;
  report.omega_side = omega_sum(h, x, mode);
  report.difference = abs_difference_upper(report.ideal_side, report.omega_side);
  const unsigned d = static_cast<unsigned>(*h.degree());
  Real inner = add(mertens_q_upper(isqrt(disc_abs)), Real::from_string("0.64", Round::up), Round::up);
  report.bound = mul(Real(static_cast<long>(d)), inner, Round::up);
  report.holds = report.difference < report.bound;
  return report;
}

}  // namespace fc
