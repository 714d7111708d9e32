#include "fc/errors.hpp"
#include "fc/modp.hpp"
#include "fc/primes.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using fc::IntPoly;
using fc::ModPoly;

namespace {

fc::SplittingPattern pattern(std::initializer_list<fc::SplitPart> parts) {
  fc::SplittingPattern p{std::vector<fc::SplitPart>(parts)};
  std::sort(p.parts.begin(), p.parts.end());
  return p;
}

}  // namespace

TEST_CASE("reduce") {
  CHECK(fc::reduce(IntPoly{-6, 3}, 3).is_zero());
  CHECK(fc::reduce(IntPoly{1, 0, 1}, 5) == ModPoly(5, {1, 0, 1}));
  CHECK(fc::reduce(IntPoly{3, 10, 7}, 5) == ModPoly(5, {3, 0, 2}));
  CHECK(fc::reduce(IntPoly{-1}, 7) == ModPoly(7, {6}));
}

TEST_CASE("field arithmetic") {
  const ModPoly a(7, {1, 2, 3});
  const ModPoly b(7, {5, 1});
  const auto [q, r] = fc::divmod(a, b);
  CHECK(q * b + r == a);
  CHECK((r.is_zero() || *r.degree() < *b.degree()));
  CHECK(fc::gcd(ModPoly(5, {4, 0, 1}), ModPoly(5, {2, 3})) == ModPoly(5, {4, 1}));
  CHECK(fc::gcd(ModPoly(5, {1, 0, 1}), ModPoly(5, {1, 1})).is_one());
  // x^p = x in F_p[x]/(x^2 + 1) when x^2+1 splits mod p = 5.
  CHECK(fc::powmod(ModPoly::x(5), 5, ModPoly(5, {1, 0, 1})) == ModPoly::x(5));
}

TEST_CASE("omega examples") {
  CHECK(fc::omega(IntPoly{-6, 3}, 3) == 3);
  CHECK(fc::omega(IntPoly{1, 0, 1}, 5) == 2);
  CHECK(fc::omega(IntPoly{1, 0, 1}, 3) == 0);
  CHECK(fc::omega_naive(IntPoly{1, 0, 1}, 2) == 1);
  CHECK(fc::omega_naive(IntPoly{4, 0, -5, 0, 1}, 7) == 4);
  CHECK(fc::omega_naive(IntPoly{0, 1}, 2) == 1);
  CHECK(fc::omega(IntPoly{7}, 5) == 0);
  CHECK(fc::omega(IntPoly{7}, 7) == 7);
  CHECK_THROWS_AS(fc::omega(IntPoly{}, 5), fc::DomainError);
  CHECK_THROWS_AS(fc::omega_naive(IntPoly{}, 5), fc::DomainError);
}

TEST_CASE("omega against exhaustive evaluation") {
  std::mt19937_64 rng(31);
  const auto primes = fc::PrimeTable::sieve(200);
  for (int i = 0; i < 40; ++i) {
    IntPoly f = oracle::random_poly(rng, 1 + i % 6, 50);
    for (std::uint64_t p : primes.primes()) {
      CAPTURE(p);
      CHECK(fc::omega(f, p) == oracle::roots_mod_p(f, p));
    }
  }
}

TEST_CASE("omega bounded by degree on the irreducible corpus") {
  const auto table = fc::PrimeTable::sieve(10000);
  for (const auto& e : oracle::irreducible_corpus()) {
    CAPTURE(e.name);
    const std::uint64_t d = *e.poly.degree();
    std::size_t violations = 0;
    for (std::uint64_t p : table.primes()) violations += fc::omega(e.poly, p) > d;
    CHECK(violations == 0);
  }
}

TEST_CASE("omega additivity beyond the discriminant") {
  const auto& corpus = oracle::irreducible_corpus();
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<IntPoly> parts;
    std::vector<std::size_t> idx(corpus.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    IntPoly f{1};
    for (std::size_t j = 0; j < 1 + static_cast<std::size_t>(trial % 3); ++j) {
      parts.push_back(corpus[idx[j]].poly);
      f = f * corpus[idx[j]].poly;
    }
    const mpz_class disc = abs(fc::discriminant(f));
    if (disc > 1'000'000) continue;
    const std::uint64_t lo = disc.get_ui();
    const auto table = fc::PrimeTable::sieve(lo + 501);
    for (std::uint64_t p : table.primes()) {
      std::uint64_t sum = 0;
      for (const auto& g : parts) sum += fc::omega(g, p);
      CAPTURE(p);
      CHECK(fc::omega(f, p) <= sum);
      if (p > lo) CHECK(fc::omega(f, p) == sum);
    }
  }
}

TEST_CASE("splitting patterns") {
  CHECK(fc::splitting_pattern(IntPoly{1, 0, 1}, 5) == pattern({{1, 1}, {1, 1}}));
  CHECK(fc::splitting_pattern(IntPoly{1, 0, 1}, 2) == pattern({{1, 2}}));
  CHECK(fc::splitting_pattern(IntPoly{1, 0, 1}, 3) == pattern({{2, 1}}));
  CHECK(fc::splitting_pattern(IntPoly{1, 0, 1}, 5).to_string() == "{(1,1),(1,1)}");
  // x^4 + 1 mod 2 = (x + 1)^4: derivative vanishes, needs the p-th root step.
  CHECK(fc::splitting_pattern(IntPoly{1, 0, 0, 0, 1}, 2) == pattern({{1, 4}}));
  // x^3 - 2 mod 3 = (x + 1)^3.
  CHECK(fc::splitting_pattern(IntPoly{-2, 0, 0, 1}, 3) == pattern({{1, 3}}));
  // x^3 - 2 mod 5: one root (3), the quadratic cofactor is irreducible.
  CHECK(fc::splitting_pattern(IntPoly{-2, 0, 0, 1}, 5) == pattern({{1, 1}, {2, 1}}));
  CHECK_THROWS_AS(fc::splitting_pattern(IntPoly{1, 0, 2}, 5), fc::DomainError);
}

TEST_CASE("splitting pattern invariants") {
  std::mt19937_64 rng(33);
  const auto table = fc::PrimeTable::sieve(300);
  for (int i = 0; i < 60; ++i) {
    std::vector<mpz_class> c(2 + i % 7);
    for (auto& v : c) v = static_cast<long>(rng() % 41) - 20;
    c.back() = 1;
    const IntPoly h(c);
    const unsigned d = static_cast<unsigned>(*h.degree());
    for (std::uint64_t p : table.primes()) {
      CAPTURE(fc::format(h));
      CAPTURE(p);
      const auto pat = fc::splitting_pattern(h, p);
      CHECK(pat.weighted_degree() == d);
      const ModPoly hb = fc::reduce(h, p);
      if (fc::gcd(hb, fc::derivative(hb)).is_one()) CHECK(pat.count_of_degree(1) == fc::omega(h, p));
      // Multiplicity-weighted degree-1 parts always account for every root.
      std::uint64_t linear_parts = pat.count_of_degree(1);
      CHECK(linear_parts == fc::omega(h, p));
    }
  }
}

TEST_CASE("repeated factors mod p") {
  // (x^2 + 1)^2 (x - 3)^3 mod 7: x^2+1 is irreducible mod 7.
  const IntPoly base = IntPoly{1, 0, 1} * IntPoly{1, 0, 1} * IntPoly{-3, 1} * IntPoly{-3, 1} * IntPoly{-3, 1};
  CHECK(fc::splitting_pattern(base, 7) == pattern({{1, 3}, {2, 2}}));
  // (x^7 - x + 1)^7 mod 7: derivative of the 7th power is zero.
  IntPoly artin = IntPoly{1, -1, 0, 0, 0, 0, 0, 1};
  IntPoly power{1};
  for (int i = 0; i < 7; ++i) power = power * artin;
  CHECK(fc::splitting_pattern(power, 7) == pattern({{7, 7}}));
}
