#include "fc/errors.hpp"
#include "fc/parallel.hpp"
#include "fc/prime_sums.hpp"
#include "fc/primes.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>

using fc::IntPoly;
using fc::Real;
using fc::SumMode;

namespace {

double as_double(const fc::SumValue& s) { return s.value.to_double(); }

}  // namespace

TEST_CASE("sieve") {
  auto ten = fc::PrimeTable::sieve(10);
  CHECK(std::vector<std::uint64_t>(ten.primes().begin(), ten.primes().end()) ==
        std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(fc::PrimeTable::sieve(2).size() == 1);
  CHECK(fc::PrimeTable::sieve(10000).size() == 1229);
  CHECK(fc::PrimeTable::sieve(1000000).size() == 78498);
  CHECK_THROWS_AS(fc::PrimeTable::sieve(1), std::invalid_argument);

  const auto trial = oracle::primes_by_trial(20000);
  const auto table = fc::PrimeTable::sieve(20000);
  CHECK(std::vector<std::uint64_t>(table.primes().begin(), table.primes().end()) == trial);
  CHECK(table.count_up_to(100) == 25);
  CHECK(fc::shared_primes(5000)->count_up_to(5000) == 669);
}

TEST_CASE("mertens_q") {
  CHECK(fc::mertens_q(1).value.is_zero());
  CHECK(*fc::mertens_q(2).exact == mpq_class(1, 2));
  CHECK(*fc::mertens_q(10).exact == mpq_class(247, 210));
  CHECK(*fc::mertens_q(10.9).exact == mpq_class(247, 210));

  const auto primes = oracle::primes_by_trial(3000);
  const mpq_class oracle_sum = oracle::incremental_sum(primes, std::vector<std::uint64_t>(primes.size(), 1));
  CHECK(*fc::mertens_q(3000).exact == oracle_sum);

  const auto flt = fc::mertens_q(3000, SumMode::floating);
  const Real gap = abs(sub(flt.value, Real::from_mpq(oracle_sum)));
  CHECK(gap <= flt.error_radius);
  CHECK(flt.error_radius < Real(1e-25));
}

TEST_CASE("Rosser-Schoenfeld envelope") {
  for (double x : {10.0, 100.0, 1e3, 1e4, 1e5, 1e6}) {
    CAPTURE(x);
    const auto s = fc::mertens_q(x, SumMode::floating);
    CHECK(add(s.value, s.error_radius, fc::Round::up) <= fc::mertens_envelope(Real(x)));
  }
  CHECK(fc::mertens_q_upper(mpz_class(1)).is_zero());
  CHECK(fc::mertens_q_upper(mpz_class(16)) >= Real::from_mpq(*fc::mertens_q(16).exact));
  CHECK(fc::mertens_q_upper(mpz_class("100000000000")) > Real(3.4));
}

TEST_CASE("prime zeta") {
  const auto p2 = fc::prime_zeta(2, 1e-12);
  CHECK(std::abs(as_double(p2) - 0.4522474200410654985) < 1e-12);
  const auto p10 = fc::prime_zeta(10, 1e-9);
  CHECK(as_double(p10) > 0.000976);
  CHECK(as_double(p10) < 0.001);
  const auto p3 = fc::prime_zeta(3, 1e-10);
  CHECK(std::abs(as_double(p3) / 3 - (0.2843779231 - 0.2261237100)) < 2e-10);
  CHECK_THROWS_AS(fc::prime_zeta(2, 0), fc::DomainError);
  CHECK_THROWS_AS(fc::prime_zeta(1, 1e-3), fc::DomainError);

  // Two independent routes must agree within their combined radii.
  for (unsigned k = 3; k <= 8; ++k) {
    CAPTURE(k);
    const auto a = fc::prime_zeta_mobius(k, 1e-10);
    const auto b = fc::prime_zeta_direct(k, 1e-10);
    const Real gap = abs(sub(a.value, b.value));
    CHECK(gap <= add(a.error_radius, b.error_radius, fc::Round::up));
    CHECK(b.error_radius <= Real(1e-10));
  }
}

TEST_CASE("script_p") {
  const double table2[] = {0,            0.2261237100, 0.2843779231, 0.3036262081, 0.3107772116,
                           0.3136222260, 0.3148056307, 0.3153133064, 0.3155360250, 0.3156353854};
  for (int x = 1; x <= 10; ++x) {
    CAPTURE(x);
    CHECK(std::abs(as_double(fc::script_p(x, 1e-12)) - table2[x - 1]) <= 1e-9);
  }
  double previous = 0;
  for (int x = 1; x <= 50; ++x) {
    const double v = as_double(fc::script_p(x, 1e-11));
    CHECK(v + 1e-11 >= previous);
    CHECK(v < 0.4227843351);
    CHECK(v <= 0.32);
    previous = v;
  }
  CHECK(fc::script_p(1.5, 1e-9).value.is_zero());
}

TEST_CASE("omega_sum") {
  CHECK(*fc::omega_sum(IntPoly{-1, 1}, 10).exact == mpq_class(247, 210));
  CHECK(*fc::omega_sum(IntPoly{1, 0, 1}, 10).exact == mpq_class(9, 10));

  std::mt19937_64 rng(41);
  for (int i = 0; i < 10; ++i) {
    IntPoly f = oracle::random_poly(rng, 1 + i % 5, 30);
    const auto exact = fc::omega_sum(f, 5000, SumMode::exact);
    const auto flt = fc::omega_sum(f, 5000, SumMode::floating);
    CHECK(abs(sub(exact.value, flt.value)) <= flt.error_radius);

    const auto primes = oracle::primes_by_trial(5000);
    std::vector<std::uint64_t> w;
    for (std::uint64_t p : primes) w.push_back(oracle::roots_mod_p(f, p));
    CHECK(*exact.exact == oracle::incremental_sum(primes, w));
  }
}

TEST_CASE("omega_sum subadditivity") {
  const auto& corpus = oracle::irreducible_corpus();
  for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
    const IntPoly& f = corpus[i].poly;
    const IntPoly& g = corpus[i + 1].poly;
    CHECK(*fc::omega_sum(f * g, 3000).exact <= *fc::omega_sum(f, 3000).exact + *fc::omega_sum(g, 3000).exact);
  }
}

TEST_CASE("f_value") {
  CHECK(std::abs(as_double(fc::f_value(IntPoly{1, 0, 0, 0, 1}, 100)) - 0.6377) < 5e-5);
  CHECK(std::abs(as_double(fc::f_value(IntPoly{-1, 0, 0, 0, 1}, 10000)) - 2.7543) < 5e-5);
  CHECK(std::abs(as_double(fc::f_value(IntPoly{4, 0, -5, 0, 1}, 1000)) - 3.6870) < 5e-5);
  CHECK_THROWS_WITH_AS(fc::f_value(IntPoly{-1, 1}, 2.5), doctest::Contains("loglog nonpositive"), fc::DomainError);
}

TEST_CASE("nagell_sum") {
  CHECK(std::abs(as_double(fc::nagell_sum(IntPoly{1, 0, 1}, 2)) - std::log(2.0) / 2) < 1e-15);
  for (double x : {10.0, 1e3, 1e5, 1e6}) {
    CHECK(std::abs(as_double(fc::nagell_sum(IntPoly{-1, 1}, x)) - std::log(x)) < 2.1);
  }
  CHECK_THROWS_AS(fc::nagell_sum(IntPoly{7}, 10), fc::DomainError);
}

TEST_CASE("floating sums do not depend on the thread count") {
  const IntPoly f{4, 0, -5, 0, 1};
  setenv("FC_THREADS", "1", 1);
  const auto one = fc::omega_sum(f, 200000, SumMode::floating);
  setenv("FC_THREADS", "5", 1);
  const auto five = fc::omega_sum(f, 200000, SumMode::floating);
  unsetenv("FC_THREADS");
  CHECK(mpfr_equal_p(one.value.get(), five.value.get()));
  CHECK(mpfr_equal_p(one.error_radius.get(), five.error_radius.get()));
}

TEST_CASE("parallel_map keeps index order") {
  setenv("FC_THREADS", "4", 1);
  const auto out = fc::parallel_map<std::size_t>(5000, [](std::size_t i) { return i * i; });
  unsetenv("FC_THREADS");
  for (std::size_t i = 0; i < out.size(); ++i) REQUIRE(out[i] == i * i);
}

TEST_CASE("working precision") {
  fc::ScopedPrecision scope(200);
  const auto s = fc::mertens_q(1000, SumMode::floating);
  CHECK(s.value.precision() == 200);
  CHECK(s.error_radius < Real(1e-50));
}
