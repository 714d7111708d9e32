// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "fc/bounds.hpp"
#include "fc/dedekind.hpp"
#include "fc/elimination.hpp"
#include "fc/modp.hpp"
#include "fc/prime_sums.hpp"
#include "fc/primes.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using fc::IntPoly;
using fc::LogReal;
using fc::Real;
using fc::Round;
using fc::SumMode;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages for a criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) messages_ << (failures_ > 1 ? "; " : "") << what;
  }

  Outcome finish(const std::string& summary) const {
    Outcome o;
    o.pass = failures_ == 0;
    std::ostringstream s;
    s << summary << " [" << checks_ - failures_ << "/" << checks_ << " checks]";
    if (failures_) s << " first failures: " << messages_.str();
    o.detail = s.str();
    return o;
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::ostringstream messages_;
};

mpz_class ipow(const mpz_class& b, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

const IntPoly kTable1[] = {IntPoly{1, 0, 0, 0, 1}, IntPoly{4, 0, 0, 0, 1}, IntPoly{-1, 0, 0, 0, 1},
                           IntPoly{4, 0, -5, 0, 1}};

Outcome table1() {
  const double expected[4][3] = {{0.6377, 0.6729, 0.7108},
                                 {1.6164, 1.6712, 1.7109},
                                 {2.6781, 2.7222, 2.7543},
                                 {3.6306, 3.6870, 3.7227}};
  const double xs[] = {100, 1000, 10000};
  Checker c;
  double worst = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double v = fc::f_value(kTable1[i], xs[j], SumMode::exact).value.to_double();
      worst = std::max(worst, std::abs(v - expected[i][j]));
      c.expect(std::abs(v - expected[i][j]) <= 5e-5,
               fc::format(kTable1[i]) + " at " + fixed(xs[j], 0) + ": " + fixed(v, 6));
    }
  }
  return c.finish("12 values, exact mode, max |F - printed| = " + fixed(worst, 6));
}

Outcome table2() {
  const double expected[] = {0,            0.2261237100, 0.2843779231, 0.3036262081, 0.3107772116,
                             0.3136222260, 0.3148056307, 0.3153133064, 0.3155360250, 0.3156353854};
  Checker c;
  double worst = 0;
  for (int x = 1; x <= 10; ++x) {
    const auto s = fc::script_p(x, 1e-12);
    const double v = s.value.to_double();
    worst = std::max(worst, std::abs(v - expected[x - 1]));
    c.expect(std::abs(v - expected[x - 1]) <= 1e-9, "x = " + std::to_string(x) + ": " + fixed(v, 12));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  return c.finish(std::string("10 values, max deviation ") + buf);
}

Outcome rosser_schoenfeld() {
  Checker c;
  for (double x = 10; x <= 1e6; x *= 10) {
    const mpq_class m = *fc::mertens_q(x, SumMode::exact).exact;
    const Real lx = fc::log(Real(x), Round::down);
    // Envelope rounded down so that the comparison is conservative.
    Real env = fc::add(fc::log(lx, Round::down), Real::from_string("0.2614972129", Round::down), Round::down);
    env = fc::add(env, fc::div(Real(1L), fc::mul(fc::log(Real(x), Round::up), fc::log(Real(x), Round::up), Round::up),
                               Round::down),
                  Round::down);
    c.expect(Real::from_mpq(m, Round::up) <= env, "x = " + fixed(x, 0));
  }
  return c.finish("M_Q(x) <= loglog x + B + 1/log^2 x for x = 10..10^6, exact sums");
}

Outcome euler_bound() {
  Checker c;
  const Real euler = Real::from_string("0.4227843351", Round::down);
  const Real cap = Real::from_string("0.32", Round::down);
  Real largest(0L);
  for (int x = 2; x <= 50; ++x) {
    const auto s = fc::script_p(x, 1e-12);
    const Real upper = fc::add(s.value, s.error_radius, Round::up);
    largest = fc::max(largest, upper);
    c.expect(upper < euler, "x = " + std::to_string(x) + " exceeds 1 - gamma");
    c.expect(upper <= cap, "x = " + std::to_string(x) + " exceeds 0.32");
  }
  return c.finish("max over x = 2..50 of script_p + radius = " + largest.to_fixed(10));
}

Outcome number_field_mertens() {
  const IntPoly corpus[] = {IntPoly{-1, 1}, IntPoly{1, 0, 1}, IntPoly{-2, 0, 1}, IntPoly{1, 1, 1},
                            IntPoly{-2, 0, 0, 1}};
  Checker c;
  for (const IntPoly& g : corpus) {
    for (double x : {1e3, 1e4, 1e5}) {
      const std::string where = fc::format(g) + " at " + fixed(x, 0);
      const auto r = fc::nfm_check(g, x, true, SumMode::exact);
      c.expect(r.trusted && r.holds, "nfm " + where);
      const auto l = fc::components1_check(g, x, true, SumMode::exact);
      c.expect(l.holds, "components1 " + where);
    }
  }
  return c.finish("5 monogenic fields x {10^3, 10^4, 10^5}, both checks");
}

Outcome omega_oracle() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<unsigned> degree(1, 6);
  const auto primes = fc::PrimeTable::sieve(1000);
  Checker c;
  long mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const IntPoly f = oracle::random_poly(rng, degree(rng), 50);
    for (std::uint64_t p : primes.primes()) {
      const bool same = fc::omega(f, p) == fc::omega_naive(f, p);
      mismatches += !same;
      c.expect(same, fc::format(f) + " mod " + std::to_string(p));
    }
  }
  return c.finish("100 polynomials x 168 primes, " + std::to_string(mismatches) + " mismatches");
}

Outcome algebraic_identities() {
  std::mt19937_64 rng(7);
  Checker c;
  const auto unit = [&](int lo, int hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };
  int counts[8] = {};
  for (int i = 0; i < 200; ++i) {
    const IntPoly f = oracle::random_poly(rng, unit(1, 4), 20);
    const IntPoly g = oracle::random_poly(rng, unit(1, 4), 20);
    const IntPoly h = oracle::random_poly(rng, unit(1, 4), 20);
    const unsigned m = *f.degree();
    const unsigned n = *g.degree();
    c.expect(fc::resultant(f * g, h) == fc::resultant(f, h) * fc::resultant(g, h), "R(fg,h)");
    ++counts[0];
    long s = unit(-5, 5);
    if (s == 0) s = 2;
    c.expect(fc::resultant(f.scale_argument(s), g.scale_argument(s)) == ipow(s, m * n) * fc::resultant(f, g),
             "R(f(cx),g(cx))");
    ++counts[1];
    const long a = unit(1, 9) * (unit(0, 1) ? 1 : -1);
    const long b = unit(1, 9) * (unit(0, 1) ? 1 : -1);
    c.expect(fc::resultant(mpz_class(a) * f, mpz_class(b) * g) == ipow(a, n) * ipow(b, m) * fc::resultant(f, g),
             "R(af,bg)");
    ++counts[2];
    c.expect(fc::discriminant(f.scale_argument(s)) == ipow(s, m * (m - 1)) * fc::discriminant(f), "D(f(ax))");
    ++counts[3];
  }
  while (counts[4] < 200) {
    const IntPoly g = oracle::random_poly(rng, unit(1, 4), 15);
    const IntPoly h = oracle::random_poly(rng, unit(1, 4), 15);
    const mpz_class r = fc::resultant(g, h);
    if (r == 0) continue;
    c.expect(fc::discriminant(g * h) == fc::discriminant(g) * fc::discriminant(h) * r * r, "D(gh)");
    ++counts[4];
  }
  while (counts[5] < 200) {
    const IntPoly g = oracle::random_poly(rng, unit(1, 6), 30);
    const mpz_class dg = fc::discriminant(g);
    if (dg == 0) continue;
    const unsigned d = *g.degree();
    c.expect(abs(fc::discriminant(fc::monicize(g))) == ipow(abs(g.leading()), (d - 1) * (d - 2)) * abs(dg),
             "|D(monicize g)|");
    ++counts[5];
  }

  const auto& corpus = oracle::irreducible_corpus();
  std::vector<std::size_t> idx(corpus.size());
  std::iota(idx.begin(), idx.end(), 0);
  while (counts[6] < 200) {
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t k = static_cast<std::size_t>(unit(2, 4));
    IntPoly f{1};
    for (std::size_t j = 0; j < k; ++j) f = f * corpus[idx[j]].poly;
    const mpz_class df = fc::discriminant(f);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = x + 1; y < k; ++y) {
        const mpz_class r = fc::resultant(corpus[idx[x]].poly, corpus[idx[y]].poly);
        c.expect(df != 0 && mpz_divisible_p(df.get_mpz_t(), r.get_mpz_t()), "R(fi,fj) | D_f");
      }
    }
    ++counts[6];
  }
  while (counts[7] < 200) {
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t k = static_cast<std::size_t>(unit(1, 3));
    IntPoly f{1};
    for (std::size_t j = 0; j < k; ++j) f = f * corpus[idx[j]].poly;
    const mpz_class disc = abs(fc::discriminant(f));
    if (disc > 200000) continue;
    const std::uint64_t lo = disc.get_ui();
    const auto table = fc::shared_primes(lo + 500);
    for (std::uint64_t p : table->up_to(lo + 500)) {
      if (p <= lo) continue;
      std::uint64_t sum = 0;
      for (std::size_t j = 0; j < k; ++j) sum += fc::omega(corpus[idx[j]].poly, p);
      c.expect(fc::omega(f, p) == sum, "omega additivity at p = " + std::to_string(p));
    }
    ++counts[7];
  }
  return c.finish("8 identities x 200 instances (R multiplicative/scaling/homogeneous, D scaling, D_gh, "
                  "monicized D, R | D, omega additivity window)");
}

Outcome kappa_bracketing() {
  Checker c;
  const Real quarter_pi = fc::div(Real::pi(Round::nearest), Real(4L));
  const auto gaussian = fc::kappa_bounds(2, 4);
  c.expect(gaussian.lower <= quarter_pi && quarter_pi <= gaussian.upper, "pi/4 outside (2, 4) bracket");
  // Q(sqrt 2): h = 1, R = log(1 + sqrt 2), w = 2, disc 8, two real places.
  const Real regulator = fc::log(fc::add(Real(1L), fc::sqrt(Real(2L))));
  const Real kappa = fc::div(fc::mul(Real(4L), regulator), fc::mul(Real(2L), fc::sqrt(Real(8L))));
  const auto real_quadratic = fc::kappa_bounds(2, 8);
  c.expect(real_quadratic.lower <= kappa && kappa <= real_quadratic.upper, "0.623225 outside (2, 8) bracket");
  return c.finish("[" + gaussian.lower.to_fixed(5) + ", " + gaussian.upper.to_fixed(5) + "] contains " +
                  quarter_pi.to_fixed(6) + "; [" + real_quadratic.lower.to_fixed(5) + ", " +
                  real_quadratic.upper.to_fixed(5) + "] contains " + kappa.to_fixed(6));
}

Outcome factor_recovery() {
  Checker c;
  const long expected_k[] = {1, 2, 3, 4};
  for (int i = 0; i < 4; ++i) {
    const long k = fc::certify(kTable1[i], 1e4).k_hat;
    c.expect(k == expected_k[i], fc::format(kTable1[i]) + " rounded to " + std::to_string(k));
  }

  // Deterministic products of distinct corpus members with |D_f| < 10^4:
  // for each size 1..4, combinations in lexicographic order.
  const auto& corpus = oracle::irreducible_corpus();
  const std::size_t quota[] = {0, 8, 8, 6, 3};
  std::vector<std::pair<IntPoly, std::size_t>> products;
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<bool> pick(corpus.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    std::size_t taken = 0;
    do {
      IntPoly f{1};
      for (std::size_t j = 0; j < corpus.size(); ++j) {
        if (pick[j]) f = f * corpus[j].poly;
      }
      if (abs(fc::discriminant(f)) < 10000) {
        products.emplace_back(f, k);
        ++taken;
      }
    } while (taken < quota[k] && std::prev_permutation(pick.begin(), pick.end()));
  }
  std::size_t hits = 0;
  for (const auto& [f, k] : products) {
    const double v = fc::f_value(f, 1e4, SumMode::exact).value.to_double();
    const long rounded = std::lround(v);
    hits += rounded == static_cast<long>(k);
    c.expect(rounded == static_cast<long>(k), fc::format(f) + " (k = " + std::to_string(k) + ") F = " + fixed(v, 4));
  }
  return c.finish("EMPIRICAL, not theorem-backed: table1 quartics plus " + std::to_string(hits) + "/" +
                  std::to_string(products.size()) + " corpus products recovered at x = 10^4");
}

Outcome certification_honesty() {
  Checker c;
  const LogReal half = LogReal::from_real(Real(0.5), Round::down);
  std::ostringstream thresholds;
  for (const IntPoly& f : kTable1) {
    const auto r = fc::certify(f, 1e4);
    c.expect(!r.certified, fc::format(f) + " certified at 10^4");
    const auto bd = fc::bound_breakdown(f);
    const auto t = fc::certification_threshold(bd);
    // main_rhs at x = exp(exp(u)), evaluated directly in u since x overflows a double.
    c.expect(bd.rhs_at_loglog(fc::add(t.u_star, Real(1e-3))) < half, fc::format(f) + " plug-back");
    thresholds << " " << t.u_star.to_fixed(3);
  }
  const auto linear = fc::certification_threshold(IntPoly{-1, 1});
  c.expect(linear.u_star > Real(4.52) && linear.u_star < Real(4.53), "x - 1: u* = " + linear.u_star.to_fixed(6));
  return c.finish("no table1 row certified at 10^4; u* =" + thresholds.str() + "; x - 1: u* = " +
                  linear.u_star.to_fixed(6));
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    // Empirical criteria are reported but do not set the exit status.
    bool empirical = false;
  };
  const Criterion criteria[] = {
      {1, "table1 quartic values", table1},
      {2, "table2 script-P values", table2},
      {3, "Rosser-Schoenfeld envelope", rosser_schoenfeld},
      {4, "Euler and 0.32 bounds on script P", euler_bound},
      {5, "number-field Mertens harness", number_field_mertens},
      {6, "omega oracle equivalence", omega_oracle},
      {7, "algebraic identity suite", algebraic_identities},
      {8, "kappa bracketing", kappa_bracketing},
      {9, "empirical factor-count recovery", factor_recovery, true},
      {10, "certification honesty", certification_honesty},
  };
  int failed = 0;
  int failed_binding = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criterion.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", criterion.id, criterion.name, seconds,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
    failed_binding += !o.pass && !criterion.empirical;
  }
  std::printf("%d/%zu criteria passed; %d theorem-backed failures, %d empirical failures\n",
              static_cast<int>(std::size(criteria)) - failed, std::size(criteria), failed_binding,
              failed - failed_binding);
  return failed_binding == 0 ? 0 : 1;
}
