#include "fc/real.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace fc {
namespace {

std::atomic<mpfr_prec_t> g_precision{96};

std::string take_mpfr_string(char* raw) {
  if (raw == nullptr) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

mpfr_prec_t joint_precision(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

mpfr_prec_t working_precision() noexcept { return g_precision.load(); }

void set_working_precision(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN || bits > 1 << 20) {
    throw std::invalid_argument("precision out of range: " + std::to_string(bits));
  }
  g_precision.store(bits);
}

ScopedPrecision::ScopedPrecision(mpfr_prec_t bits) : saved_(working_precision()) {
  set_working_precision(bits);
}

ScopedPrecision::~ScopedPrecision() { g_precision.store(saved_); }

mpfr_rnd_t to_mpfr(Round r) noexcept {
  switch (r) {
    case Round::up:
      return MPFR_RNDU;
    case Round::down:
      return MPFR_RNDD;
    case Round::nearest:
      break;
  }
  return MPFR_RNDN;
}

Round opposite(Round r) noexcept {
  switch (r) {
    case Round::up:
      return Round::down;
    case Round::down:
      return Round::up;
    case Round::nearest:
      break;
  }
  return Round::nearest;
}

Real::Real() {
  mpfr_init2(value_, working_precision());
  mpfr_set_zero(value_, 1);
}

Real Real::with_precision(mpfr_prec_t prec) {
  Real out;
  mpfr_set_prec(out.value_, prec);
  mpfr_set_zero(out.value_, 1);
  return out;
}

Real::Real(double v) : Real() { mpfr_set_d(value_, v, MPFR_RNDN); }

Real::Real(long v) : Real() { mpfr_set_si(value_, v, MPFR_RNDN); }

Real Real::from_string(std::string_view decimal, Round r) {
  Real out;
  std::string s(decimal);
  if (mpfr_set_str(out.value_, s.c_str(), 10, to_mpfr(r)) != 0 &&
      !mpfr_number_p(out.value_)) {
    throw std::invalid_argument("not a decimal number: " + s);
  }
  return out;
}

Real Real::from_mpz(const mpz_class& z, Round r) {
  Real out;
  mpfr_set_z(out.value_, z.get_mpz_t(), to_mpfr(r));
  return out;
}

Real Real::from_mpq(const mpq_class& q, Round r) {
  Real out;
  mpfr_set_q(out.value_, q.get_mpq_t(), to_mpfr(r));
  return out;
}

Real Real::euler_gamma(Round r) {
  Real out;
  mpfr_const_euler(out.value_, to_mpfr(r));
  return out;
}

Real Real::pi(Round r) {
  Real out;
  mpfr_const_pi(out.value_, to_mpfr(r));
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Leave `other` valid by swapping with a fresh minimal-precision value.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

double Real::to_double(Round r) const { return mpfr_get_d(value_, to_mpfr(r)); }

std::string Real::to_fixed(int decimals) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rf", decimals, value_);
  return take_mpfr_string(raw);
}

std::string Real::to_general(int significant) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", significant, value_);
  return take_mpfr_string(raw);
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

#define FC_BINARY_OP(name, fn)                                     \
  Real name(const Real& a, const Real& b, Round r) {               \
    Real out(joint_precision(a, b));                               \
    fn(out.get(), a.get(), b.get(), to_mpfr(r));                   \
    return out;                                                    \
  }

FC_BINARY_OP(add, mpfr_add)
FC_BINARY_OP(sub, mpfr_sub)
FC_BINARY_OP(mul, mpfr_mul)
FC_BINARY_OP(div, mpfr_div)
FC_BINARY_OP(pow, mpfr_pow)

#undef FC_BINARY_OP

#define FC_UNARY_OP(name, fn)                              \
  Real name(const Real& a, Round r) {                      \
    Real out(a.precision());                               \
    fn(out.get(), a.get(), to_mpfr(r));                    \
    return out;                                            \
  }

FC_UNARY_OP(log, mpfr_log)
FC_UNARY_OP(log1p, mpfr_log1p)
FC_UNARY_OP(exp, mpfr_exp)
FC_UNARY_OP(sqrt, mpfr_sqrt)

#undef FC_UNARY_OP

Real neg(const Real& a) {
  Real out(a.precision());
  mpfr_neg(out.get(), a.get(), MPFR_RNDN);
  return out;
}

Real abs(const Real& a) {
  Real out(a.precision());
  mpfr_abs(out.get(), a.get(), MPFR_RNDN);
  return out;
}

Real floor(const Real& a) {
  Real out(a.precision());
  mpfr_floor(out.get(), a.get());
  return out;
}

Real min(const Real& a, const Real& b) { return (b < a) ? b : a; }
Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }

}  // namespace fc
