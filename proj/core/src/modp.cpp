#include "fc/modp.hpp"

#include "fc/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fc {
namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod_scalar(u64 base, u64 e, u64 p) {
  u64 acc = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    e >>= 1U;
  }
  return acc;
}

// p is prime, so a^{p-2} is the inverse of a != 0.
u64 inverse(u64 a, u64 p) { return powmod_scalar(a, p - 2, p); }

void require_same_modulus(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("ModPoly moduli differ");
}

}  // namespace

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> ascending) : p_(p), c_(std::move(ascending)) {
  if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  for (auto& c : c_) c %= p_;
  trim();
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<std::size_t> ModPoly::degree() const noexcept {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

std::uint64_t ModPoly::evaluate(std::uint64_t at) const {
  u64 acc = 0;
  at %= p_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addmod(mulmod(acc, at, p_), *it, p_);
  return acc;
}

ModPoly ModPoly::monic() const {
  if (c_.empty()) return *this;
  const u64 inv = inverse(c_.back(), p_);
  std::vector<u64> out(c_);
  for (auto& c : out) c = mulmod(c, inv, p_);
  return ModPoly(p_, std::move(out));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  std::vector<u64> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = addmod(a.coeff(i), b.coeff(i), p);
  return ModPoly(p, std::move(out));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  std::vector<u64> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = submod(a.coeff(i), b.coeff(i), p);
  return ModPoly(p, std::move(out));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  if (a.is_zero() || b.is_zero()) return ModPoly::zero(p);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<u64> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = addmod(out[i + j], mulmod(x[i], y[j], p), p);
  }
  return ModPoly(p, std::move(out));
}

ModDivision divmod(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  if (b.is_zero()) throw DomainError("ModPoly division by zero");
  if (a.is_zero() || a.coeffs().size() < b.coeffs().size()) return {ModPoly::zero(p), a};
  std::vector<u64> rem = a.coeffs();
  const auto& den = b.coeffs();
  const std::size_t m = den.size() - 1;
  const u64 inv_lead = inverse(den.back(), p);
  std::vector<u64> quot(rem.size() - m, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const u64 q = mulmod(rem[k + m], inv_lead, p);
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= m; ++j) rem[k + j] = submod(rem[k + j], mulmod(q, den[j], p), p);
  }
  rem.resize(m);
  return {ModPoly(p, std::move(quot)), ModPoly(p, std::move(rem))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).remainder; }
ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).quotient; }

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly x = a;
  ModPoly y = b;
  while (!y.is_zero()) {
    ModPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ModPoly derivative(const ModPoly& a) {
  const u64 p = a.modulus();
  const auto& c = a.coeffs();
  if (c.size() <= 1) return ModPoly::zero(p);
  std::vector<u64> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = mulmod(c[i], i % p, p);
  return ModPoly(p, std::move(out));
}

ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& modulus) {
  ModPoly acc = ModPoly::one(base.modulus()) % modulus;
  ModPoly b = base % modulus;
  while (e > 0) {
    if (e & 1U) acc = (acc * b) % modulus;
    e >>= 1U;
    if (e > 0) b = (b * b) % modulus;
  }
  return acc;
}

ModPoly reduce(const IntPoly& f, std::uint64_t p) {
  std::vector<u64> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  return ModPoly(p, std::move(out));
}

std::uint64_t omega(const IntPoly& f, std::uint64_t p) {
  if (f.is_zero()) throw DomainError("omega of zero polynomial");
  const ModPoly fbar = reduce(f, p);
  if (fbar.is_zero()) return p;
  if (*fbar.degree() == 0) return 0;
  const ModPoly x = ModPoly::x(p);
  const ModPoly frob = powmod(x, p, fbar);
  return *gcd(fbar, frob - x).degree();
}

std::uint64_t omega_naive(const IntPoly& f, std::uint64_t p) {
  if (f.is_zero()) throw DomainError("omega of zero polynomial");
  const ModPoly fbar = reduce(f, p);
  u64 count = 0;
  for (u64 a = 0; a < p; ++a) {
    if (fbar.evaluate(a) == 0) ++count;
  }
  return count;
}

namespace {

struct PowerFactor {
  ModPoly factor;
  unsigned multiplicity;
};

// Only valid when derivative(f) == 0: every exponent is a multiple of p and
// a^{1/p} = a in F_p.
ModPoly pth_root(const ModPoly& f) {
  const u64 p = f.modulus();
  std::vector<u64> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(f.coeffs()[i]);
  return ModPoly(p, std::move(out));
}

void squarefree_decomposition(const ModPoly& f, unsigned scale, std::vector<PowerFactor>& out) {
  const u64 p = f.modulus();
  const ModPoly df = derivative(f);
  if (df.is_zero()) {
    if (*f.degree() > 0) squarefree_decomposition(pth_root(f), scale * static_cast<unsigned>(p), out);
    return;
  }
  ModPoly c = gcd(f, df);
  ModPoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    ModPoly y = gcd(w, c);
    ModPoly z = w / y;
    if (!z.is_one()) out.push_back({z.monic(), i * scale});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (*c.degree() > 0) squarefree_decomposition(pth_root(c.monic()), scale * static_cast<unsigned>(p), out);
}

void distinct_degree(const ModPoly& f, unsigned multiplicity, std::vector<SplitPart>& out) {
  const u64 p = f.modulus();
  const ModPoly x = ModPoly::x(p);
  ModPoly rest = f;
  ModPoly frob = x % rest;
  for (unsigned i = 1; 2 * i <= *rest.degree(); ++i) {
    frob = powmod(frob, p, rest);
    ModPoly g = gcd(rest, frob - x);
    if (!g.is_one()) {
      const auto count = static_cast<unsigned>(*g.degree() / i);
      for (unsigned k = 0; k < count; ++k) out.push_back({i, multiplicity});
      rest = rest / g;
      frob = frob % rest;
    }
  }
  if (*rest.degree() > 0) out.push_back({static_cast<unsigned>(*rest.degree()), multiplicity});
}

}  // namespace

SplittingPattern splitting_pattern(const ModPoly& h) {
  if (h.is_zero() || h.leading() != 1) throw DomainError("splitting pattern requires a monic polynomial");
  std::vector<PowerFactor> sqf;
  squarefree_decomposition(h, 1, sqf);
  SplittingPattern pattern;
  for (const auto& [factor, mult] : sqf) distinct_degree(factor, mult, pattern.parts);
  std::sort(pattern.parts.begin(), pattern.parts.end());
  return pattern;
}

SplittingPattern splitting_pattern(const IntPoly& h, std::uint64_t p) {
  if (!h.is_monic()) throw DomainError("splitting pattern requires a monic polynomial");
  return splitting_pattern(reduce(h, p));
}

unsigned SplittingPattern::weighted_degree() const {
  unsigned total = 0;
  for (const auto& part : parts) total += part.degree * part.multiplicity;
  return total;
}

unsigned SplittingPattern::count_of_degree(unsigned degree) const {
  return static_cast<unsigned>(
      std::count_if(parts.begin(), parts.end(), [degree](const SplitPart& s) { return s.degree == degree; }));
}

std::string SplittingPattern::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(parts[i].degree) + "," + std::to_string(parts[i].multiplicity) + ")";
  }
  return out + "}";
}

}  // namespace fc
