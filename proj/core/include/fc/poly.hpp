#pragma once

// Dense integer polynomials with GMP coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fc {

/// Polynomial in Z[x]; coefficient i multiplies x^i. The stored sequence has
/// a nonzero last entry, and the zero polynomial is the empty sequence.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly constant(const mpz_class& c);
  /// c * x^e
  static IntPoly monomial(const mpz_class& c, std::size_t e);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Highest exponent with nonzero coefficient; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  /// True when the polynomial has degree >= 1.
  bool is_nonconstant() const noexcept { return coeffs_.size() >= 2; }

  std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }
  /// Zero beyond the stored range.
  mpz_class coeff(std::size_t i) const;
  /// Requires a nonzero polynomial.
  const mpz_class& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  mpz_class evaluate(const mpz_class& at) const;
  /// f(c x)
  IntPoly scale_argument(const mpz_class& c) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& s, const IntPoly& a);

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

/// Positive gcd of the coefficients. Throws fc::DomainError on zero.
mpz_class content(const IntPoly& p);
/// p / content(p), with positive leading coefficient left as-is in sign.
IntPoly primitive_part(const IntPoly& p);
IntPoly derivative(const IntPoly& p);
IntPoly multiply(const IntPoly& a, const IntPoly& b);
/// Exact division; throws fc::DomainError if `divisor` does not divide `dividend`.
IntPoly divide_exact(const IntPoly& dividend, const IntPoly& divisor);

/// The monic h with h(c x) = c^{d-1} g(x), c the leading coefficient of g and
/// d its degree. Coefficients are h_i = a_i c^{d-1-i}. Throws on constants.
IntPoly monicize(const IntPoly& g);

/// Accepts terms `k`, `k*x`, `kx`, `k*x^e`, `x`, `x^e` joined by `+`/`-`
/// with an optional leading sign; whitespace is ignored and like terms are
/// combined. Throws fc::ParseError with the byte offset of the problem.
IntPoly parse_poly(std::string_view text);

/// JSON array `[a_0, ..., a_d]` whose entries are integers or decimal strings.
IntPoly parse_coeff_json(std::string_view json_text);

/// Descending terms with explicit `*` and `^`, e.g. `x^4 - 5*x^2 + 4`.
std::string format(const IntPoly& p);

}  // namespace fc
