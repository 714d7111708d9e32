#pragma once

// Polynomials over F_p for machine-width primes p, root counting and
// factorization patterns (degrees and multiplicities only).

#include "fc/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fc {

/// Polynomial over Z/pZ with residues in [0, p), trimmed like IntPoly.
class ModPoly {
 public:
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> ascending);
  static ModPoly zero(std::uint64_t p) { return ModPoly(p, {}); }
  static ModPoly one(std::uint64_t p) { return ModPoly(p, {1}); }
  /// The polynomial x.
  static ModPoly x(std::uint64_t p) { return ModPoly(p, {0, 1}); }

  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  std::optional<std::size_t> degree() const noexcept;
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
  std::uint64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.back(); }

  std::uint64_t evaluate(std::uint64_t at) const;
  ModPoly monic() const;

  friend bool operator==(const ModPoly&, const ModPoly&) = default;

 private:
  friend class ModPolyOps;
  void trim();

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

ModPoly operator+(const ModPoly& a, const ModPoly& b);
ModPoly operator-(const ModPoly& a, const ModPoly& b);
ModPoly operator*(const ModPoly& a, const ModPoly& b);

struct ModDivision {
  ModPoly quotient;
  ModPoly remainder;
};
ModDivision divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
ModPoly operator/(const ModPoly& a, const ModPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
ModPoly gcd(const ModPoly& a, const ModPoly& b);
ModPoly derivative(const ModPoly& a);
/// base^e mod modulus by square-and-multiply.
ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& modulus);

ModPoly reduce(const IntPoly& f, std::uint64_t p);

/// Number of a in [0, p) with f(a) = 0 mod p; p when f vanishes mod p.
/// Uses deg gcd(f mod p, x^p - x). Throws fc::DomainError on zero f.
std::uint64_t omega(const IntPoly& f, std::uint64_t p);
/// Same contract, by evaluating f at every residue.
std::uint64_t omega_naive(const IntPoly& f, std::uint64_t p);

/// One irreducible factor class of h mod p: inertia degree and multiplicity.
struct SplitPart {
  unsigned degree;
  unsigned multiplicity;
  friend auto operator<=>(const SplitPart&, const SplitPart&) = default;
};

/// Multiset of (degree, multiplicity), kept sorted.
struct SplittingPattern {
  std::vector<SplitPart> parts;

  unsigned weighted_degree() const;  ///< sum of degree * multiplicity
  unsigned count_of_degree(unsigned degree) const;
  std::string to_string() const;
  friend bool operator==(const SplittingPattern&, const SplittingPattern&) = default;
};

/// Squarefree decomposition (with p-th root extraction) followed by
/// distinct-degree factorization of monic h mod p.
SplittingPattern splitting_pattern(const IntPoly& h, std::uint64_t p);

/// The same pattern for an already-reduced monic polynomial.
SplittingPattern splitting_pattern(const ModPoly& h);

}  // namespace fc
