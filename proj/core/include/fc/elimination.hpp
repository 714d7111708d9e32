#pragma once

// Resultants and discriminants of integer polynomials.

#include "fc/poly.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace fc {

/// Square Sylvester matrix of f (degree n) and g (degree m), size m+n.
/// Column j < m holds the coefficients of f from a_n down to a_0 starting at
/// row j; column m + j holds those of g starting at row j.
class SylvesterMatrix {
 public:
  SylvesterMatrix(std::size_t deg_f, std::size_t deg_g);

  std::size_t deg_f() const noexcept { return deg_f_; }
  std::size_t deg_g() const noexcept { return deg_g_; }
  std::size_t size() const noexcept { return deg_f_ + deg_g_; }

  mpz_class& at(std::size_t row, std::size_t col) { return entries_[row * size() + col]; }
  const mpz_class& at(std::size_t row, std::size_t col) const { return entries_[row * size() + col]; }

 private:
  std::size_t deg_f_;
  std::size_t deg_g_;
  std::vector<mpz_class> entries_;
};

/// Throws fc::DomainError("positive degree required") on constant input.
SylvesterMatrix sylvester(const IntPoly& f, const IntPoly& g);

/// Fraction-free (Bareiss) determinant.
mpz_class determinant(const SylvesterMatrix& m);

/// R(f, g). Extends to one constant argument b by R(f, b) = b^{deg f} and
/// R(b, g) = b^{deg g}; both constant is an error.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

/// D(f) = (-1)^{n(n-1)/2} R(f, f') / a_n, and 1 for linear f.
mpz_class discriminant(const IntPoly& f);

/// |c|^{(d-1)(d-2)} |D(f)|. Throws fc::DomainError("repeated factor") when D(f) = 0.
mpz_class d_bold(const IntPoly& f);

}  // namespace fc
