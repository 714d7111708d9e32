#include "fc/elimination.hpp"

#include "fc/errors.hpp"

#include <stdexcept>
#include <utility>

namespace fc {

SylvesterMatrix::SylvesterMatrix(std::size_t deg_f, std::size_t deg_g)
    : deg_f_(deg_f), deg_g_(deg_g), entries_((deg_f + deg_g) * (deg_f + deg_g)) {}

SylvesterMatrix sylvester(const IntPoly& f, const IntPoly& g) {
  if (!f.is_nonconstant() || !g.is_nonconstant()) throw DomainError("positive degree required");
  const std::size_t n = *f.degree();
  const std::size_t m = *g.degree();
  SylvesterMatrix s(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k <= n; ++k) s.at(j + k, j) = f.coeffs()[n - k];
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k <= m; ++k) s.at(j + k, m + j) = g.coeffs()[m - k];
  }
  return s;
}

mpz_class determinant(const SylvesterMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c);
  }
  int sign = 1;
  mpz_class prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
      }
    }
    prev_pivot = a[k][k];
  }
  mpz_class det = a[n - 1][n - 1];
  return sign < 0 ? mpz_class(-det) : det;
}

namespace {

mpz_class power(const mpz_class& base, std::size_t e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
  const bool f_const = !f.is_nonconstant();
  const bool g_const = !g.is_nonconstant();
  if (f_const && g_const) throw DomainError("resultant of two constants is undefined");
  if (g_const) return power(g.coeff(0), *f.degree());
  if (f_const) return power(f.coeff(0), *g.degree());
  return determinant(sylvester(f, g));
}

mpz_class discriminant(const IntPoly& f) {
  if (!f.is_nonconstant()) throw DomainError("discriminant requires positive degree");
  const std::size_t n = *f.degree();
  if (n == 1) return 1;
  mpz_class r = resultant(f, derivative(f));
  const mpz_class& lead = f.leading();
  if (!mpz_divisible_p(r.get_mpz_t(), lead.get_mpz_t())) {
    throw std::logic_error("internal: R(f, f') not divisible by the leading coefficient");
  }
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

mpz_class d_bold(const IntPoly& f) {
  const mpz_class disc = discriminant(f);
  if (disc == 0) throw DomainError("repeated factor");
  const std::size_t d = *f.degree();
  const std::size_t e = (d - 1) * (d >= 2 ? d - 2 : 0);
  return power(abs(f.leading()), e) * abs(disc);
}

}  // namespace fc
