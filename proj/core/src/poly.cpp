#include "fc/poly.hpp"

#include "fc/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace fc {

IntPoly::IntPoly(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t e) {
  std::vector<mpz_class> v(e + 1);
  v[e] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

mpz_class IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

mpz_class IntPoly::evaluate(const mpz_class& at) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

IntPoly IntPoly::scale_argument(const mpz_class& c) const {
  std::vector<mpz_class> out(coeffs_.size());
  mpz_class power = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i] * power;
    power *= c;
  }
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const mpz_class& s, const IntPoly& a) {
  std::vector<mpz_class> out(a.coeffs_.begin(), a.coeffs_.end());
  for (auto& c : out) c *= s;
  return IntPoly(std::move(out));
}

mpz_class content(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("content of zero polynomial");
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  const mpz_class g = content(p);
  std::vector<mpz_class> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly derivative(const IntPoly& p) {
  const auto c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<mpz_class> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly divide_exact(const IntPoly& dividend, const IntPoly& divisor) {
  if (divisor.is_zero()) throw DomainError("division by zero polynomial");
  if (dividend.is_zero()) return {};
  const std::size_t n = *dividend.degree();
  const std::size_t m = *divisor.degree();
  if (n < m) throw DomainError("inexact polynomial division");
  std::vector<mpz_class> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  std::vector<mpz_class> quot(n - m + 1);
  const mpz_class& lead = divisor.leading();
  for (std::size_t k = n - m + 1; k-- > 0;) {
    mpz_class& top = rem[k + m];
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw DomainError("inexact polynomial division");
    }
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= m; ++j) rem[k + j] -= quot[k] * divisor.coeffs()[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const mpz_class& c) { return c != 0; })) {
    throw DomainError("inexact polynomial division");
  }
  return IntPoly(std::move(quot));
}

IntPoly monicize(const IntPoly& g) {
  if (!g.is_nonconstant()) throw DomainError("monicize requires a nonconstant polynomial");
  const std::size_t d = *g.degree();
  const mpz_class& c = g.leading();
  std::vector<mpz_class> out(d + 1);
  out[d] = 1;
  // h_i = a_i c^{d-1-i}, built from the top down.
  mpz_class power = 1;
  for (std::size_t i = d; i-- > 0;) {
    out[i] = g.coeffs()[i] * power;
    power *= c;
  }
  return IntPoly(std::move(out));
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    std::map<std::size_t, mpz_class> terms;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [coeff, exponent] = parse_term();
      if (sign < 0) coeff = -coeff;
      terms[exponent] += coeff;
      skip_space();
      if (at_end()) break;
    }
    std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<mpz_class> out(top + 1);
    for (auto& [e, c] : terms) out[e] += c;
    return IntPoly(std::move(out));
  }

 private:
  std::pair<mpz_class, std::size_t> parse_term() {
    mpz_class coeff = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      have_number = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
      }
    }
    if (peek() != 'x') {
      if (!have_number) throw ParseError("expected a coefficient or 'x'", pos_);
      return {coeff, 0};
    }
    ++pos_;
    skip_space();
    std::size_t exponent = 1;
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected exponent after '^'", pos_);
      }
      const std::size_t start = pos_;
      mpz_class e = parse_integer();
      if (e > 100000) throw ParseError("exponent too large", start);
      exponent = e.get_ui();
    }
    return {coeff, exponent};
  }

  mpz_class parse_integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

IntPoly parse_coeff_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid coefficient JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_array()) throw ParseError("coefficient JSON must be an array", 0);
  std::vector<mpz_class> coeffs;
  for (const auto& item : doc) {
    if (item.is_number_integer()) {
      coeffs.emplace_back(std::to_string(item.get<long long>()), 10);
    } else if (item.is_string()) {
      const auto s = item.get<std::string>();
      mpz_class z;
      if (s.empty() || z.set_str(s, 10) != 0) throw ParseError("bad integer string '" + s + "'", 0);
      coeffs.push_back(z);
    } else {
      throw ParseError("coefficients must be integers or decimal strings", 0);
    }
  }
  return IntPoly(std::move(coeffs));
}

std::string format(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    mpz_class mag = abs(c[i]);
    if (out.empty()) {
      if (c[i] < 0) out += "-";
    } else {
      out += c[i] < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace fc
