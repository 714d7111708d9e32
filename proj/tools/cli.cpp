#include "cli.hpp"

#include "fc/bounds.hpp"
#include "fc/dedekind.hpp"
#include "fc/elimination.hpp"
#include "fc/errors.hpp"
#include "fc/json.hpp"
#include "fc/modp.hpp"
#include "fc/poly.hpp"
#include "fc/prime_sums.hpp"
#include "fc/primes.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fc::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  nlohmann::json json;
  Table table;
  /// Replaces the generic text rendering when set.
  std::optional<std::string> text;
  int code = kOk;
};

std::string number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(const Table& t, std::ostream& out) {
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << csv_field(cells[i]);
    }
    out << "\r\n";
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

void write_text(const Table& t, std::ostream& out) {
  if (t.rows.size() == 1) {
    std::size_t width = 0;
    for (const auto& h : t.header) width = std::max(width, h.size());
    for (std::size_t i = 0; i < t.header.size(); ++i) {
      out << t.header[i] << ':' << std::string(width - t.header[i].size() + 1, ' ') << t.rows[0][i] << '\n';
    }
    return;
  }
  std::vector<std::size_t> widths(t.header.size());
  for (std::size_t i = 0; i < t.header.size(); ++i) widths[i] = t.header[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i] + std::string(widths[i] - cells[i].size(), ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

Table single_row(std::vector<std::pair<std::string, std::string>> fields) {
  Table t;
  t.rows.emplace_back();
  for (auto& [k, v] : fields) {
    t.header.push_back(std::move(k));
    t.rows[0].push_back(std::move(v));
  }
  return t;
}

SumMode mode_of(const Command& c) { return c.exact ? SumMode::exact : SumMode::floating; }

std::vector<IntPoly> polys_of(const Command& c) {
  std::vector<IntPoly> out;
  for (const auto& s : c.polys) out.push_back(parse_poly(s));
  for (const auto& s : c.coeffs) out.push_back(parse_coeff_json(s));
  return out;
}

IntPoly one_poly(const Command& c) {
  auto ps = polys_of(c);
  if (ps.size() != 1) throw UsageError(c.verb + " takes exactly one polynomial");
  return ps[0];
}

double require_x(const Command& c) {
  if (!c.x) throw UsageError(c.verb + " requires --x");
  return *c.x;
}

std::string radius_text(const SumValue& s) { return s.error_radius.to_general(3); }

nlohmann::json with_input(nlohmann::json j, const IntPoly& f) {
  j["f"] = format(f);
  return j;
}

Output do_omega(const Command& c) {
  const IntPoly f = one_poly(c);
  if (!c.p) throw UsageError("omega requires --p");
  if (!is_prime_trial(*c.p)) throw DomainError("p = " + std::to_string(*c.p) + " is not prime");
  const std::uint64_t w = omega(f, *c.p);
  Output o;
  o.json = with_input({{"p", std::to_string(*c.p)}, {"omega", std::to_string(w)}}, f);
  o.table = single_row({{"f", format(f)}, {"p", std::to_string(*c.p)}, {"omega", std::to_string(w)}});
  return o;
}

Output do_resultant(const Command& c) {
  auto ps = polys_of(c);
  if (ps.size() != 2) throw UsageError("resultant takes exactly two polynomials");
  const std::string r = resultant(ps[0], ps[1]).get_str();
  Output o;
  o.json = {{"f", format(ps[0])}, {"g", format(ps[1])}, {"resultant", r}};
  o.table = single_row({{"f", format(ps[0])}, {"g", format(ps[1])}, {"resultant", r}});
  return o;
}

Output do_discriminant(const Command& c) {
  const IntPoly f = one_poly(c);
  const mpz_class disc = discriminant(f);
  const std::string bold = disc == 0 ? "" : d_bold(f).get_str();
  Output o;
  o.json = with_input({{"discriminant", disc.get_str()}, {"d_bold", disc == 0 ? nlohmann::json(nullptr) : nlohmann::json(bold)}}, f);
  o.table = single_row({{"f", format(f)}, {"discriminant", disc.get_str()}, {"d_bold", bold}});
  return o;
}

void add_sum_fields(std::vector<std::pair<std::string, std::string>>& fields, const SumValue& s) {
  fields.emplace_back("value", s.value.to_fixed(12));
  fields.emplace_back("error_radius", radius_text(s));
  fields.emplace_back("mode", s.mode == SumMode::exact ? "exact" : "floating");
  if (s.exact) fields.emplace_back("rational", s.exact->get_str());
}

Output do_mertens_q(const Command& c) {
  const double x = require_x(c);
  const SumValue s = mertens_q(x, mode_of(c));
  Output o;
  o.json = to_json(s);
  o.json["x"] = number(x);
  std::vector<std::pair<std::string, std::string>> fields{{"x", number(x)}};
  add_sum_fields(fields, s);
  o.table = single_row(std::move(fields));
  return o;
}

Output do_script_p(const Command& c) {
  const double x = require_x(c);
  const SumValue s = script_p(x, c.tol);
  Output o;
  o.json = to_json(s);
  o.json["x"] = number(x);
  o.json["tol"] = number(c.tol);
  o.table = single_row({{"x", number(x)}, {"value", s.value.to_fixed(10)}, {"error_radius", radius_text(s)}});
  return o;
}

Output do_f_value(const Command& c) {
  const IntPoly f = one_poly(c);
  const double x = require_x(c);
  const SumValue s = f_value(f, x, mode_of(c));
  Output o;
  o.json = with_input(to_json(s), f);
  o.json["x"] = number(x);
  std::vector<std::pair<std::string, std::string>> fields{{"f", format(f)}, {"x", number(x)}};
  add_sum_fields(fields, s);
  o.table = single_row(std::move(fields));
  return o;
}

Output do_nfm_check(const Command& c) {
  const IntPoly g = one_poly(c);
  const NfmReport r = nfm_check(g, require_x(c), c.monogenic, mode_of(c));
  Output o;
  o.json = to_json(r);
  o.table = single_row({{"g", format(r.g)},
                        {"h", format(r.h)},
                        {"x", number(r.x)},
                        {"omega_side", r.omega_side.value.to_fixed(12)},
                        {"ideal_side", r.ideal_side.value.to_fixed(12)},
                        {"a_g", r.a_g.to_fixed(12)},
                        {"a_bound", r.a_bound.to_fixed(12)},
                        {"trusted", r.trusted ? "yes" : "no"},
                        {"holds", r.holds ? "yes" : "no"}});
  if (!r.holds) o.code = kVerificationFailed;
  return o;
}

Output do_components1(const Command& c) {
  const IntPoly h = one_poly(c);
  const Components1Report r = components1_check(h, require_x(c), c.monogenic, mode_of(c));
  Output o;
  o.json = to_json(r);
  o.table = single_row({{"h", format(r.h)},
                        {"x", number(r.x)},
                        {"ideal_side", r.ideal_side.value.to_fixed(12)},
                        {"omega_side", r.omega_side.value.to_fixed(12)},
                        {"difference", r.difference.to_fixed(12)},
                        {"bound", r.bound.to_fixed(12)},
                        {"trusted", r.trusted ? "yes" : "no"},
                        {"holds", r.holds ? "yes" : "no"}});
  if (!r.holds) o.code = kVerificationFailed;
  return o;
}

std::string certificate_text(const CertificateReport& r) {
  const BoundBreakdown& bd = r.breakdown;
  const Real log_x = log(Real(r.x), Round::down);
  std::ostringstream s;
  s << "f:               " << format(r.f) << '\n';
  s << "x:               " << number(r.x) << '\n';
  s << "F(x):            " << r.f_x.value.to_fixed(10) << " (radius " << radius_text(r.f_x) << ")\n";
  s << "k_hat:           " << r.k_hat << (r.tie ? " (tie, rounded up)" : "") << '\n';
  s << "degree:          " << bd.d << '\n';
  s << "|c|:             " << bd.c_abs.get_str() << '\n';
  s << "|D_f|:           " << bd.disc_abs.get_str() << '\n';
  s << "D_bold:          " << bd.d_bold.get_str() << '\n';
  s << "hypothesis:      x >= " << bd.min_x.get_str() << (r.hypothesis_met ? " (met)" : " (not met)") << '\n';
  s << "kappa bracket:   [" << bd.kappa_lo.to_general(6) << ", " << bd.kappa_hi.to_general(6) << "]\n";
  s << "d M_Q(|D_f|):    " << bd.m_term.to_general(8) << '\n';
  s << "A:               " << bd.a_term.to_general(8) << '\n';
  s << "Lambda:          " << bd.lambda.render() << '\n';
  if (log_x > Real(0L)) s << "B(x):            " << bd.b_term(log_x).render() << '\n';
  s << "C:               " << bd.c_term.to_general(8) << '\n';
  s << "loglog x:        " << loglog(r.x, Round::down).to_general(8) << '\n';
  if (r.threshold) {
    s << "u*:              " << r.threshold->u_star.to_general(10) << '\n';
    s << "x*:              exp(" << r.threshold->log_x_star.to_general(6) << ")\n";
  }
  s << "CERTIFIED: " << (r.certified ? "yes" : "no") << " (bound = " << r.bound.render() << ")\n";
  return s.str();
}

Output do_certify(const Command& c, std::ostream& err) {
  const CertificateReport r = certify(one_poly(c), require_x(c), mode_of(c));
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  Output o;
  o.json = to_json(r);
  o.table = single_row({{"f", format(r.f)},
                        {"x", number(r.x)},
                        {"f_x", r.f_x.value.to_fixed(10)},
                        {"k_hat", std::to_string(r.k_hat)},
                        {"bound", r.bound.render()},
                        {"hypothesis_met", r.hypothesis_met ? "yes" : "no"},
                        {"certified", r.certified ? "yes" : "no"},
                        {"u_star", r.threshold ? r.threshold->u_star.to_general(10) : ""}});
  o.text = certificate_text(r);
  return o;
}

Output do_threshold(const Command& c) {
  const IntPoly f = one_poly(c);
  const Threshold t = certification_threshold(f);
  const std::string x_star = LogReal::from_log(t.log_x_star).render();
  Output o;
  o.json = with_input(to_json(t), f);
  o.table = single_row({{"f", format(f)},
                        {"u_star", t.u_star.to_general(10)},
                        {"log_x_star", t.log_x_star.to_general(10)},
                        {"x_star", x_star}});
  return o;
}

struct Table1Row {
  const char* poly;
  const char* factorization;
  int k;
};

constexpr Table1Row kTable1[] = {
    {"x^4+1", "x^4+1", 1},
    {"x^4+4", "(x^2-2x+2)(x^2+2x+2)", 2},
    {"x^4-1", "(x^2+1)(x-1)(x+1)", 3},
    {"x^4-5x^2+4", "(x-1)(x+1)(x-2)(x+2)", 4},
};

constexpr double kTable1X[] = {100, 1000, 10000};

Output do_table1(const Command& c) {
  Output o;
  const int decimals = c.format == Format::text ? 4 : 10;
  o.table.header = {"f", "factorization", "k", "F(100)", "F(1000)", "F(10000)"};
  o.json = nlohmann::json::array();
  for (const auto& row : kTable1) {
    const IntPoly f = parse_poly(row.poly);
    std::vector<std::string> cells{format(f), row.factorization, std::to_string(row.k)};
    nlohmann::json values;
    for (double x : kTable1X) {
      const SumValue s = f_value(f, x, mode_of(c));
      cells.push_back(s.value.to_fixed(decimals));
      values[number(x)] = to_json(s);
    }
    o.table.rows.push_back(std::move(cells));
    o.json.push_back({{"f", format(f)}, {"factorization", row.factorization}, {"k", row.k}, {"F", values}});
  }
  return o;
}

Output do_table2(const Command&) {
  // Tighter than the 1e-9 the table needs, so the tenth decimal is stable.
  constexpr double kTol = 1e-12;
  Output o;
  o.table.header = {"x", "P(x)"};
  o.json = nlohmann::json::array();
  for (int x = 1; x <= 10; ++x) {
    const SumValue s = script_p(x, kTol);
    o.table.rows.push_back({std::to_string(x), s.value.to_fixed(10)});
    o.json.push_back({{"x", std::to_string(x)}, {"value", to_json(s)}});
  }
  return o;
}

Output dispatch(const Command& c, std::ostream& err) {
  if (c.verb == "omega") return do_omega(c);
  if (c.verb == "resultant") return do_resultant(c);
  if (c.verb == "discriminant") return do_discriminant(c);
  if (c.verb == "mertens-q") return do_mertens_q(c);
  if (c.verb == "script-p") return do_script_p(c);
  if (c.verb == "f-value") return do_f_value(c);
  if (c.verb == "nfm-check") return do_nfm_check(c);
  if (c.verb == "components1") return do_components1(c);
  if (c.verb == "certify") return do_certify(c, err);
  if (c.verb == "threshold") return do_threshold(c);
  if (c.verb == "table1") return do_table1(c);
  if (c.verb == "table2") return do_table2(c);
  throw UsageError("unknown verb '" + c.verb + "'");
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> kVerbs{"omega",     "resultant",   "discriminant", "mertens-q",
                                               "script-p",  "f-value",     "nfm-check",    "components1",
                                               "certify",   "threshold",   "table1",       "table2"};
  return kVerbs;
}

int run(const Command& command, std::ostream& out, std::ostream& err) {
  if (command.precision < 53 || command.precision > 100000) {
    err << "error: --precision must be between 53 and 100000 bits\n";
    return kUsage;
  }
  ScopedPrecision precision(command.precision);
  try {
    Output o = dispatch(command, err);
    switch (command.format) {
      case Format::json:
        out << o.json.dump(2) << '\n';
        break;
      case Format::csv:
        write_csv(o.table, out);
        break;
      case Format::text:
        if (o.text) {
          out << *o.text;
        } else {
          write_text(o.table, out);
        }
        break;
    }
    return o.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count distinct irreducible factors of integer polynomials via prime root-count sums"};
  app.require_subcommand(1, 1);

  Command command;
  std::string format = "text";
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  double x = 0;
  unsigned long p = 0;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--precision", command.precision, "Working precision in mantissa bits")->capture_default_str();
  app.add_flag("--exact", command.exact, "Exact rational summation");

  struct VerbSpec {
    const char* name;
    const char* help;
    int polys;  // -1: any
    bool wants_x;
    bool wants_p;
    bool wants_tol;
    bool wants_monogenic;
  };
  const VerbSpec specs[] = {
      {"omega", "Number of roots of f mod p", 1, false, true, false, false},
      {"resultant", "Resultant of two polynomials", 2, false, false, false, false},
      {"discriminant", "Discriminant and its degree-scaled variant", 1, false, false, false, false},
      {"mertens-q", "Sum of 1/p over primes p <= x", 0, true, false, false, false},
      {"script-p", "Sum over 2 <= k <= x of P(k)/k", 0, true, false, true, false},
      {"f-value", "Factor-count estimate F(x)", 1, true, false, false, false},
      {"nfm-check", "Compare the root-count sum with the number-field Mertens sum", 1, true, false, false, true},
      {"components1", "Per-field root-count versus prime-ideal sum check", 1, true, false, false, true},
      {"certify", "Estimate and explicit error bound at x", 1, true, false, false, false},
      {"threshold", "Smallest loglog x at which the bound certifies", 1, false, false, false, false},
      {"table1", "F(x) for four quartics at x = 100, 1000, 10000", 0, false, false, false, false},
      {"table2", "Sum of P(k)/k for x = 1..10", 0, false, false, false, false},
  };
  std::vector<CLI::App*> subs;
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    subs.push_back(sub);
    if (spec.polys != 0) {
      sub->add_option("poly", command.polys, "Polynomial expression, e.g. \"x^4-5*x^2+4\"");
      // Bound per occurrence so CLI11 does not strip the JSON brackets.
      sub->add_option_function<std::string>(
             "--coeffs", [&command](const std::string& s) { command.coeffs.push_back(s); },
             "Coefficients as a JSON array, constant term first")
          ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
          ->trigger_on_parse();
    }
    if (spec.wants_x) sub->add_option("--x", x, "Summation limit")->required();
    if (spec.wants_p) sub->add_option("--p", p, "Prime modulus")->required();
    if (spec.wants_tol) sub->add_option("--tol", command.tol, "Absolute tolerance")->capture_default_str();
    if (spec.wants_monogenic) sub->add_flag("--monogenic", command.monogenic, "Assert Z[alpha] is the maximal order");
    // Global flags are also accepted after the verb.
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  for (CLI::App* sub : subs) {
    if (sub->parsed()) command.verb = sub->get_name();
  }
  command.format = formats.at(format);
  const CLI::Option* x_opt = app.get_subcommand(command.verb)->get_option_no_throw("--x");
  if (x_opt != nullptr && x_opt->count() > 0) command.x = x;
  if (command.verb == "omega") command.p = p;
  return run(command, out, err);
}

}  // namespace fc::cli
