#include "fc/json.hpp"

#include <cstdio>

namespace fc {
namespace {

std::string x_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json prime_list(const std::vector<std::uint64_t>& primes) {
  nlohmann::json out = nlohmann::json::array();
  for (std::uint64_t p : primes) out.push_back(p);
  return out;
}

}  // namespace

nlohmann::json to_json(const Real& value) { return value.to_general(kJsonDigits); }

nlohmann::json to_json(const SumValue& value) {
  nlohmann::json out;
  out["value"] = to_json(value.value);
  out["mode"] = value.mode == SumMode::exact ? "exact" : "floating";
  out["error_radius"] = to_json(value.error_radius);
  if (value.exact) out["rational"] = value.exact->get_str();
  return out;
}

nlohmann::json to_json(const LogReal& value) {
  nlohmann::json out;
  out["sign"] = value.sign();
  out["log_mag"] = value.is_zero() ? nlohmann::json(nullptr) : to_json(value.log_mag());
  if (value.representable()) {
    out["decimal"] = to_json(value.to_real(Round::up));
  } else {
    out["decimal"] = nullptr;
  }
  return out;
}

nlohmann::json to_json(const BoundBreakdown& bd) {
  nlohmann::json out;
  out["d"] = bd.d;
  out["c_abs"] = bd.c_abs.get_str();
  out["disc_abs"] = bd.disc_abs.get_str();
  out["d_bold"] = bd.d_bold.get_str();
  out["m_term"] = to_json(LogReal::from_real(bd.m_term));
  out["a_term"] = to_json(LogReal::from_real(bd.a_term));
  out["c_term"] = to_json(LogReal::from_real(bd.c_term));
  out["lambda"] = to_json(bd.lambda);
  out["b_numerator"] = to_json(bd.b_numerator);
  out["kappa_lo"] = to_json(bd.kappa_lo);
  out["kappa_hi"] = to_json(bd.kappa_hi);
  out["min_x"] = bd.min_x.get_str();
  return out;
}

nlohmann::json to_json(const Threshold& threshold) {
  nlohmann::json out;
  out["u_star"] = to_json(threshold.u_star);
  out["log_x_star"] = to_json(threshold.log_x_star);
  return out;
}

nlohmann::json to_json(const CertificateReport& report) {
  nlohmann::json out;
  out["f"] = format(report.f);
  out["x"] = x_string(report.x);
  out["f_x"] = to_json(report.f_x);
  out["k_hat"] = report.k_hat;
  out["tie"] = report.tie;
  out["hypothesis_met"] = report.hypothesis_met;
  out["bound"] = to_json(report.bound);
  out["breakdown"] = to_json(report.breakdown);
  out["certified"] = report.certified;
  out["u_star"] = report.threshold ? to_json(report.threshold->u_star) : nlohmann::json(nullptr);
  out["threshold"] = report.threshold ? to_json(*report.threshold) : nlohmann::json(nullptr);
  out["warnings"] = report.warnings;
  return out;
}

nlohmann::json to_json(const MertensK& value) {
  nlohmann::json out = to_json(value.sum);
  out["trusted"] = value.trusted;
  out["untrusted_primes"] = prime_list(value.untrusted_primes);
  return out;
}

nlohmann::json to_json(const NfmReport& report) {
  nlohmann::json out;
  out["g"] = format(report.g);
  out["h"] = format(report.h);
  out["x"] = x_string(report.x);
  out["omega_side"] = to_json(report.omega_side);
  out["ideal_side"] = to_json(report.ideal_side);
  out["a_g"] = to_json(report.a_g);
  out["a_bound"] = to_json(report.a_bound);
  out["trusted"] = report.trusted;
  out["holds"] = report.holds;
  out["untrusted_primes"] = prime_list(report.untrusted_primes);
  return out;
}

nlohmann::json to_json(const Components1Report& report) {
  nlohmann::json out;
  out["h"] = format(report.h);
  out["x"] = x_string(report.x);
  out["ideal_side"] = to_json(report.ideal_side);
  out["omega_side"] = to_json(report.omega_side);
  out["difference"] = to_json(report.difference);
  out["bound"] = to_json(report.bound);
  out["trusted"] = report.trusted;
  out["holds"] = report.holds;
  return out;
}

nlohmann::json to_json(const SplittingPattern& pattern) {
  nlohmann::json out = nlohmann::json::array();
  for (const SplitPart& part : pattern.parts) out.push_back({part.degree, part.multiplicity});
  return out;
}

}  // namespace fc
