#pragma once

// JSON views of the report types. Numbers are emitted as decimal strings so
// no precision is lost to binary doubles; object keys are sorted.

#include "fc/bounds.hpp"
#include "fc/dedekind.hpp"
#include "fc/log_real.hpp"
#include "fc/modp.hpp"
#include "fc/prime_sums.hpp"

#include <nlohmann/json.hpp>

namespace fc {

/// Significant digits used for real-valued fields.
inline constexpr int kJsonDigits = 20;

nlohmann::json to_json(const Real& value);
nlohmann::json to_json(const SumValue& value);
nlohmann::json to_json(const LogReal& value);
nlohmann::json to_json(const BoundBreakdown& breakdown);
nlohmann::json to_json(const Threshold& threshold);
nlohmann::json to_json(const CertificateReport& report);
nlohmann::json to_json(const MertensK& value);
nlohmann::json to_json(const NfmReport& report);
nlohmann::json to_json(const Components1Report& report);
nlohmann::json to_json(const SplittingPattern& pattern);

}  // namespace fc
