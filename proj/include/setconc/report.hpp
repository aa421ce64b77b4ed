#pragma once

#include <string>

#include <json.hpp>

#include "setconc/classify.hpp"
#include "setconc/dist.hpp"
#include "setconc/selfbound.hpp"

namespace setconc::report {

/// Version stamped into every JSON document the CLI writes.
inline constexpr int kSchemaVersion = 1;

/// {"mask": 5, "set": "{1,3}"}
nlohmann::json set_json(Mask s);

/// Rationals are written as "p/q" strings so they round-trip exactly.
nlohmann::json rational_json(const Rational& value);

nlohmann::json to_json(const ClassReport& report, bool include_certificates = false);
nlohmann::json to_json(const XosViolation& violation);
nlohmann::json to_json(const CertificationResult& result, const SelfBoundingParams& params);
nlohmann::json to_json(const MinimalA& result, const Rational& b);
nlohmann::json to_json(const Distribution& d);
nlohmann::json to_json(const TailTable& table);

/// Columns: delta, exact_upper, exact_lower, then one per bound. Cells outside a
/// bound's domain are left empty.
std::string to_csv(const TailTable& table);

/// Fixed-format double for reports: shortest round-trip representation.
std::string format_double(double value);

}  // namespace setconc::report
