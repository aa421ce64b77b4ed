#include "setconc/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace setconc::report {

using nlohmann::json;

json set_json(Mask s) { return json{{"mask", s}, {"set", set_notation(s)}}; }

json rational_json(const Rational& value) { return to_string(value); }

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
    if (std::strtod(buffer, nullptr) == value) break;
  }
  return buffer;
}

namespace {

json verdict(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

json rational_vector(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(rational_json(v));
  return out;
}

}  // namespace

json to_json(const XosViolation& violation) {
  json cover = json::array();
  for (const auto& term : violation.cover) {
    json entry = set_json(term.set);
    entry["weight"] = rational_json(term.weight);
    cover.push_back(std::move(entry));
  }
  json out{{"target", set_json(violation.target)},
           {"cover", std::move(cover)},
           {"cover_value", rational_json(violation.cover_value)}};
  out["lp_optimum"] = violation.lp_optimum ? rational_json(*violation.lp_optimum) : json("-inf");
  return out;
}

json to_json(const ClassReport& report, bool include_certificates) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["nonnegative"] = verdict(report.nonnegative);
  out["monotone"] = verdict(report.monotone);
  out["submodular"] = verdict(report.submodular);
  out["fractionally_subadditive"] = verdict(report.fractionally_subadditive);
  out["subadditive"] = verdict(report.subadditive);

  json witnesses = json::object();
  if (const auto& w = report.nonnegative_check.witness) witnesses["nonnegative"] = set_json(*w);
  if (const auto& w = report.monotone_check.witness) {
    json entry{{"S", set_json(w->set)}, {"j", w->element.label}};
    witnesses["monotone"] = std::move(entry);
  }
  if (const auto& w = report.submodular_check.witness)
    witnesses["submodular"] = json{{"S", set_json(w->set)}, {"j", w->j.label}, {"k", w->k.label}};
  if (report.xos_check && report.xos_check->violation)
    witnesses["fractionally_subadditive"] = to_json(*report.xos_check->violation);
  if (report.subadditive_check && report.subadditive_check->witness)
    witnesses["subadditive"] =
        json{{"A", set_json(report.subadditive_check->witness->a)}, {"B", set_json(report.subadditive_check->witness->b)}};
  out["witnesses"] = std::move(witnesses);

  json not_computed = json::object();
  for (const auto& [name, reason] : report.not_computed) not_computed[name] = reason;
  out["not_computed"] = std::move(not_computed);
  out["notes"] = report.notes;

  if (include_certificates && report.xos_check && report.xos_check->certificate) {
    json certs = json::array();
    for (const auto& entry : report.xos_check->certificate->entries)
      certs.push_back(json{{"target", set_json(entry.target)}, {"y", rational_vector(entry.y)}});
    out["xos_certificates"] = std::move(certs);
  }
  return out;
}

json to_json(const CertificationResult& result, const SelfBoundingParams& params) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["a"] = rational_json(params.a);
  out["b"] = rational_json(params.b);
  out["verdict"] = result.verdict;
  if (result.range_violation) {
    const auto& v = *result.range_violation;
    out["range_violation"] = json{{"x", set_json(v.point)}, {"i", v.coordinate + 1}, {"decrement", rational_json(v.decrement)}};
  } else {
    out["range_violation"] = nullptr;
  }
  if (result.sum_violation) {
    const auto& v = *result.sum_violation;
    out["sum_violation"] = json{{"x", set_json(v.point)},
                                {"decrement_sum", rational_json(v.decrement_sum)},
                                {"allowance", rational_json(v.allowance)}};
  } else {
    out["sum_violation"] = nullptr;
  }
  out["worst_point"] = set_json(result.worst_point);
  out["worst_slack"] = rational_json(result.worst_slack);
  return out;
}

json to_json(const MinimalA& result, const Rational& b) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["b"] = rational_json(b);
  switch (result.kind) {
    case MinimalA::Kind::Finite:
      out["kind"] = "finite";
      out["minimal_a"] = rational_json(result.value);
      break;
    case MinimalA::Kind::Unbounded:
      out["kind"] = "unbounded";
      out["minimal_a"] = nullptr;
      break;
    case MinimalA::Kind::Infeasible:
      out["kind"] = "infeasible";
      out["minimal_a"] = nullptr;
      break;
  }
  out["attained_at"] = set_json(result.attained_at);
  return out;
}

json to_json(const Distribution& d) {
  json atoms = json::array();
  for (std::size_t i = 0; i < d.support.size(); ++i) {
    json atom{{"value", rational_json(d.support[i])}, {"probability", d.probs[i]}};
    if (d.exact_probs) atom["exact_probability"] = rational_json((*d.exact_probs)[i]);
    atoms.push_back(std::move(atom));
  }
  return json{{"exact", d.is_exact()}, {"atoms", std::move(atoms)}};
}

json to_json(const TailTable& table) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["mean"] = rational_json(table.mean);
  json names = json::array();
  for (const auto& spec : table.specs) names.push_back(spec.name());
  out["bounds"] = std::move(names);
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r{{"delta", rational_json(row.delta)}, {"exact_upper", row.exact_upper}, {"exact_lower", row.exact_lower}};
    if (row.exact_upper_rational) r["exact_upper_rational"] = rational_json(*row.exact_upper_rational);
    if (row.exact_lower_rational) r["exact_lower_rational"] = rational_json(*row.exact_lower_rational);
    json values = json::object();
    for (std::size_t i = 0; i < table.specs.size(); ++i) {
      const auto& b = row.bounds[i];
      values[table.specs[i].name()] = b ? json{{"bound", b->value}, {"log_bound", b->log_value}} : json(nullptr);
    }
    r["bounds"] = std::move(values);
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  return out;
}

std::string to_csv(const TailTable& table) {
  std::ostringstream out;
  out << "delta,exact_upper,exact_lower";
  for (const auto& spec : table.specs) out << ',' << spec.name();
  out << '\n';
  for (const auto& row : table.rows) {
    out << to_string(row.delta) << ',' << format_double(row.exact_upper) << ',' << format_double(row.exact_lower);
    for (const auto& b : row.bounds) {
      out << ',';
      if (b) out << format_double(b->value);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace setconc::report
