#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "setconc/generators.hpp"

namespace setconc {

/// Parses JSON text keeping every floating literal as its source string, so
/// decimal values convert to exact rationals instead of binary doubles.
nlohmann::json parse_json_exact(std::string_view text);

/// Reads a number-or-string JSON value as an exact rational. `field` names the
/// location for diagnostics.
Rational rational_from_json(const nlohmann::json& value, const std::string& field);

/// Builds a generator spec from its kebab-case name and a params object.
GeneratorSpec generator_from_json(const std::string& name, const nlohmann::json& params);

/// Accepts {"n": int, "values": [...]} or {"generator": name, "params": {...}}.
GeneratedFunction function_from_json(const nlohmann::json& doc);

/// Loads a function file. ParseError carries the file name, and the line and
/// column of syntax errors.
GeneratedFunction load_function_file(const std::filesystem::path& path);

}  // namespace setconc
