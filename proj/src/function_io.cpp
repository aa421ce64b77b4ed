#include "setconc/function_io.hpp"

#include <fstream>
#include <sstream>

#include "setconc/error.hpp"

namespace setconc {
namespace {

using nlohmann::json;

/// DOM builder that stores floating literals as their source text.
class ExactSax {
 public:
  explicit ExactSax(json& root) : dom_(root) {}

  bool null() { return dom_.null(); }
  bool boolean(bool v) { return dom_.boolean(v); }
  bool number_integer(json::number_integer_t v) { return dom_.number_integer(v); }
  bool number_unsigned(json::number_unsigned_t v) { return dom_.number_unsigned(v); }
  bool number_float(json::number_float_t, const json::string_t& text) {
    json::string_t copy = text;
    return dom_.string(copy);
  }
  bool string(json::string_t& v) { return dom_.string(v); }
  bool binary(json::binary_t& v) { return dom_.binary(v); }
  bool start_object(std::size_t n) { return dom_.start_object(n); }
  bool key(json::string_t& v) { return dom_.key(v); }
  bool end_object() { return dom_.end_object(); }
  bool start_array(std::size_t n) { return dom_.start_array(n); }
  bool end_array() { return dom_.end_array(); }
  template <class Exception>
  bool parse_error(std::size_t position, const std::string& token, const Exception& ex) {
    return dom_.parse_error(position, token, ex);
  }

 private:
  nlohmann::detail::json_sax_dom_parser<json> dom_;
};

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

long integer_field(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
  return v.get<long>();
}

std::vector<Rational> rational_array(const json& v, const std::string& field) {
  if (!v.is_array()) throw ParseError(field + ": expected an array");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(rational_from_json(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

json parse_json_exact(std::string_view text) {
  json root;
  ExactSax sax(root);
  try {
    json::sax_parse(text, &sax);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return root;
}

Rational rational_from_json(const json& value, const std::string& field) {
  try {
    if (value.is_number_integer()) {
      if (value.is_number_unsigned()) return Rational(value.get<unsigned long long>());
      return Rational(value.get<long long>());
    }
    if (value.is_number_float()) return rational_from_double(value.get<double>());
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(field + ": " + e.what());
  }
  throw ParseError(field + ": expected a number or a \"p/q\" string");
}

GeneratorSpec generator_from_json(const std::string& name, const json& params) {
  const std::string where = "params";
  if (!params.is_object()) throw ParseError("params: expected an object");
  if (name == "three-element") return gen::ThreeElement{rational_from_json(require(params, "top", where), "params.top")};
  if (name == "directed-edge") return gen::DirectedEdge{};
  if (name == "staircase") return gen::Staircase{integer_field(params, "n", where)};
  if (name == "cardinality-relu") return gen::CardinalityReLU{integer_field(params, "n", where)};
  if (name == "uniform-matroid")
    return gen::UniformMatroidRank{static_cast<int>(integer_field(params, "n", where)),
                                   static_cast<int>(integer_field(params, "k", where))};
  if (name == "additive") return gen::Additive{rational_array(require(params, "weights", where), "params.weights")};
  if (name == "budget-additive")
    return gen::BudgetAdditive{rational_array(require(params, "weights", where), "params.weights"),
                               rational_from_json(require(params, "budget", where), "params.budget")};
  if (name == "explicit") return gen::ExplicitTable{rational_array(require(params, "values", where), "params.values")};
  if (name == "coverage") {
    gen::Coverage spec;
    spec.universe_weights = rational_array(require(params, "universe_weights", where), "params.universe_weights");
    const json& covers = require(params, "covers", where);
    if (!covers.is_array()) throw ParseError("params.covers: expected an array of arrays");
    for (std::size_t i = 0; i < covers.size(); ++i) {
      const std::string field = "params.covers[" + std::to_string(i) + "]";
      if (!covers[i].is_array()) throw ParseError(field + ": expected an array of item indices");
      std::vector<int> items;
      for (const auto& item : covers[i]) {
        if (!item.is_number_integer()) throw ParseError(field + ": item indices must be integers");
        items.push_back(item.get<int>());
      }
      spec.covers.push_back(std::move(items));
    }
    return spec;
  }
  if (name == "directed-cut") {
    gen::DirectedCut spec;
    spec.n = static_cast<int>(integer_field(params, "n", where));
    const json& arcs = require(params, "arcs", where);
    if (!arcs.is_array()) throw ParseError("params.arcs: expected an array");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const std::string field = "params.arcs[" + std::to_string(i) + "]";
      const json& arc = arcs[i];
      if (!arc.is_array() || arc.size() != 3 || !arc[0].is_number_integer() || !arc[1].is_number_integer())
        throw ParseError(field + ": expected [from, to, weight]");
      spec.arcs.push_back({arc[0].get<int>(), arc[1].get<int>(), rational_from_json(arc[2], field + "[2]")});
    }
    return spec;
  }
  throw ParseError("unknown generator \"" + name + "\"");
}

GeneratedFunction function_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("function file: top level must be an object");
  if (doc.contains("generator")) {
    const json& name = doc["generator"];
    if (!name.is_string()) throw ParseError("generator: expected a string");
    const json params = doc.contains("params") ? doc["params"] : json::object();
    return generate(generator_from_json(name.get<std::string>(), params));
  }
  const long n = integer_field(doc, "n", "function file");
  if (n < 1 || n > kMaxDenseElements)
    throw ParseError("n: must be in [1, " + std::to_string(kMaxDenseElements) + "], got " + std::to_string(n));
  const json& values = require(doc, "values", "function file");
  if (!values.is_array()) throw ParseError("values: expected an array");
  const std::size_t expected = std::size_t{1} << n;
  if (values.size() != expected)
    throw ParseError("values: expected 2^" + std::to_string(n) + " = " + std::to_string(expected) +
                     " entries in bitmask order, got " + std::to_string(values.size()));
  return SetFunction(GroundSet(static_cast<int>(n)), rational_array(values, "values"));
}

GeneratedFunction load_function_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open function file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return function_from_json(parse_json_exact(buffer.str()));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace setconc
