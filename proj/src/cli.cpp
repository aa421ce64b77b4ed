#include "setconc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "setconc/bounds.hpp"
#include "setconc/classify.hpp"
#include "setconc/dist.hpp"
#include "setconc/error.hpp"
#include "setconc/function_io.hpp"
#include "setconc/report.hpp"
#include "setconc/selfbound.hpp"

namespace setconc::cli {
namespace {

using nlohmann::json;

struct InputOptions {
  std::string file;
  std::string generator;
  std::string top = "1";
  long n = 0;
  int k = 0;
  std::string weights;
  std::string budget;
};

struct OutputOptions {
  std::string path;
  std::string format;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.file, "Function file ({\"n\",\"values\"} or {\"generator\",\"params\"})");
  cmd->add_option("--generator", in.generator,
                  "three-element | directed-edge | staircase | cardinality-relu | additive | "
                  "uniform-matroid | budget-additive");
  cmd->add_option("--top", in.top, "three-element: value on the full set");
  cmd->add_option("--n", in.n, "staircase, cardinality-relu, uniform-matroid: ground set size");
  cmd->add_option("--k", in.k, "uniform-matroid: rank");
  cmd->add_option("--weights", in.weights, "additive, budget-additive: comma-separated weights");
  cmd->add_option("--budget", in.budget, "budget-additive: cap");
}

void add_output_options(CLI::App* cmd, OutputOptions& out, const std::string& default_format) {
  out.format = default_format;
  cmd->add_option("--output", out.path, "Write the report here instead of stdout");
  cmd->add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

std::vector<Rational> rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError(flag + ": " + e.what());
    }
  }
  return out;
}

Rational rational_flag(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw ParseError(flag + ": " + e.what());
  }
}

GeneratedFunction load_input(const InputOptions& in) {
  if (!in.file.empty() && !in.generator.empty()) throw InputError("give either --input or --generator, not both");
  if (!in.file.empty()) return load_function_file(in.file);
  if (in.generator.empty()) throw InputError("no function given: use --input FILE or --generator NAME");
  const std::string& g = in.generator;
  if (g == "three-element") return generate(gen::ThreeElement{rational_flag(in.top, "--top")});
  if (g == "directed-edge") return generate(gen::DirectedEdge{});
  if (g == "staircase") return generate(gen::Staircase{in.n});
  if (g == "cardinality-relu") return generate(gen::CardinalityReLU{in.n});
  if (g == "uniform-matroid") return generate(gen::UniformMatroidRank{static_cast<int>(in.n), in.k});
  if (g == "additive") return generate(gen::Additive{rational_list(in.weights, "--weights")});
  if (g == "budget-additive")
    return generate(gen::BudgetAdditive{rational_list(in.weights, "--weights"), rational_flag(in.budget, "--budget")});
  throw InputError("unknown generator \"" + g + "\" (coverage, directed-cut and explicit tables need --input)");
}

SetFunction load_dense(const InputOptions& in) {
  GeneratedFunction f = load_input(in);
  if (auto* dense = std::get_if<SetFunction>(&f)) return std::move(*dense);
  throw CapacityError("this command needs a dense function; n = " +
                      std::to_string(std::get<SymmetricSetFunction>(f).n()) + " exceeds the dense cap of " +
                      std::to_string(kMaxDenseElements));
}

void emit(const std::string& text, const OutputOptions& options, std::ostream& out) {
  if (options.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(options.path, std::ios::binary);
  if (!file) throw InputError("cannot write " + options.path);
  file << text;
}

void emit_json(const json& doc, const OutputOptions& options, std::ostream& out) {
  emit(doc.dump(2) + "\n", options, out);
}

json bound_json(const std::string& name, const bounds::BoundValue& value, json params) {
  return json{{"schema_version", report::kSchemaVersion},
              {"bound", value.value},
              {"log_bound", value.log_value},
              {"name", name},
              {"params", std::move(params)}};
}

// --- subcommands -----------------------------------------------------------

struct ClassifyArgs {
  InputOptions in;
  OutputOptions out;
  bool certificates = false;
  unsigned threads = 0;
};

int run_classify(const ClassifyArgs& args, std::ostream& out) {
  const SetFunction f = load_dense(args.in);
  XosOptions options;
  options.keep_certificate = args.certificates;
  options.threads = args.threads;
  json doc = report::to_json(classify(f, options), args.certificates);
  doc["n"] = f.n();
  emit_json(doc, args.out, out);
  return 0;
}

struct SelfboundArgs {
  InputOptions in;
  OutputOptions out;
  std::string a;
  std::string b = "0";
  bool minimal = false;
};

int run_selfbound(const SelfboundArgs& args, std::ostream& out) {
  const SetFunction f = load_dense(args.in);
  const SelfBoundingWitness w = min_extension(f);
  const Rational b = rational_flag(args.b, "--b");
  json doc;
  if (args.minimal) {
    doc = report::to_json(minimal_a(f, w, b), b);
  } else {
    SelfBoundingParams params{args.a.empty() ? Rational(1) : rational_flag(args.a, "--a"), b};
    doc = report::to_json(certify(f, w, params), params);
  }
  doc["n"] = f.n();
  emit_json(doc, args.out, out);
  return 0;
}

struct BoundArgs {
  OutputOptions out;
  std::string name;
  std::optional<double> mean, delta, t, lambda, p_below, threshold;
  double a = 1.0, b = 0.0;
  int q = 2, k = 1;
  bool strict = false;
};

double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing ") + flag);
  return *v;
}

int run_bound(const BoundArgs& args, std::ostream& out) {
  const std::string& name = args.name;
  const auto deviation = [&](double mean) -> std::pair<double, double> {
    if (args.delta && args.t) throw InputError("give exactly one of --delta and --t");
    if (args.delta) return {*args.delta, *args.delta * mean};
    if (args.t) return {*args.t / mean, *args.t};
    throw InputError("missing --delta or --t");
  };

  if (name == "entropy-moment") {
    const double lambda = need(args.lambda, "--lambda");
    const double mean = need(args.mean, "--mean");
    const double value = bounds::entropy_moment_bound(lambda, mean);
    emit_json(json{{"schema_version", report::kSchemaVersion},
                   {"name", name},
                   {"log_mgf_bound", value},
                   {"params", {{"lambda", lambda}, {"mean", mean}}}},
              args.out, out);
    return 0;
  }
  if (name == "subadditive-tail") {
    bounds::SubadditiveTailQuery query{need(args.threshold, "--threshold"), need(args.p_below, "--p-below"), args.q,
                                       args.k};
    const auto result = bounds::subadditive_tail(query, args.strict);
    json doc = bound_json(name, result.bound,
                          {{"threshold", query.threshold}, {"p_below", query.p_below}, {"q", query.q}, {"k", query.k}});
    doc["event_level"] = result.event_level;
    doc["hypothesis_met"] = result.hypothesis_met;
    if (!result.hypothesis_met) doc["warning"] = "q < 18: outside the stated hypothesis";
    emit_json(doc, args.out, out);
    return 0;
  }

  const double mean = need(args.mean, "--mean");
  if (mean <= 0) throw DomainError("--mean must be positive");
  const auto [delta, t] = deviation(mean);
  json params{{"mean", mean}, {"delta", delta}, {"t", t}};
  bounds::BoundValue value;
  if (name == "chernoff-upper") {
    value = bounds::chernoff_upper(mean, delta);
  } else if (name == "chernoff-lower") {
    value = bounds::chernoff_lower(mean, delta);
  } else if (name == "alt-upper") {
    value = bounds::alt_upper(mean, t);
  } else if (name == "ab-upper" || name == "ab-lower") {
    params["a"] = args.a;
    params["b"] = args.b;
    value = name == "ab-upper" ? bounds::ab_upper(args.a, args.b, mean, t) : bounds::ab_lower(args.a, args.b, mean, t);
  } else {
    throw InputError("unknown bound \"" + name + "\"");
  }
  emit_json(bound_json(name, value, std::move(params)), args.out, out);
  return 0;
}

struct TailsArgs {
  InputOptions in;
  OutputOptions out;
  std::string p = "1/2";
  std::string deltas = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1,1.5,2,3";
  std::string bound_list = "chernoff-upper,chernoff-lower";
  std::string mean;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

int run_tails(const TailsArgs& args, std::ostream& out) {
  const GeneratedFunction f = load_input(args.in);
  const Rational p = rational_flag(args.p, "--p");
  std::vector<BoundSpec> specs;
  for (const auto& item : split(args.bound_list, ',')) specs.push_back(BoundSpec::parse(item));
  const std::vector<Rational> deltas = rational_list(args.deltas, "--deltas");

  Distribution d;
  if (args.samples > 0) {
    SampleOptions options{args.samples, args.seed, args.threads};
    d = std::visit(
        [&](const auto& fn) {
          return sample(fn, BernoulliProduct::uniform(static_cast<int>(fn.n()), p), options);
        },
        f);
  } else if (const auto* dense = std::get_if<SetFunction>(&f)) {
    d = exact_distribution(*dense, BernoulliProduct::uniform(dense->n(), p));
  } else {
    d = symmetric_distribution(std::get<SymmetricSetFunction>(f), p);
  }
  std::optional<Rational> mean;
  if (!args.mean.empty()) mean = rational_flag(args.mean, "--mean");
  const TailTable table = tail_table(d, mean, deltas, specs);
  if (args.out.format == "csv") emit(report::to_csv(table), args.out, out);
  else emit_json(report::to_json(table), args.out, out);
  return 0;
}

struct CounterexampleArgs {
  OutputOptions out;
  long n = 0;
};

int run_counterexample(const CounterexampleArgs& args, std::ostream& out) {
  const std::vector<Rational> levels = staircase_levels(args.n);
  const SymmetricSetFunction g(args.n, levels);
  const Rational root = levels.back() / 2;
  const Distribution d = symmetric_distribution(g, Rational(1, 2));
  const Moments m = moments(d);

  json doc;
  doc["schema_version"] = report::kSchemaVersion;
  doc["n"] = args.n;
  doc["sqrt_n"] = report::rational_json(root);
  doc["exact"] = d.is_exact();
  doc["mean"] = m.mean;
  doc["stddev"] = m.stddev;
  doc["median"] = report::rational_json(m.median);
  doc["pr_z_eq_sqrt_n"] = d.probability_of(root);
  doc["pr_z_eq_2sqrt_n"] = d.probability_of(2 * root);

  // The dimension-free tails evaluated at the two plateaus, with the measured mean.
  const double rootd = to_double(root);
  const double lower_delta = 1 - rootd / m.mean;
  const double upper_delta = 2 * rootd / m.mean - 1;
  doc["lower_tail"] = json{{"level", report::rational_json(root)},
                           {"delta", lower_delta},
                           {"exact", lower_tail(d, root)},
                           {"chernoff_lower", bounds::chernoff_lower(m.mean, lower_delta).value}};
  doc["upper_tail"] = json{{"level", report::rational_json(2 * root)},
                           {"delta", upper_delta},
                           {"exact", upper_tail(d, 2 * root)},
                           {"chernoff_upper", bounds::chernoff_upper(m.mean, upper_delta).value}};

  if (args.n <= 16) {
    const SetFunction f = g.to_dense();
    const MinimalA a = minimal_a(f, min_extension(f), Rational(0));
    doc["minimal_a"] = report::to_json(a, Rational(0));
    doc["minimal_a"].erase("schema_version");
  } else {
    doc["minimal_a"] = nullptr;
    // Every |S| = n/2 point has decrement sum n/2 against f = 3 sqrt(n)/2.
    doc["minimal_a_lower_bound_at_half"] = report::rational_json(Rational(args.n / 2) / (3 * root / 2));
  }
  emit_json(doc, args.out, out);
  return 0;
}

struct CrossoverArgs {
  OutputOptions out;
  double mean = 1.0;
  std::string target = "1e-6";
};

int run_crossover(const CrossoverArgs& args, std::ostream& out) {
  const double target = to_double(rational_flag(args.target, "--target"));
  const auto chernoff = bounds::min_deviation_for_target(bounds::BoundForm::chernoff(), args.mean, target);
  const auto alt = bounds::min_deviation_for_target(bounds::BoundForm::alt(), args.mean, target);
  const bool smaller = chernoff.absolute < alt.absolute;
  json doc{{"schema_version", report::kSchemaVersion},
           {"mean", args.mean},
           {"target", target},
           {"chernoff", {{"delta", chernoff.value}, {"t", chernoff.absolute}}},
           {"alt", {{"t", alt.absolute}}},
           {"chernoff_smaller", smaller}};
  emit_json(doc, args.out, out);
  if (target < 1 && !smaller) throw InternalError("Chernoff-form deviation is not below the alternative form");
  return 0;
}

void report_error(std::ostream& err, ErrorCode code, const std::string& message) {
  err << json{{"schema_version", report::kSchemaVersion},
              {"error", {{"code", std::string(to_string(code))}, {"message", message}}}}
             .dump()
      << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Set-function classification, self-bounding certification and concentration bounds"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Decide the five function classes with witnesses");
  add_input_options(classify_cmd, classify_args.in);
  add_output_options(classify_cmd, classify_args.out, "json");
  classify_cmd->add_flag("--certificates", classify_args.certificates, "Include per-subset additive certificates");
  classify_cmd->add_option("--threads", classify_args.threads, "Worker threads for the covering LPs");

  SelfboundArgs selfbound_args;
  auto* selfbound_cmd = app.add_subcommand("selfbound", "Certify (a,b)-self-bounding with the min-extension witness");
  add_input_options(selfbound_cmd, selfbound_args.in);
  add_output_options(selfbound_cmd, selfbound_args.out, "json");
  selfbound_cmd->add_option("--a", selfbound_args.a, "Multiplier a (default 1)");
  selfbound_cmd->add_option("--b", selfbound_args.b, "Offset b (default 0)");
  auto* minimal_flag = selfbound_cmd->add_flag("--minimal-a", selfbound_args.minimal, "Compute the least a for the given b");
  minimal_flag->excludes(selfbound_cmd->get_option("--a"));

  BoundArgs bound_args;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate one tail bound");
  bound_cmd->add_option("name", bound_args.name,
                        "chernoff-upper | chernoff-lower | ab-upper | ab-lower | alt-upper | subadditive-tail | "
                        "entropy-moment")
      ->required();
  add_output_options(bound_cmd, bound_args.out, "json");
  bound_cmd->add_option("--mean", bound_args.mean);
  bound_cmd->add_option("--delta", bound_args.delta, "Relative deviation");
  bound_cmd->add_option("--t", bound_args.t, "Absolute deviation");
  bound_cmd->add_option("--a", bound_args.a);
  bound_cmd->add_option("--b", bound_args.b);
  bound_cmd->add_option("--lambda", bound_args.lambda);
  bound_cmd->add_option("--threshold", bound_args.threshold, "subadditive-tail: level a");
  bound_cmd->add_option("--p-below", bound_args.p_below, "subadditive-tail: Pr[Z <= a]");
  bound_cmd->add_option("--q", bound_args.q);
  bound_cmd->add_option("--k", bound_args.k);
  bound_cmd->add_flag("--strict", bound_args.strict, "Reject q < 18");

  TailsArgs tails_args;
  auto* tails_cmd = app.add_subcommand("tails", "Exact (or sampled) tails against bounds");
  add_input_options(tails_cmd, tails_args.in);
  add_output_options(tails_cmd, tails_args.out, "csv");
  tails_cmd->add_option("--p", tails_args.p, "Coordinate probability (default 1/2)");
  tails_cmd->add_option("--deltas", tails_args.deltas, "Comma-separated relative deviations");
  tails_cmd->add_option("--bounds", tails_args.bound_list,
                        "Comma-separated: chernoff-upper, chernoff-lower, alt-upper, ab-upper[:A:B], ab-lower[:A:B]");
  tails_cmd->add_option("--mean", tails_args.mean, "Use this mean instead of the distribution's");
  tails_cmd->add_option("--samples", tails_args.samples, "Sample this many outcomes instead of exact enumeration");
  tails_cmd->add_option("--seed", tails_args.seed);
  tails_cmd->add_option("--threads", tails_args.threads);

  CounterexampleArgs counter_args;
  auto* counter_cmd = app.add_subcommand("counterexample", "Staircase function under a uniform random set");
  counter_cmd->add_option("--n", counter_args.n, "Ground set size (perfect square)")->required();
  add_output_options(counter_cmd, counter_args.out, "json");

  CrossoverArgs crossover_args;
  auto* crossover_cmd = app.add_subcommand("crossover", "Deviation needed by each upper-tail form for a target");
  crossover_cmd->add_option("--mean", crossover_args.mean);
  crossover_cmd->add_option("--target", crossover_args.target);
  add_output_options(crossover_cmd, crossover_args.out, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, ErrorCode::Input, e.what());
    return exit_status(ErrorCode::Input);
  }

  try {
    if (*classify_cmd) return run_classify(classify_args, out);
    if (*selfbound_cmd) return run_selfbound(selfbound_args, out);
    if (*bound_cmd) return run_bound(bound_args, out);
    if (*tails_cmd) return run_tails(tails_args, out);
    if (*counter_cmd) return run_counterexample(counter_args, out);
    if (*crossover_cmd) return run_crossover(crossover_args, out);
  } catch (const Error& e) {
    report_error(err, e.code(), e.what());
    return exit_status(e.code());
  } catch (const std::exception& e) {
    report_error(err, ErrorCode::Internal, e.what());
    return exit_status(ErrorCode::Internal);
  }
  return 0;
}

}  // namespace setconc::cli
