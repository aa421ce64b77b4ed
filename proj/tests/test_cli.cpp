#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "setconc/cli.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int status = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("setconc_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs the installed binary through the shell so exit statuses are real.
Result run_binary(const std::string& args) {
  const fs::path err_file = scratch_dir() / "stderr.txt";
  const std::string command = std::string(SETCONC_CLI_PATH) + " " + args + " 2>" + err_file.string();
  Result r;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buffer{};
  std::size_t got;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err_file);
  return r;
}

json run_json(const std::string& args) {
  const Result r = run_binary(args);
  EXPECT_EQ(r.status, 0) << args << "\n" << r.err;
  return json::parse(r.out);
}

std::string error_code(const Result& r) { return json::parse(r.err).at("error").at("code").get<std::string>(); }

TEST(Classify, ThreeElementThreeHalves) {
  const json doc = run_json("classify --generator three-element --top 3/2");
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["submodular"], false);
  EXPECT_EQ(doc["fractionally_subadditive"], true);
  EXPECT_EQ(doc["witnesses"]["submodular"]["S"]["set"], "{1}");
}

TEST(Classify, ThreeElementOneAllTrue) {
  const json doc = run_json("classify --generator three-element --top 1");
  for (const char* key : {"nonnegative", "monotone", "submodular", "fractionally_subadditive", "subadditive"})
    EXPECT_EQ(doc[key], true) << key;
}

TEST(Classify, ThreeElementTwoViolation) {
  const json doc = run_json("classify --generator three-element --top 2");
  const json& v = doc["witnesses"]["fractionally_subadditive"];
  EXPECT_EQ(v["target"]["mask"], 7);
  EXPECT_EQ(v["cover_value"], "3/2");
  ASSERT_EQ(v["cover"].size(), 3u);
  for (const auto& term : v["cover"]) EXPECT_EQ(term["weight"], "1/2");
}

TEST(Classify, FileInputWithDecimals) {
  const fs::path file = scratch_dir() / "three.json";
  std::ofstream(file) << R"({"n": 3, "values": [0, 1, 1, 1, 1, 1, 1, 1.5]})";
  const json doc = run_json("classify --input " + file.string());
  EXPECT_EQ(doc["fractionally_subadditive"], true);
  EXPECT_EQ(doc["submodular"], false);
}

TEST(Classify, CertificatesOnRequest) {
  const json doc = run_json("classify --generator three-element --top 1 --certificates");
  ASSERT_TRUE(doc.contains("xos_certificates"));
  EXPECT_EQ(doc["xos_certificates"].size(), 8u);
}

TEST(Classify, MalformedValuesArrayNamesExpectedLength) {
  const fs::path file = scratch_dir() / "bad.json";
  std::ofstream(file) << R"({"n": 2, "values": [0, 1, 1]})";
  const Result r = run_binary("classify --input " + file.string());
  EXPECT_NE(r.status, 0);
  EXPECT_EQ(error_code(r), "parse");
  EXPECT_NE(r.err.find('4'), std::string::npos) << r.err;
}

TEST(Classify, SyntaxErrorIsParseError) {
  const fs::path file = scratch_dir() / "syntax.json";
  std::ofstream(file) << "{\"n\": 2,\n \"values\": [0, 1,, 2]}";
  const Result r = run_binary("classify --input " + file.string());
  EXPECT_NE(r.status, 0);
  EXPECT_EQ(error_code(r), "parse");
}

TEST(Classify, CapacityNamesTheCheck) {
  const json doc = run_json("classify --generator uniform-matroid --n 17 --k 2");
  EXPECT_TRUE(doc["subadditive"].is_null());
  EXPECT_TRUE(doc["not_computed"].contains("subadditive"));
}

TEST(Selfbound, Examples) {
  const json minimal = run_json("selfbound --generator directed-edge --minimal-a");
  EXPECT_EQ(minimal["minimal_a"], "2");
  EXPECT_EQ(minimal["kind"], "finite");

  EXPECT_EQ(run_json("selfbound --generator three-element --top 3/2 --a 1 --b 0")["verdict"], true);

  const json fail = run_json("selfbound --generator directed-edge --a 1 --b 0");
  EXPECT_EQ(fail["verdict"], false);
  EXPECT_EQ(fail["sum_violation"]["x"]["mask"], 1);
  EXPECT_EQ(fail["sum_violation"]["decrement_sum"], "2");
}

TEST(Selfbound, RangeFailureIsPreconditionError) {
  const Result r = run_binary("selfbound --generator additive --weights 2,1 --minimal-a");
  EXPECT_NE(r.status, 0);
  EXPECT_EQ(error_code(r), "precondition");
}

TEST(Bound, NamedBounds) {
  const json up = run_json("bound chernoff-upper --mean 1 --delta 1");
  EXPECT_NEAR(up["bound"].get<double>(), std::exp(1.0) / 4, 1e-15);
  EXPECT_NEAR(up["log_bound"].get<double>(), 1 - 2 * std::log(2.0), 1e-15);
  EXPECT_NEAR(run_json("bound ab-lower --a 2 --b 0 --mean 8 --t 4")["bound"].get<double>(), std::exp(-0.5), 1e-15);
  const json tail = run_json("bound subadditive-tail --threshold 3 --p-below 0.5 --q 2 --k 5");
  EXPECT_NEAR(tail["bound"].get<double>(), 0.125, 1e-15);
  EXPECT_EQ(tail["hypothesis_met"], false);
  EXPECT_TRUE(tail.contains("warning"));
}

TEST(Bound, Errors) {
  Result r = run_binary("bound chernoff-lower --mean 1 --delta 2");
  EXPECT_NE(r.status, 0);
  EXPECT_EQ(error_code(r), "domain");
  r = run_binary("bound subadditive-tail --threshold 3 --p-below 0.5 --q 2 --k 5 --strict");
  EXPECT_EQ(error_code(r), "hypothesis");
  r = run_binary("bound ab-upper --a 0.2 --mean 1 --t 1");
  EXPECT_EQ(error_code(r), "domain");
  r = run_binary("bound nonsense --mean 1 --t 1");
  EXPECT_EQ(error_code(r), "input");
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream parts(line);
    while (std::getline(parts, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

TEST(Tails, StaircaseLowerRow) {
  const Result r = run_binary("tails --generator staircase --n 10000 --mean 150 --deltas 1/3 --bounds chernoff-lower");
  ASSERT_EQ(r.status, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"delta", "exact_upper", "exact_lower", "chernoff_lower"}));
  EXPECT_NEAR(std::stod(rows[1][2]), 0.16, 0.01);
  EXPECT_NEAR(std::stod(rows[1][3]), 2.4e-4, 0.05e-4);
}

TEST(Tails, DirectedEdgeRowsRespectSubmodularBounds) {
  const Result r = run_binary("tails --generator directed-edge --deltas 0,0.5,1,2,3 --bounds ab-upper:2:0,ab-lower:2:0");
  ASSERT_EQ(r.status, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[1][3], "1");
  EXPECT_EQ(rows[1][4], "1");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(std::stod(rows[i][1]), std::stod(rows[i][3]));
    if (!rows[i][4].empty()) EXPECT_LE(std::stod(rows[i][2]), std::stod(rows[i][4]));
  }
  EXPECT_TRUE(rows[4][4].empty());
}

TEST(Tails, SampledModeIsReproducible) {
  const std::string args = "tails --generator staircase --n 400 --samples 20000 --seed 5 --format json";
  const Result a = run_binary(args + " --threads 1");
  const Result b = run_binary(args + " --threads 3");
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Counterexample, LargeN) {
  const json doc = run_json("counterexample --n 10000");
  EXPECT_GE(doc["pr_z_eq_sqrt_n"].get<double>(), 0.1);
  EXPECT_GE(doc["pr_z_eq_2sqrt_n"].get<double>(), 0.1);
  EXPECT_GE(doc["stddev"].get<double>(), 30);
  EXPECT_LT(doc["lower_tail"]["chernoff_lower"].get<double>(), 1e-3);
}

TEST(Counterexample, SixteenHasMinimalA) {
  const json doc = run_json("counterexample --n 16");
  EXPECT_EQ(doc["minimal_a"]["minimal_a"], "7/5");
  EXPECT_EQ(doc["minimal_a"]["attained_at"]["mask"], 127);
}

TEST(Counterexample, NonSquareFails) {
  const Result r = run_binary("counterexample --n 15");
  EXPECT_NE(r.status, 0);
  EXPECT_EQ(error_code(r), "input");
}

TEST(Crossover, Examples) {
  const json six = run_json("crossover --mean 1 --target 1e-6");
  EXPECT_NEAR(six["chernoff"]["delta"].get<double>(), 8.9085, 1e-4);
  EXPECT_NEAR(six["alt"]["t"].get<double>(), 11.5936, 1e-4);
  EXPECT_EQ(six["chernoff_smaller"], true);
  const json one = run_json("crossover --mean 1 --target 1");
  EXPECT_EQ(one["chernoff"]["delta"], 0.0);
  EXPECT_EQ(one["alt"]["t"], 0.0);
  const json three = run_json("crossover --mean 1 --target 1e-3");
  EXPECT_LT(three["chernoff"]["t"].get<double>(), three["alt"]["t"].get<double>());
}

TEST(Determinism, RepeatedRunsAreByteIdentical) {
  for (const std::string args : {"classify --generator three-element --top 2 --certificates",
                                 "selfbound --generator staircase --n 16 --minimal-a",
                                 "tails --generator staircase --n 16 --samples 5000 --seed 3",
                                 "counterexample --n 10000"}) {
    const fs::path a = scratch_dir() / "a.out", b = scratch_dir() / "b.out";
    ASSERT_EQ(run_binary(args + " --output " + a.string()).status, 0) << args;
    ASSERT_EQ(run_binary(args + " --output " + b.string()).status, 0) << args;
    EXPECT_EQ(std::hash<std::string>{}(slurp(a)), std::hash<std::string>{}(slurp(b))) << args;
    EXPECT_FALSE(slurp(a).empty());
  }
}

TEST(Errors, EveryFailureCarriesACode) {
  for (const std::string args : {"classify", "classify --generator nope", "classify --input /nonexistent.json",
                                 "classify --generator staircase --n 36", "tails --generator directed-edge --p 2",
                                 "selfbound --generator three-element --top x", "frobnicate"}) {
    const Result r = run_binary(args);
    EXPECT_NE(r.status, 0) << args;
    EXPECT_FALSE(error_code(r).empty()) << args;
  }
}

TEST(InProcess, HelpExitsZero) {
  std::ostringstream out, err;
  const char* argv[] = {"setconc", "--help"};
  EXPECT_EQ(setconc::cli::run(2, argv, out, err), 0);
  EXPECT_NE(out.str().find("classify"), std::string::npos);
}

}  // namespace
