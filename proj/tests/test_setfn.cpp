#include <gtest/gtest.h>

#include "setconc/classify.hpp"
#include "setconc/error.hpp"
#include "setconc/function_io.hpp"
#include "setconc/generators.hpp"
#include "setconc/setfn.hpp"
#include "support/random_instances.hpp"

namespace setconc {
namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

TEST(Rational, ParsesDecimalsExactly) {
  EXPECT_EQ(parse_rational("0.1"), R(1, 10));
  EXPECT_EQ(parse_rational("-2.5e-3"), R(-1, 400));
  EXPECT_EQ(parse_rational("3/2"), R(3, 2));
  EXPECT_EQ(parse_rational(" 7 "), R(7));
  EXPECT_EQ(parse_rational("1e3"), R(1000));
  EXPECT_EQ(parse_rational(".5"), R(1, 2));
  EXPECT_EQ(parse_rational("0.08"), R(2, 25));
  EXPECT_EQ(parse_rational("0010"), R(10));
  EXPECT_EQ(parse_rational("09/010"), R(9, 10));
  EXPECT_EQ(to_string(R(6, 4)), "3/2");
  EXPECT_EQ(to_string(R(-4, 2)), "-2");
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1e", "--1", "1/x", "e5"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Bits, CompressExpandRoundTrip) {
  const Mask support = 0b101101;
  for (Mask packed = 0; packed < 16; ++packed) EXPECT_EQ(compress(expand(packed, support), support), packed);
  EXPECT_EQ(set_notation(0b101), "{1,3}");
  EXPECT_EQ(set_notation(0), "{}");
}

TEST(GroundSet, EnforcesDenseCap) {
  EXPECT_THROW(GroundSet(0), CapacityError);
  EXPECT_THROW(GroundSet(31), CapacityError);
  EXPECT_EQ(GroundSet(30).size(), 30);
}

TEST(SetFunction, RejectsWrongLength) {
  EXPECT_THROW(SetFunction(GroundSet(2), ints({0, 1, 2})), InputError);
}

TEST(Evaluate, DirectedEdge) {
  const SetFunction f = generate_dense(gen::DirectedEdge{});
  EXPECT_EQ(evaluate(f, 0b01), R(1));
  EXPECT_EQ(evaluate(f, 0), R(0));
  EXPECT_EQ(evaluate(f, 0b10), R(0));
  EXPECT_EQ(evaluate(f, 0b11), R(0));
  EXPECT_THROW(evaluate(f, 0b100), InputError);
}

TEST(Evaluate, StaircaseSixteenAtEight) {
  const SetFunction f = generate_dense(gen::Staircase{16});
  EXPECT_EQ(evaluate(f, 0xFF), R(6));
  EXPECT_EQ(evaluate(f, 0xFF00), R(6));
}

TEST(Marginal, Examples) {
  const SetFunction edge = generate_dense(gen::DirectedEdge{});
  EXPECT_EQ(marginal(edge, 0, Element{1}), R(1));
  EXPECT_EQ(marginal(edge, 0b10, Element{1}), R(0));
  const SetFunction add = generate_dense(gen::Additive{ints({2, 3})});
  EXPECT_EQ(marginal(add, 0, Element{2}), R(3));
  EXPECT_THROW(marginal(add, 0b10, Element{2}), InputError);
  EXPECT_THROW(marginal(add, 0, Element{3}), InputError);
}

TEST(Lipschitz, Examples) {
  EXPECT_EQ(lipschitz_constant(generate_dense(gen::Staircase{16})), R(1));
  EXPECT_EQ(lipschitz_constant(generate_dense(gen::Additive{ints({1, 1, 1})})), R(1));
  EXPECT_EQ(lipschitz_constant(generate_dense(gen::Additive{ints({2, 1})})), R(2));
  EXPECT_EQ(lipschitz_constant(generate_dense(gen::ExplicitTable{ints({5, 5, 5, 5})})), R(0));
}

TEST(Lipschitz, NormalizationOnlyShrinks) {
  const SetFunction big = generate_dense(gen::Additive{ints({4, 2})});
  EXPECT_EQ(lipschitz_constant(normalized_to_unit_lipschitz(big)), R(1));
  const SetFunction small = generate_dense(gen::Additive{{R(1, 2)}});
  EXPECT_EQ(normalized_to_unit_lipschitz(small)[1], R(1, 2));
}

TEST(Generate, ThreeElementTable) {
  const SetFunction f = generate_dense(gen::ThreeElement{R(3, 2)});
  const std::vector<Rational> expected{R(0), R(1), R(1), R(1), R(1), R(1), R(1), R(3, 2)};
  ASSERT_EQ(f.size(), expected.size());
  for (Mask s = 0; s < 8; ++s) EXPECT_EQ(f[s], expected[s]) << s;
}

TEST(Generate, StaircaseSixteenLevels) {
  const auto levels = staircase_levels(16);
  const std::vector<long> expected{0, 1, 2, 3, 4, 4, 4, 5, 6, 7, 8, 8, 8, 8, 8, 8, 8};
  ASSERT_EQ(levels.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(levels[k], R(expected[k])) << k;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    const Rational step = levels[k] - levels[k - 1];
    EXPECT_TRUE(step == 0 || step == 1) << k;
  }
}

TEST(Generate, AdditiveTable) {
  const SetFunction f = generate_dense(gen::Additive{ints({1, 1})});
  EXPECT_EQ(f[0], R(0));
  EXPECT_EQ(f[1], R(1));
  EXPECT_EQ(f[2], R(1));
  EXPECT_EQ(f[3], R(2));
}

TEST(Generate, RepresentationSwitchesAboveDenseCap) {
  EXPECT_TRUE(std::holds_alternative<SetFunction>(generate(gen::Staircase{16})));
  EXPECT_TRUE(std::holds_alternative<SymmetricSetFunction>(generate(gen::Staircase{36})));
  EXPECT_TRUE(std::holds_alternative<SymmetricSetFunction>(generate(gen::CardinalityReLU{400})));
  EXPECT_TRUE(std::holds_alternative<SetFunction>(generate(gen::CardinalityReLU{4})));
  EXPECT_THROW(generate_dense(gen::Staircase{10000}), CapacityError);
}

TEST(Generate, RejectsInvalidParameters) {
  EXPECT_THROW(generate(gen::Staircase{15}), InputError);
  EXPECT_THROW(generate(gen::Staircase{4}), InputError);
  EXPECT_THROW(generate(gen::Coverage{{R(-1)}, {{0}}}), InputError);
  EXPECT_THROW(generate(gen::Coverage{{R(1)}, {{3}}}), InputError);
  EXPECT_THROW(generate(gen::UniformMatroidRank{3, 4}), InputError);
  EXPECT_THROW(generate(gen::ExplicitTable{ints({0, 1, 2})}), InputError);
  EXPECT_THROW(generate(gen::DirectedCut{2, {{1, 1, R(1)}}}), InputError);
}

TEST(Generate, SymmetricMatchesDense) {
  const auto sym = std::get<SymmetricSetFunction>(generate(gen::Staircase{49}));
  const auto dense = generate_dense(gen::Staircase{16});
  const SymmetricSetFunction small(16, staircase_levels(16));
  const SetFunction expanded = small.to_dense();
  for (Mask s = 0; s < dense.size(); ++s) EXPECT_EQ(expanded[s], dense[s]);
  EXPECT_EQ(sym.level(49), R(14));
}

TEST(Generate, CardinalityReLULevels) {
  const auto levels = cardinality_relu_levels(400);
  EXPECT_EQ(levels[200], R(0));
  EXPECT_EQ(levels[220], R(20));
  EXPECT_EQ(levels[400], R(200));
}

// Property: marginal agrees with two evaluations for every generator family.
TEST(Properties, MarginalIsDifferenceOfEvaluations) {
  testing::InstanceFactory factory(11, 1, 6);
  std::vector<GeneratorSpec> specs{gen::ThreeElement{R(7, 4)}, gen::DirectedEdge{}, gen::Staircase{16},
                                   gen::CardinalityReLU{6}, gen::Additive{ints({3, -1, 2})}};
  for (int i = 0; i < 30; ++i) {
    specs.push_back(factory.monotone_submodular(i));
    specs.push_back(factory.directed_cut());
  }
  for (const auto& spec : specs) {
    const SetFunction f = generate_dense(spec);
    for (Mask s = 0; s < f.size(); ++s)
      for (int j = 1; j <= f.n(); ++j) {
        const Element e{j};
        if (contains(s, e)) continue;
        ASSERT_EQ(marginal(f, s, e), evaluate(f, s | e.bit()) - evaluate(f, s)) << testing::describe(spec);
      }
  }
}

TEST(Properties, StaircaseIsMonotoneUnitLipschitz) {
  for (long n : {9L, 16L}) {
    const SetFunction f = generate_dense(gen::Staircase{n});
    EXPECT_EQ(lipschitz_constant(f), R(1)) << n;
    EXPECT_TRUE(is_monotone(f).holds) << n;
  }
  for (long n : {25L, 36L, 100L, 10000L}) {
    const auto levels = staircase_levels(n);
    for (std::size_t k = 1; k < levels.size(); ++k) {
      const Rational step = levels[k] - levels[k - 1];
      ASSERT_TRUE(step == 0 || step == 1) << n << " at " << k;
    }
  }
}

TEST(Properties, ThreeElementMonotoneIffTopAtLeastOne) {
  for (int num = -4; num <= 12; ++num) {
    const Rational top(num, 4);
    EXPECT_EQ(is_monotone(generate_dense(gen::ThreeElement{top})).holds, top >= 1) << to_string(top);
  }
}

TEST(Properties, StandardFamiliesAreNonnegativeMonotoneSubmodular) {
  testing::InstanceFactory factory(2024, 1, 10);
  for (int i = 0; i < 150; ++i) {
    const GeneratorSpec spec = factory.monotone_submodular(i);
    const SetFunction f = generate_dense(spec);
    ASSERT_TRUE(is_nonnegative(f).holds) << testing::describe(spec);
    ASSERT_TRUE(is_monotone(f).holds) << testing::describe(spec);
    ASSERT_TRUE(is_submodular(f).holds) << testing::describe(spec);
  }
  for (int i = 0; i < 20; ++i) {
    gen::Additive additive;
    const int n = factory.draw_n();
    for (int j = 0; j < n; ++j) additive.weights.emplace_back(static_cast<long>(factory.rng()() % 7));
    const SetFunction f = generate_dense(additive);
    ASSERT_TRUE(is_nonnegative(f).holds && is_monotone(f).holds && is_submodular(f).holds);
  }
}

TEST(FunctionIo, ParsesValuesExactly) {
  const auto doc = parse_json_exact(R"({"n": 2, "values": [0, 0.1, "3/2", 1e-1]})");
  const SetFunction f = std::get<SetFunction>(function_from_json(doc));
  EXPECT_EQ(f[1], R(1, 10));
  EXPECT_EQ(f[2], R(3, 2));
  EXPECT_EQ(f[3], R(1, 10));
}

TEST(FunctionIo, GeneratorDocument) {
  const auto doc = parse_json_exact(R"({"generator": "three-element", "params": {"top": "9/4"}})");
  const SetFunction f = std::get<SetFunction>(function_from_json(doc));
  EXPECT_EQ(f[7], R(9, 4));
}

TEST(FunctionIo, LengthMismatchNamesExpectedLength) {
  const auto doc = parse_json_exact(R"({"n": 2, "values": [0, 1, 2]})");
  try {
    function_from_json(doc);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find('4'), std::string::npos) << e.what();
  }
}

TEST(FunctionIo, SyntaxErrorsAreParseErrors) {
  EXPECT_THROW(parse_json_exact("{\"n\": 2,"), ParseError);
  EXPECT_THROW(function_from_json(parse_json_exact(R"({"generator": "nope", "params": {}})")), Error);
  EXPECT_THROW(function_from_json(parse_json_exact(R"({"n": 1, "values": [0, "x"]})")), ParseError);
}

}  // namespace
}  // namespace setconc
