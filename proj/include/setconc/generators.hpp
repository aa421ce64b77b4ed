#pragma once

#include <string>
#include <variant>
#include <vector>

#include "setconc/setfn.hpp"

namespace setconc {

namespace gen {

/// f(0) = 0, f(S) = 1 for |S| in {1, 2}, f({1,2,3}) = top.
struct ThreeElement {
  Rational top;
};

/// Cut function of the single arc 1 -> 2: f(x1, x2) = x1 (1 - x2).
struct DirectedEdge {};

/// Piecewise-cardinality subadditive function with Theta(sqrt n) spread.
/// Requires n to be a perfect square.
struct Staircase {
  long n = 0;
};

/// f(S) = max{0, |S| - n/2}.
struct CardinalityReLU {
  long n = 0;
};

/// Weighted coverage: element i covers the universe items in covers[i];
/// f(S) is the total weight of items covered by S.
struct Coverage {
  std::vector<Rational> universe_weights;
  std::vector<std::vector<int>> covers;
};

/// Rank of the uniform matroid U(k, n): f(S) = min(|S|, k).
struct UniformMatroidRank {
  int n = 0;
  int k = 0;
};

/// f(S) = min(budget, sum of weights in S).
struct BudgetAdditive {
  std::vector<Rational> weights;
  Rational budget;
};

struct Additive {
  std::vector<Rational> weights;
};

/// Weighted directed cut: f(S) = total weight of arcs leaving S.
struct DirectedCut {
  struct Arc {
    int from = 1;  // 1-based element labels
    int to = 2;
    Rational weight;
  };
  int n = 0;
  std::vector<Arc> arcs;
};

/// Raw table in bitmask order; length must be a power of two.
struct ExplicitTable {
  std::vector<Rational> values;
};

}  // namespace gen

using GeneratorSpec =
    std::variant<gen::ThreeElement, gen::DirectedEdge, gen::Staircase, gen::CardinalityReLU,
                 gen::Coverage, gen::UniformMatroidRank, gen::BudgetAdditive, gen::Additive,
                 gen::DirectedCut, gen::ExplicitTable>;

using GeneratedFunction = std::variant<SetFunction, SymmetricSetFunction>;

/// Builds the function described by `spec`. Staircase and CardinalityReLU come
/// back symmetric when n exceeds the dense cap, dense otherwise; all other
/// generators are dense. Throws InputError on invalid parameters.
GeneratedFunction generate(const GeneratorSpec& spec);

/// generate() followed by a dense conversion; CapacityError for symmetric results.
SetFunction generate_dense(const GeneratorSpec& spec);

/// Level table of the staircase function; InputError unless n is a perfect square.
std::vector<Rational> staircase_levels(long n);

std::vector<Rational> cardinality_relu_levels(long n);

/// Kebab-case generator name as used in function files and CLI flags.
std::string generator_name(const GeneratorSpec& spec);

}  // namespace setconc
