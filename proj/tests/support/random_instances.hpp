#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "setconc/generators.hpp"

namespace setconc::testing {

/// Fixed-seed generators for the property suites. Sizes are drawn from [min_n, max_n].
class InstanceFactory {
 public:
  explicit InstanceFactory(std::uint64_t seed, int min_n = 2, int max_n = 10)
      : rng_(seed), min_n_(min_n), max_n_(max_n) {}

  gen::Coverage coverage();
  gen::UniformMatroidRank uniform_matroid();
  gen::BudgetAdditive budget_additive();
  /// Weighted directed cut with integer weights in [1, 4].
  gen::DirectedCut directed_cut();

  /// Cycles coverage -> uniform matroid -> budget additive.
  GeneratorSpec monotone_submodular(int index);

  int draw_n();
  std::mt19937_64& rng() { return rng_; }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::mt19937_64 rng_;
  int min_n_;
  int max_n_;
};

std::string describe(const GeneratorSpec& spec);

}  // namespace setconc::testing
