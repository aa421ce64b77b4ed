#include "setconc/generators.hpp"

#include <cmath>
#include <string>

#include "setconc/error.hpp"

namespace setconc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

long exact_sqrt(long n) {
  auto root = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  return root;
}

GroundSet dense_ground(std::size_t n, const char* what) {
  if (n < 1 || n > static_cast<std::size_t>(kMaxDenseElements))
    throw InputError(std::string(what) + ": ground set size must be in [1, " +
                     std::to_string(kMaxDenseElements) + "], got " + std::to_string(n));
  return GroundSet(static_cast<int>(n));
}

template <class Fn>
SetFunction tabulate(GroundSet ground, Fn&& value_of) {
  std::vector<Rational> values(ground.subset_count());
  for (Mask s = 0; s < values.size(); ++s) values[s] = value_of(s);
  return SetFunction(ground, std::move(values));
}

GeneratedFunction from_levels(long n, std::vector<Rational> levels) {
  SymmetricSetFunction g(n, std::move(levels));
  if (n <= kMaxDenseElements) return g.to_dense();
  return g;
}

SetFunction make(const gen::ThreeElement& spec) {
  return tabulate(GroundSet(3), [&](Mask s) -> Rational {
    const int k = cardinality(s);
    if (k == 0) return 0;
    if (k == 3) return spec.top;
    return 1;
  });
}

SetFunction make(const gen::DirectedEdge&) {
  return tabulate(GroundSet(2), [](Mask s) -> Rational { return s == 0b01 ? 1 : 0; });
}

SetFunction make(const gen::Coverage& spec) {
  const GroundSet ground = dense_ground(spec.covers.size(), "coverage");
  for (const auto& w : spec.universe_weights)
    if (w < 0) throw InputError("coverage: universe weights must be non-negative");
  // For each universe item, the elements covering it.
  std::vector<Mask> coverers(spec.universe_weights.size(), 0);
  for (std::size_t i = 0; i < spec.covers.size(); ++i) {
    for (int item : spec.covers[i]) {
      if (item < 0 || static_cast<std::size_t>(item) >= coverers.size())
        throw InputError("coverage: element " + std::to_string(i + 1) + " covers unknown item " +
                         std::to_string(item));
      coverers[static_cast<std::size_t>(item)] |= Mask{1} << i;
    }
  }
  return tabulate(ground, [&](Mask s) {
    Rational total = 0;
    for (std::size_t item = 0; item < coverers.size(); ++item)
      if (s & coverers[item]) total += spec.universe_weights[item];
    return total;
  });
}

SetFunction make(const gen::UniformMatroidRank& spec) {
  const GroundSet ground = dense_ground(static_cast<std::size_t>(std::max(spec.n, 0)), "uniform-matroid");
  if (spec.k < 0 || spec.k > spec.n)
    throw InputError("uniform-matroid: need 0 <= k <= n, got k = " + std::to_string(spec.k));
  return tabulate(ground, [&](Mask s) { return Rational(std::min(cardinality(s), spec.k)); });
}

SetFunction make(const gen::BudgetAdditive& spec) {
  const GroundSet ground = dense_ground(spec.weights.size(), "budget-additive");
  for (const auto& w : spec.weights)
    if (w < 0) throw InputError("budget-additive: weights must be non-negative");
  if (spec.budget < 0) throw InputError("budget-additive: budget must be non-negative");
  return tabulate(ground, [&](Mask s) {
    Rational total = 0;
    for (int i = 0; i < ground.size(); ++i)
      if (s & (Mask{1} << i)) total += spec.weights[static_cast<std::size_t>(i)];
    return total < spec.budget ? total : spec.budget;
  });
}

SetFunction make(const gen::Additive& spec) {
  const GroundSet ground = dense_ground(spec.weights.size(), "additive");
  return tabulate(ground, [&](Mask s) {
    Rational total = 0;
    for (int i = 0; i < ground.size(); ++i)
      if (s & (Mask{1} << i)) total += spec.weights[static_cast<std::size_t>(i)];
    return total;
  });
}

SetFunction make(const gen::DirectedCut& spec) {
  const GroundSet ground = dense_ground(static_cast<std::size_t>(std::max(spec.n, 0)), "directed-cut");
  for (const auto& arc : spec.arcs) {
    if (arc.from < 1 || arc.from > spec.n || arc.to < 1 || arc.to > spec.n || arc.from == arc.to)
      throw InputError("directed-cut: invalid arc " + std::to_string(arc.from) + " -> " +
                       std::to_string(arc.to));
    if (arc.weight < 0) throw InputError("directed-cut: arc weights must be non-negative");
  }
  return tabulate(ground, [&](Mask s) {
    Rational total = 0;
    for (const auto& arc : spec.arcs)
      if (contains(s, Element{arc.from}) && !contains(s, Element{arc.to})) total += arc.weight;
    return total;
  });
}

SetFunction make(const gen::ExplicitTable& spec) {
  const std::size_t size = spec.values.size();
  if (size < 2 || (size & (size - 1)) != 0)
    throw InputError("explicit table length must be a power of two >= 2, got " +
                     std::to_string(size));
  const int n = std::countr_zero(size);
  return SetFunction(dense_ground(static_cast<std::size_t>(n), "explicit"), spec.values);
}

}  // namespace

std::vector<Rational> staircase_levels(long n) {
  if (n < 1) throw InputError("staircase: n must be positive");
  const long root = exact_sqrt(n);
  if (root * root != n)
    throw InputError("staircase: n = " + std::to_string(n) + " is not a perfect square");
  if (root < 3)
    throw InputError("staircase: n = " + std::to_string(n) +
                     " is too small; the pieces overlap unless sqrt(n) >= 3");
  // n - root = root (root - 1) is even, so both breakpoints are integers.
  const long low = (n - root) / 2;
  const long high = (n + root) / 2;
  std::vector<Rational> levels(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    long value;
    if (k < root) value = k;
    else if (k <= low) value = root;
    else if (k < high) value = root + k - low;
    else value = 2 * root;
    levels[static_cast<std::size_t>(k)] = value;
  }
  return levels;
}

std::vector<Rational> cardinality_relu_levels(long n) {
  if (n < 1) throw InputError("cardinality-relu: n must be positive");
  std::vector<Rational> levels(static_cast<std::size_t>(n) + 1);
  const Rational half(n, 2);
  for (long k = 0; k <= n; ++k) {
    Rational excess = Rational(k) - half;
    levels[static_cast<std::size_t>(k)] = excess > 0 ? excess : Rational(0);
  }
  return levels;
}

GeneratedFunction generate(const GeneratorSpec& spec) {
  return std::visit(
      Overloaded{
          [](const gen::Staircase& s) -> GeneratedFunction {
            return from_levels(s.n, staircase_levels(s.n));
          },
          [](const gen::CardinalityReLU& s) -> GeneratedFunction {
            return from_levels(s.n, cardinality_relu_levels(s.n));
          },
          [](const auto& s) -> GeneratedFunction { return make(s); },
      },
      spec);
}

SetFunction generate_dense(const GeneratorSpec& spec) {
  GeneratedFunction generated = generate(spec);
  if (auto* dense = std::get_if<SetFunction>(&generated)) return std::move(*dense);
  return std::get<SymmetricSetFunction>(generated).to_dense();
}

std::string generator_name(const GeneratorSpec& spec) {
  return std::visit(Overloaded{
                        [](const gen::ThreeElement&) { return "three-element"; },
                        [](const gen::DirectedEdge&) { return "directed-edge"; },
                        [](const gen::Staircase&) { return "staircase"; },
                        [](const gen::CardinalityReLU&) { return "cardinality-relu"; },
                        [](const gen::Coverage&) { return "coverage"; },
                        [](const gen::UniformMatroidRank&) { return "uniform-matroid"; },
                        [](const gen::BudgetAdditive&) { return "budget-additive"; },
                        [](const gen::Additive&) { return "additive"; },
                        [](const gen::DirectedCut&) { return "directed-cut"; },
                        [](const gen::ExplicitTable&) { return "explicit"; },
                    },
                    spec);
}

}  // namespace setconc
