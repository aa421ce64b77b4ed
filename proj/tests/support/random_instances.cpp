#include "support/random_instances.hpp"

#include <sstream>

namespace setconc::testing {

int InstanceFactory::draw_n() { return uniform(min_n_, max_n_); }

gen::Coverage InstanceFactory::coverage() {
  const int n = draw_n();
  const int items = uniform(1, 2 * n);
  gen::Coverage spec;
  for (int i = 0; i < items; ++i) spec.universe_weights.emplace_back(uniform(1, 5));
  spec.covers.resize(static_cast<std::size_t>(n));
  for (auto& cover : spec.covers)
    for (int item = 0; item < items; ++item)
      if (uniform(0, 9) < 4) cover.push_back(item);
  return spec;
}

gen::UniformMatroidRank InstanceFactory::uniform_matroid() {
  const int n = draw_n();
  return {n, uniform(0, n)};
}

gen::BudgetAdditive InstanceFactory::budget_additive() {
  const int n = draw_n();
  gen::BudgetAdditive spec;
  int total = 0;
  for (int i = 0; i < n; ++i) {
    const int w = uniform(0, 5);
    spec.weights.emplace_back(w);
    total += w;
  }
  spec.budget = Rational(uniform(0, 2 * std::max(total, 1)), 2);
  return spec;
}

gen::DirectedCut InstanceFactory::directed_cut() {
  gen::DirectedCut spec;
  spec.n = draw_n();
  for (int u = 1; u <= spec.n; ++u)
    for (int v = 1; v <= spec.n; ++v)
      if (u != v && uniform(0, 9) < 3) spec.arcs.push_back({u, v, Rational(uniform(1, 4))});
  return spec;
}

GeneratorSpec InstanceFactory::monotone_submodular(int index) {
  switch (index % 3) {
    case 0: return coverage();
    case 1: return uniform_matroid();
    default: return budget_additive();
  }
}

std::string describe(const GeneratorSpec& spec) {
  std::ostringstream out;
  out << generator_name(spec);
  if (const auto* m = std::get_if<gen::UniformMatroidRank>(&spec)) out << "(n=" << m->n << ",k=" << m->k << ")";
  if (const auto* c = std::get_if<gen::Coverage>(&spec)) out << "(n=" << c->covers.size() << ")";
  if (const auto* b = std::get_if<gen::BudgetAdditive>(&spec)) out << "(n=" << b->weights.size() << ")";
  if (const auto* d = std::get_if<gen::DirectedCut>(&spec)) out << "(n=" << d->n << ",arcs=" << d->arcs.size() << ")";
  return out.str();
}

}  // namespace setconc::testing
