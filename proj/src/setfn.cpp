#include "setconc/setfn.hpp"

#include <string>

#include "setconc/error.hpp"

namespace setconc {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxDenseElements)
    throw CapacityError("dense ground set needs 1 <= n <= " + std::to_string(kMaxDenseElements) +
                        ", got n = " + std::to_string(n));
}

SetFunction::SetFunction(GroundSet ground, std::vector<Rational> values)
    : ground_(ground), values_(std::move(values)) {
  if (values_.size() != ground_.subset_count())
    throw InputError("values array must have 2^" + std::to_string(ground_.size()) + " = " +
                     std::to_string(ground_.subset_count()) + " entries, got " +
                     std::to_string(values_.size()));
}

const Rational& SetFunction::at(Mask s) const { return evaluate(*this, s); }

SymmetricSetFunction::SymmetricSetFunction(long n, std::vector<Rational> levels)
    : n_(n), levels_(std::move(levels)) {
  if (n < 1) throw InputError("symmetric function needs n >= 1");
  if (levels_.size() != static_cast<std::size_t>(n) + 1)
    throw InputError("level table must have n + 1 = " + std::to_string(n + 1) + " entries, got " +
                     std::to_string(levels_.size()));
}

SetFunction SymmetricSetFunction::to_dense() const {
  if (n_ > kMaxDenseElements)
    throw CapacityError("symmetric function with n = " + std::to_string(n_) +
                        " exceeds the dense cap of " + std::to_string(kMaxDenseElements));
  GroundSet ground(static_cast<int>(n_));
  std::vector<Rational> values(ground.subset_count());
  for (Mask s = 0; s < values.size(); ++s) values[s] = levels_[static_cast<std::size_t>(cardinality(s))];
  return SetFunction(ground, std::move(values));
}

const Rational& evaluate(const SetFunction& f, Mask s) {
  if (s >= f.size())
    throw InputError("subset mask " + std::to_string(s) + " out of range for n = " +
                     std::to_string(f.n()));
  return f[s];
}

Rational marginal(const SetFunction& f, Mask s, Element j) {
  if (j.label < 1 || j.label > f.n())
    throw InputError("element " + std::to_string(j.label) + " outside ground set of size " +
                     std::to_string(f.n()));
  if (contains(s, j))
    throw InputError("element " + std::to_string(j.label) + " already in " + set_notation(s));
  return evaluate(f, s | j.bit()) - evaluate(f, s);
}

Rational lipschitz_constant(const SetFunction& f) {
  Rational best = 0;
  for (Mask s = 0; s < f.size(); ++s) {
    for (int i = 0; i < f.n(); ++i) {
      const Mask bit = Mask{1} << i;
      if (s & bit) continue;
      Rational d = f[s | bit] - f[s];
      if (d < 0) d = -d;
      if (d > best) best = d;
    }
  }
  return best;
}

SetFunction scaled(const SetFunction& f, const Rational& factor) {
  std::vector<Rational> values(f.values().begin(), f.values().end());
  for (auto& v : values) v *= factor;
  return SetFunction(f.ground(), std::move(values));
}

SetFunction normalized_to_unit_lipschitz(const SetFunction& f) {
  const Rational c = lipschitz_constant(f);
  if (c <= 1) return f;
  return scaled(f, Rational(1) / c);
}

}  // namespace setconc
