#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "setconc/bits.hpp"
#include "setconc/rational.hpp"

namespace setconc {

/// Largest ground set stored as a dense 2^n table.
inline constexpr int kMaxDenseElements = 30;

/// Ground set {1, ..., n} for a dense set function.
class GroundSet {
 public:
  /// Throws CapacityError unless 1 <= n <= kMaxDenseElements.
  explicit GroundSet(int n);

  int size() const { return n_; }
  /// Number of subsets, 2^n.
  std::size_t subset_count() const { return std::size_t{1} << n_; }
  Mask all() const { return full_mask(n_); }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int n_;
};

/// Dense set function: one exact value per subset, indexed by bitmask.
/// Immutable after construction.
class SetFunction {
 public:
  /// Throws InputError if values.size() != 2^n.
  SetFunction(GroundSet ground, std::vector<Rational> values);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  std::size_t size() const { return values_.size(); }
  std::span<const Rational> values() const { return values_; }

  /// Unchecked access.
  const Rational& operator[](Mask s) const { return values_[s]; }

  /// Same as evaluate(*this, s).
  const Rational& at(Mask s) const;

 private:
  GroundSet ground_;
  std::vector<Rational> values_;
};

/// Set function whose value depends only on |S|: levels[k] = g(k).
/// Ground sets may be far larger than the dense cap.
class SymmetricSetFunction {
 public:
  /// Throws InputError unless levels.size() == n + 1 and n >= 1.
  SymmetricSetFunction(long n, std::vector<Rational> levels);

  long n() const { return n_; }
  std::span<const Rational> levels() const { return levels_; }
  const Rational& level(long k) const { return levels_[static_cast<std::size_t>(k)]; }

  /// Materializes the 2^n table; CapacityError when n exceeds the dense cap.
  SetFunction to_dense() const;

 private:
  long n_;
  std::vector<Rational> levels_;
};

/// f(S). Throws InputError when S has bits outside the ground set.
const Rational& evaluate(const SetFunction& f, Mask s);

/// Marginal value f(S + j) - f(S). Throws InputError when j is in S or out of range.
Rational marginal(const SetFunction& f, Mask s, Element j);

/// Largest |f(S + j) - f(S)| over all S and j not in S; zero for constants.
Rational lipschitz_constant(const SetFunction& f);

/// Multiplies every value by `factor`.
SetFunction scaled(const SetFunction& f, const Rational& factor);

/// Divides by the Lipschitz constant when it exceeds 1, so the result is 1-Lipschitz.
SetFunction normalized_to_unit_lipschitz(const SetFunction& f);

}  // namespace setconc
