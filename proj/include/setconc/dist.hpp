#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "setconc/bounds.hpp"
#include "setconc/setfn.hpp"

namespace setconc {

/// Largest ground set for full outcome enumeration.
inline constexpr int kMaxEnumerationElements = 24;
/// Largest n for which the symmetric pushforward is kept in exact rationals.
inline constexpr long kMaxExactBinomial = 20000;

/// Independent coordinates, X_i = 1 with probability p[i].
class BernoulliProduct {
 public:
  /// InputError unless every p_i lies in [0, 1].
  explicit BernoulliProduct(std::vector<Rational> p);
  static BernoulliProduct uniform(int n, const Rational& p = Rational(1, 2));

  int n() const { return static_cast<int>(p_.size()); }
  const std::vector<Rational>& p() const { return p_; }
  /// True when all coordinates share one probability.
  bool identical() const;

 private:
  std::vector<Rational> p_;
};

/// Law of Z = f(X). Probabilities are always available as doubles; exact
/// rationals are kept when the distribution came from enumeration or an exact
/// binomial pushforward.
struct Distribution {
  std::vector<Rational> support;  // strictly increasing
  std::vector<double> probs;
  std::optional<std::vector<Rational>> exact_probs;

  bool is_exact() const { return exact_probs.has_value(); }
  /// Probability of one support value (0 if absent), as double.
  double probability_of(const Rational& value) const;
  std::optional<Rational> exact_probability_of(const Rational& value) const;
};

/// Enumerates all 2^n outcomes. CapacityError for n > kMaxEnumerationElements,
/// InputError when bp.n() != f.n().
Distribution exact_distribution(const SetFunction& f, const BernoulliProduct& bp);

/// Pushforward of Binomial(n, p) through the level table. Exact when
/// n <= kMaxExactBinomial; otherwise each atom is accumulated in 50-digit
/// floating point and rounded to double.
Distribution symmetric_distribution(const SymmetricSetFunction& g, const Rational& p);

struct SampleOptions {
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  /// 0 picks the hardware count; output does not depend on this.
  unsigned threads = 0;
};

/// Empirical law from independent draws, keyed by outcome index through a
/// Philox stream. InputError for samples == 0 or a dimension mismatch.
Distribution sample(const SetFunction& f, const BernoulliProduct& bp, const SampleOptions& options);
Distribution sample(const SymmetricSetFunction& g, const BernoulliProduct& bp,
                    const SampleOptions& options);

struct Moments {
  double mean = 0;
  double variance = 0;
  double stddev = 0;
  Rational median;  // least v with Pr[Z <= v] >= 1/2
  std::optional<Rational> exact_mean;
  std::optional<Rational> exact_variance;
};

Moments moments(const Distribution& d);

/// A bound column of a tail table.
struct BoundSpec {
  enum class Kind { ChernoffUpper, ChernoffLower, AltUpper, AbUpper, AbLower };
  Kind kind = Kind::ChernoffUpper;
  double a = 1.0;
  double b = 0.0;

  /// Column name, e.g. "chernoff_upper" or "ab_upper_2_0".
  std::string name() const;
  /// Parses "chernoff-upper", "chernoff-lower", "alt-upper", "ab-upper:A:B", "ab-lower:A:B".
  static BoundSpec parse(const std::string& text);
};

struct TailRow {
  Rational delta;
  double exact_upper = 0;  // Pr[Z >= (1+delta) mean]
  double exact_lower = 0;  // Pr[Z <= (1-delta) mean]
  std::optional<Rational> exact_upper_rational;
  std::optional<Rational> exact_lower_rational;
  /// One entry per requested bound; empty where the bound's domain excludes delta.
  std::vector<std::optional<bounds::BoundValue>> bounds;
};

struct TailTable {
  Rational mean;
  std::vector<BoundSpec> specs;
  std::vector<TailRow> rows;
};

/// Tail probabilities at each delta against the requested bounds. The mean is
/// the exact mean of d (rounded from the double mean for inexact d) unless
/// overridden.
TailTable tail_table(const Distribution& d, const std::optional<Rational>& mean_override,
                     const std::vector<Rational>& deltas, const std::vector<BoundSpec>& specs);

/// Pr[Z >= level] and Pr[Z <= level], exact where d is exact.
Rational exact_upper_tail(const Distribution& d, const Rational& level);
Rational exact_lower_tail(const Distribution& d, const Rational& level);
double upper_tail(const Distribution& d, const Rational& level);
double lower_tail(const Distribution& d, const Rational& level);

}  // namespace setconc
