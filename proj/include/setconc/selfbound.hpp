#pragma once

#include <optional>
#include <vector>

#include "setconc/setfn.hpp"

namespace setconc {

/// Largest ground set for witness construction (n tables of 2^(n-1) entries).
inline constexpr int kMaxWitnessElements = 24;

/// Per-coordinate functions f_i(x^(i)), one table per coordinate indexed by
/// the (n-1)-bit point with coordinate i removed.
class SelfBoundingWitness {
 public:
  /// `tables[i]` must have 2^(n-1) entries; `argmin_one[i][k]` records whether
  /// the minimum was attained with x_i = 1 (may be empty for external witnesses).
  SelfBoundingWitness(int n, std::vector<std::vector<Rational>> tables,
                      std::vector<std::vector<bool>> argmin_one = {});

  int n() const { return n_; }

  /// f_i evaluated at point x (bit i of x is ignored). i is 0-based.
  const Rational& value(int i, Mask x) const;
  /// True when the minimum over x_i was attained only at x_i = 1.
  bool argmin_is_one(int i, Mask x) const;
  bool has_argmin() const { return !argmin_one_.empty(); }

  /// Index into table i for point x: x with bit i squeezed out.
  static Mask drop_coordinate(Mask x, int i);

 private:
  int n_;
  std::vector<std::vector<Rational>> tables_;
  std::vector<std::vector<bool>> argmin_one_;
};

struct SelfBoundingParams {
  Rational a{1};
  Rational b{0};
};

struct CertificationResult {
  struct RangeViolation {
    Mask point = 0;
    int coordinate = 0;  // 0-based
    Rational decrement;  // f(x) - f_i(x^(i)), outside [0, 1]
  };
  struct SumViolation {
    Mask point = 0;
    Rational decrement_sum;
    Rational allowance;  // a f(x) + b
  };
  bool verdict = true;
  std::optional<RangeViolation> range_violation;
  std::optional<SumViolation> sum_violation;
  /// Point maximizing sum_i (f(x) - f_i) - (a f(x) + b); least mask on ties.
  Mask worst_point = 0;
  Rational worst_slack;
};

/// f_i(x^(i)) = min over x_i of f(x). Ties go to x_i = 0.
/// CapacityError for n > kMaxWitnessElements.
SelfBoundingWitness min_extension(const SetFunction& f);

/// Exhaustive check of the (a,b)-self-bounding conditions over all 2^n points.
/// InputError for a dimension mismatch or negative a, b.
CertificationResult certify(const SetFunction& f, const SelfBoundingWitness& w,
                            const SelfBoundingParams& params);

struct MinimalA {
  enum class Kind {
    Finite,
    Unbounded,   // some point with f(x) = 0 has decrement sum above b
    Infeasible,  // points with f(x) < 0 cap a below the required value
  };
  Kind kind = Kind::Finite;
  Rational value;         // valid when kind == Finite
  Mask attained_at = 0;   // point fixing the value (or blocking it)
};

/// Least a >= 0 such that (a, b) certifies with witness w. Throws
/// PreconditionError naming the point when the range condition fails.
MinimalA minimal_a(const SetFunction& f, const SelfBoundingWitness& w, const Rational& b);

}  // namespace setconc
