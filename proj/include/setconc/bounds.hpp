#pragma once

#include <string>

namespace setconc::bounds {

/// A probability bound carried in log-space alongside its value.
struct BoundValue {
  double log_value = 0.0;
  double value = 1.0;

  static BoundValue from_log(double log_value);
};

/// Relative or absolute deviation from the mean; t = delta * mean.
class TailQuery {
 public:
  enum class Side { Upper, Lower };

  static TailQuery relative(double mean, double delta, Side side);
  static TailQuery absolute(double mean, double t, Side side);

  double mean() const { return mean_; }
  double delta() const { return delta_; }
  double t() const { return delta_ * mean_; }
  Side side() const { return side_; }

 private:
  TailQuery(double mean, double delta, Side side) : mean_(mean), delta_(delta), side_(side) {}

  double mean_;
  double delta_;
  Side side_;
};

/// Exponential-moment bound (e^lambda - lambda - 1) * mean on
/// log E[exp(lambda (Z - E Z))] for self-bounding Z.
double entropy_moment_bound(double lambda, double mean);

/// Pr[Z >= (1+delta) E Z] <= (e^delta / (1+delta)^(1+delta))^mean.
BoundValue chernoff_upper(double mean, double delta);

/// Pr[Z <= (1-delta) E Z] <= exp(-delta^2 mean / 2); DomainError unless 0 <= delta <= 1.
BoundValue chernoff_lower(double mean, double delta);

/// Bernstein-style upper tail exp(-t^2 / (2 mean + 2t/3)).
BoundValue alt_upper(double mean, double t);

/// Upper tail for (a,b)-self-bounding Z: exp(-t^2 / (2 (a mean + b + c t))),
/// c = (3a - 1)/6. DomainError for a < 1/3, b < 0 or t < 0.
BoundValue ab_upper(double a, double b, double mean, double t);

/// Lower tail exp(-t^2 / (2 (a mean + b))) for 0 <= t <= mean.
BoundValue ab_lower(double a, double b, double mean, double t);

/// Dispatches on the query's side to chernoff_upper / chernoff_lower.
BoundValue chernoff(const TailQuery& query);
/// Dispatches on the query's side to ab_upper / ab_lower.
BoundValue ab(double a, double b, const TailQuery& query);

/// Parameters of the median-type tail for non-negative subadditive Z:
/// Pr[Z >= (q+1) threshold + k] <= p_below^(-q) q^(-k), p_below = Pr[Z <= threshold].
struct SubadditiveTailQuery {
  double threshold = 0.0;
  double p_below = 0.5;
  int q = 2;
  int k = 1;
};

struct SubadditiveTail {
  BoundValue bound;         // may exceed 1 (vacuous)
  double event_level = 0;   // (q+1) threshold + k
  bool hypothesis_met = false;  // q >= 18
};

inline constexpr int kSubadditiveTailMinQ = 18;

/// DomainError for invalid parameters. With strict_hypothesis, q < 18 raises
/// HypothesisError; otherwise q >= 2 is accepted and hypothesis_met is false.
SubadditiveTail subadditive_tail(const SubadditiveTailQuery& query, bool strict_hypothesis = false);

/// Bound families compared by min_deviation_for_target.
struct BoundForm {
  enum class Kind { Chernoff, Alt, AB };
  Kind kind = Kind::Chernoff;
  double a = 1.0;
  double b = 0.0;

  static BoundForm chernoff() { return {Kind::Chernoff, 1.0, 0.0}; }
  static BoundForm alt() { return {Kind::Alt, 1.0, 0.0}; }
  static BoundForm ab(double a, double b) { return {Kind::AB, a, b}; }
};

std::string to_string(const BoundForm& form);

struct Deviation {
  double value = 0.0;     // delta for Chernoff, t otherwise
  double absolute = 0.0;  // t = value * mean for Chernoff, value otherwise
};

/// Smallest deviation at which the upper-tail bound of `form` drops to
/// target_p, by bracketing and bisection to relative tolerance 1e-9.
/// Returns 0 when target_p >= 1. DomainError for target_p <= 0 or mean <= 0.
Deviation min_deviation_for_target(const BoundForm& form, double mean, double target_p);

}  // namespace setconc::bounds
