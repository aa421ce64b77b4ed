#include "setconc/bounds.hpp"

#include <cmath>
#include <sstream>

#include "setconc/error.hpp"

namespace setconc::bounds {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void require_mean(double mean) { require(std::isfinite(mean) && mean > 0, "mean must be positive and finite"); }

}  // namespace

BoundValue BoundValue::from_log(double log_value) { return {log_value, std::exp(log_value)}; }

TailQuery TailQuery::relative(double mean, double delta, Side side) {
  require_mean(mean);
  require(delta >= 0, "delta must be non-negative");
  return TailQuery(mean, delta, side);
}

TailQuery TailQuery::absolute(double mean, double t, Side side) {
  require_mean(mean);
  require(t >= 0, "t must be non-negative");
  return TailQuery(mean, t / mean, side);
}

double entropy_moment_bound(double lambda, double mean) {
  require(std::isfinite(mean) && mean >= 0, "entropy_moment_bound: mean must be non-negative");
  return (std::expm1(lambda) - lambda) * mean;
}

BoundValue chernoff_upper(double mean, double delta) {
  require_mean(mean);
  require(delta >= 0, "chernoff_upper: delta must be non-negative");
  return BoundValue::from_log(mean * (delta - (1 + delta) * std::log1p(delta)));
}

BoundValue chernoff_lower(double mean, double delta) {
  require_mean(mean);
  require(delta >= 0 && delta <= 1, "chernoff_lower: delta must lie in [0, 1]; beyond 1 the event is Z < 0");
  return BoundValue::from_log(-delta * delta * mean / 2);
}

BoundValue alt_upper(double mean, double t) {
  require_mean(mean);
  require(t >= 0, "alt_upper: t must be non-negative");
  return BoundValue::from_log(-t * t / (2 * mean + 2 * t / 3));
}

BoundValue ab_upper(double a, double b, double mean, double t) {
  require_mean(mean);
  require(a >= 1.0 / 3.0, "ab_upper: requires a >= 1/3");
  require(b >= 0, "ab_upper: requires b >= 0");
  require(t >= 0, "ab_upper: t must be non-negative");
  if (t == 0) return {0.0, 1.0};
  const double c = (3 * a - 1) / 6;
  return BoundValue::from_log(-0.5 * t * t / (a * mean + b + c * t));
}

BoundValue ab_lower(double a, double b, double mean, double t) {
  require_mean(mean);
  require(a >= 1.0 / 3.0, "ab_lower: requires a >= 1/3");
  require(b >= 0, "ab_lower: requires b >= 0");
  require(t >= 0, "ab_lower: t must be non-negative");
  require(t <= mean, "ab_lower: requires t <= mean");
  if (t == 0) return {0.0, 1.0};
  return BoundValue::from_log(-0.5 * t * t / (a * mean + b));
}

BoundValue chernoff(const TailQuery& query) {
  return query.side() == TailQuery::Side::Upper ? chernoff_upper(query.mean(), query.delta())
                                                : chernoff_lower(query.mean(), query.delta());
}

BoundValue ab(double a, double b, const TailQuery& query) {
  return query.side() == TailQuery::Side::Upper ? ab_upper(a, b, query.mean(), query.t())
                                                : ab_lower(a, b, query.mean(), query.t());
}

SubadditiveTail subadditive_tail(const SubadditiveTailQuery& query, bool strict_hypothesis) {
  require(std::isfinite(query.threshold) && query.threshold >= 0, "subadditive_tail: threshold must be >= 0");
  require(query.p_below > 0 && query.p_below <= 1, "subadditive_tail: p_below must lie in (0, 1]");
  require(query.q >= 2, "subadditive_tail: q must be an integer >= 2");
  require(query.k >= 1, "subadditive_tail: k must be an integer >= 1");
  const bool met = query.q >= kSubadditiveTailMinQ;
  if (strict_hypothesis && !met)
    throw HypothesisError("subadditive_tail: q = " + std::to_string(query.q) + " is below the required q >= " +
                          std::to_string(kSubadditiveTailMinQ));
  SubadditiveTail out;
  out.bound = BoundValue::from_log(-query.q * std::log(query.p_below) - query.k * std::log(double(query.q)));
  out.event_level = (query.q + 1) * query.threshold + query.k;
  out.hypothesis_met = met;
  return out;
}

std::string to_string(const BoundForm& form) {
  switch (form.kind) {
    case BoundForm::Kind::Chernoff: return "chernoff";
    case BoundForm::Kind::Alt: return "alt";
    case BoundForm::Kind::AB: {
      std::ostringstream out;
      out << "ab(" << form.a << "," << form.b << ")";
      return out.str();
    }
  }
  return "unknown";
}

Deviation min_deviation_for_target(const BoundForm& form, double mean, double target_p) {
  require_mean(mean);
  require(target_p > 0, "min_deviation_for_target: target probability must be positive");
  const auto log_bound = [&](double deviation) {
    switch (form.kind) {
      case BoundForm::Kind::Chernoff: return chernoff_upper(mean, deviation).log_value;
      case BoundForm::Kind::Alt: return alt_upper(mean, deviation).log_value;
      case BoundForm::Kind::AB: return ab_upper(form.a, form.b, mean, deviation).log_value;
    }
    return 0.0;
  };
  const auto absolute = [&](double value) { return form.kind == BoundForm::Kind::Chernoff ? value * mean : value; };
  if (target_p >= 1) return {0.0, 0.0};

  const double log_target = std::log(target_p);
  double lo = 0.0;
  double hi = 1.0;
  while (log_bound(hi) > log_target) {
    lo = hi;
    hi *= 2;
    if (!std::isfinite(hi)) throw DomainError("min_deviation_for_target: failed to bracket the target");
  }
  while (hi - lo > 1e-9 * hi) {
    const double mid = lo + (hi - lo) / 2;
    if (log_bound(mid) <= log_target) hi = mid;
    else lo = mid;
  }
  return {hi, absolute(hi)};
}

}  // namespace setconc::bounds
