#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "setconc/setfn.hpp"

namespace setconc {

/// Largest ground set for the ordered-pair subadditivity sweep (4^n pairs).
inline constexpr int kMaxSubadditiveElements = 13;
/// Largest ground set for monotone inputs, where disjoint pairs (3^n) suffice.
inline constexpr int kMaxMonotoneSubadditiveElements = 16;
/// Largest ground set for the per-subset covering LPs.
inline constexpr int kMaxFractionalElements = 12;

struct NonnegativityCheck {
  bool holds = true;
  std::optional<Mask> witness;  // least S with f(S) < 0
};

struct MonotonicityCheck {
  struct Witness {
    Mask set = 0;
    Element element;
  };
  bool holds = true;
  std::optional<Witness> witness;  // least (S, j) with f(S + j) < f(S)
};

struct SubmodularityCheck {
  /// f_S(j) < f_{S+k}(j), with j < k.
  struct Witness {
    Mask set = 0;
    Element j;
    Element k;
  };
  bool holds = true;
  std::optional<Witness> witness;
};

struct SubadditivityCheck {
  struct Witness {
    Mask a = 0;
    Mask b = 0;
  };
  bool holds = true;
  std::optional<Witness> witness;  // least ordered pair with f(A u B) > f(A) + f(B)
};

/// Fractional cover of `target` whose weighted value undercuts f(target).
struct XosViolation {
  struct Term {
    Mask set = 0;
    Rational weight;
  };
  Mask target = 0;
  std::vector<Term> cover;
  Rational cover_value;  // sum of weight * f(set)
  /// Optimal value of the covering LP for `target`; absent when it is unbounded below.
  std::optional<Rational> lp_optimum;
};

/// Additive function y supported on `target` with y(target) >= f(target) and
/// y(B) <= f(B) for every B.
struct XosCertificate {
  struct Entry {
    Mask target = 0;
    std::vector<Rational> y;  // indexed by element label - 1
  };
  std::vector<Entry> entries;  // one per subset, in mask order
};

struct FractionalSubadditivityCheck {
  bool holds = true;
  std::optional<XosViolation> violation;
  std::optional<XosCertificate> certificate;
};

struct XosOptions {
  bool keep_certificate = true;
  /// Worker threads for the independent per-subset LPs; 0 picks the hardware count.
  unsigned threads = 0;
};

NonnegativityCheck is_nonnegative(const SetFunction& f);
MonotonicityCheck is_monotone(const SetFunction& f);
SubmodularityCheck is_submodular(const SetFunction& f);
/// CapacityError for n > kMaxMonotoneSubadditiveElements, or for non-monotone
/// f with n > kMaxSubadditiveElements.
SubadditivityCheck is_subadditive(const SetFunction& f);
/// CapacityError for n > kMaxFractionalElements.
FractionalSubadditivityCheck is_fractionally_subadditive(const SetFunction& f,
                                                         const XosOptions& options = {});

/// Solves the covering LP for one target set: the least value of
/// sum beta_B f(B) over fractional covers of `target`. Returned as a violation
/// record regardless of sign so callers can inspect the optimal cover; absent
/// lp_optimum means the LP is unbounded below.
XosViolation covering_lp(const SetFunction& f, Mask target);

struct ClassReport {
  std::optional<bool> nonnegative;
  std::optional<bool> monotone;
  std::optional<bool> submodular;
  std::optional<bool> fractionally_subadditive;
  std::optional<bool> subadditive;

  NonnegativityCheck nonnegative_check;
  MonotonicityCheck monotone_check;
  SubmodularityCheck submodular_check;
  std::optional<FractionalSubadditivityCheck> xos_check;
  std::optional<SubadditivityCheck> subadditive_check;

  /// Reason for every verdict left uncomputed, keyed by predicate name.
  std::vector<std::pair<std::string, std::string>> not_computed;
  std::vector<std::string> notes;
};

/// Runs all five checks. Capacity failures leave the affected verdict empty
/// and are listed in not_computed.
ClassReport classify(const SetFunction& f, const XosOptions& options = {});

}  // namespace setconc
