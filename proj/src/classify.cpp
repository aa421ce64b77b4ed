#include "setconc/classify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "setconc/error.hpp"
#include "setconc/lp.hpp"

namespace setconc {
namespace {

/// Values multiplied by the least common denominator. Every check here is a
/// homogeneous linear inequality, so verdicts and witnesses are unchanged.
struct ScaledValues {
  Rational scale;                  // common denominator L
  std::vector<Rational> exact;     // L * f, all integers
  std::vector<long long> small;    // same values when they fit comfortably in 64 bits
};

ScaledValues scale_to_integers(const SetFunction& f) {
  BigInt lcm = 1;
  for (const auto& v : f.values()) {
    const BigInt& den = boost::multiprecision::denominator(v);
    if (den != 1) lcm = boost::multiprecision::lcm(lcm, den);
  }
  ScaledValues out;
  out.scale = Rational(lcm);
  out.exact.reserve(f.size());
  const BigInt limit = BigInt(1) << 60;
  bool fits = true;
  for (const auto& v : f.values()) {
    Rational s = v * out.scale;
    if (fits && abs(boost::multiprecision::numerator(s)) >= limit) fits = false;
    out.exact.push_back(std::move(s));
  }
  if (fits) {
    out.small.reserve(f.size());
    for (const auto& v : out.exact) out.small.push_back(boost::multiprecision::numerator(v).convert_to<long long>());
  }
  return out;
}

template <class Values>
NonnegativityCheck nonnegative_impl(const Values& v) {
  for (Mask s = 0; s < v.size(); ++s)
    if (v[s] < 0) return {false, s};
  return {};
}

template <class Values>
MonotonicityCheck monotone_impl(const Values& v, int n) {
  for (Mask s = 0; s < v.size(); ++s)
    for (int i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(s & bit) && v[s | bit] < v[s]) return {false, MonotonicityCheck::Witness{s, Element{i + 1}}};
    }
  return {};
}

template <class Values>
SubmodularityCheck submodular_impl(const Values& v, int n) {
  for (Mask s = 0; s < v.size(); ++s)
    for (int j = 0; j < n; ++j) {
      const Mask bj = Mask{1} << j;
      if (s & bj) continue;
      for (int k = j + 1; k < n; ++k) {
        const Mask bk = Mask{1} << k;
        if (s & bk) continue;
        // f_S(j) < f_{S+k}(j)
        if (v[s | bj] + v[s | bk] < v[s | bj | bk] + v[s])
          return {false, SubmodularityCheck::Witness{s, Element{j + 1}, Element{k + 1}}};
      }
    }
  return {};
}

template <class Values>
SubadditivityCheck subadditive_impl(const Values& v) {
  // The inequality is symmetric in (A, B), so the least violating ordered pair has A <= B.
  for (Mask a = 0; a < v.size(); ++a)
    for (Mask b = a; b < v.size(); ++b)
      if (v[a | b] > v[a] + v[b]) return {false, SubadditivityCheck::Witness{a, b}};
  return {};
}

// For monotone f a violating pair (A, B) stays violating with B replaced by
// B \ A, so the least violating pair with A <= B is disjoint and this sweep
// returns the same witness as the full one.
template <class Values>
SubadditivityCheck disjoint_subadditive_impl(const Values& v, Mask all) {
  for (Mask a = 0; a < v.size(); ++a) {
    const Mask rest = all & ~a;
    Mask b = 0;
    do {
      if (b >= a && v[a | b] > v[a] + v[b]) return {false, SubadditivityCheck::Witness{a, b}};
      b = (b - rest) & rest;
    } while (b != 0);
  }
  return {};
}

/// Outcome of the covering LP for one target set.
struct TargetSolve {
  std::optional<Rational> optimum;  // scaled; empty when unbounded below
  std::vector<Rational> y;          // scaled dual solution over the target's elements
  std::vector<XosViolation::Term> cover;
};

class CoveringSolver {
 public:
  explicit CoveringSolver(const SetFunction& f) : f_(f), scaled_(scale_to_integers(f)) {
    const auto& v = scaled_.exact;
    for (Mask s = 0; s < v.size(); ++s)
      if (v[s] < 0) {
        negative_set_ = s;
        break;
      }
  }

  const ScaledValues& scaled() const { return scaled_; }

  TargetSolve solve(Mask target) const {
    if (negative_set_) return unbounded_cover(target);
    const int k = cardinality(target);
    if (k == 0) return {Rational(0), {}, {}};

    const Mask all = f_.ground().all();
    const Mask outside = all & ~target;
    const std::size_t patterns = std::size_t{1} << k;

    // Tightest right-hand side for each trace C = B n target, and the least B attaining it.
    std::vector<Rational> rhs(patterns);
    std::vector<Mask> attaining(patterns);
    const auto& v = scaled_.exact;
    for (Mask c = 0; c < patterns; ++c) {
      const Mask base = expand(c, target);
      Mask best = base;
      // Enumerate supersets base | d, d a submask of `outside`.
      for (Mask d = outside;; d = (d - 1) & outside) {
        const Mask b = base | d;
        if (v[b] < v[best] || (v[b] == v[best] && b < best)) best = b;
        if (d == 0) break;
      }
      rhs[c] = v[best];
      attaining[c] = best;
    }

    std::vector<Mask> rows;
    if (k <= 4) {
      for (Mask c = 1; c < patterns; ++c) rows.push_back(c);
    } else {
      for (int i = 0; i < k; ++i) rows.push_back(Mask{1} << i);
      for (int i = 2; i <= k; ++i) rows.push_back(full_mask(i));
    }

    lp::Solution solution;
    std::vector<Rational> sums(patterns);
    for (;;) {
      lp::Problem problem;
      problem.c.assign(static_cast<std::size_t>(k), Rational(1));
      for (Mask c : rows) {
        std::vector<Rational> row(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
          if (c & (Mask{1} << i)) row[static_cast<std::size_t>(i)] = 1;
        problem.a.push_back(std::move(row));
        problem.b.push_back(rhs[c]);
      }
      solution = lp::solve(problem);
      if (solution.status != lp::Status::Optimal)
        throw InternalError("covering LP dual unbounded despite singleton rows");

      // Separation over every trace.
      sums[0] = 0;
      std::vector<std::pair<Rational, Mask>> violated;
      for (Mask c = 1; c < patterns; ++c) {
        const int low = std::countr_zero(c);
        sums[c] = sums[c & (c - 1)] + solution.x[static_cast<std::size_t>(low)];
        if (sums[c] > rhs[c]) violated.emplace_back(sums[c] - rhs[c], c);
      }
      if (violated.empty()) break;
      std::sort(violated.begin(), violated.end(), [](const auto& l, const auto& r) {
        return l.first != r.first ? l.first > r.first : l.second < r.second;
      });
      const std::size_t take = std::min<std::size_t>(violated.size(), 8);
      for (std::size_t i = 0; i < take; ++i) rows.push_back(violated[i].second);
    }

    TargetSolve out;
    out.optimum = solution.objective;
    out.y = solution.x;
    Rational dual_value = 0;
    std::vector<Rational> coverage(static_cast<std::size_t>(k));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& beta = solution.dual[r];
      if (beta == 0) continue;
      if (beta < 0) throw InternalError("covering LP returned a negative cover weight");
      dual_value += beta * rhs[rows[r]];
      for (int i = 0; i < k; ++i)
        if (rows[r] & (Mask{1} << i)) coverage[static_cast<std::size_t>(i)] += beta;
      out.cover.push_back({attaining[rows[r]], beta});
    }
    if (dual_value != solution.objective)
      throw InternalError("covering LP strong duality failed for target " + set_notation(target));
    for (const auto& total : coverage)
      if (total < 1) throw InternalError("covering LP dual is not a cover of " + set_notation(target));
    std::sort(out.cover.begin(), out.cover.end(), [](const auto& l, const auto& r) { return l.set < r.set; });
    return out;
  }

  /// Converts a scaled solve into the public record for `target`.
  XosViolation to_record(Mask target, const TargetSolve& solved) const {
    XosViolation out;
    out.target = target;
    out.cover = solved.cover;
    for (const auto& term : out.cover) out.cover_value += term.weight * f_[term.set];
    if (solved.optimum) {
      out.lp_optimum = *solved.optimum / scaled_.scale;
      if (out.cover_value != *out.lp_optimum)
        throw InternalError("cover value disagrees with LP optimum for " + set_notation(target));
    }
    return out;
  }

  std::vector<Rational> certificate_vector(Mask target, const TargetSolve& solved) const {
    std::vector<Rational> y(static_cast<std::size_t>(f_.n()));
    int pos = 0;
    for (int i = 0; i < f_.n(); ++i)
      if (target & (Mask{1} << i)) y[static_cast<std::size_t>(i)] = solved.y[static_cast<std::size_t>(pos++)] / scaled_.scale;
    return y;
  }

  bool violates(Mask target, const TargetSolve& solved) const {
    return !solved.optimum || *solved.optimum < scaled_.exact[target];
  }

 private:
  // A negative value makes the covering LP unbounded below: pad the trivial
  // cover {N} with enough weight on the negative set to undercut f(target).
  TargetSolve unbounded_cover(Mask target) const {
    const Mask all = f_.ground().all();
    const Mask neg = *negative_set_;
    const Rational& fn = f_[neg];
    Rational weight = (f_[all] - f_[target]) / -fn;
    if (weight < 0) weight = 0;
    weight += 1;
    TargetSolve out;
    if (neg == all) {
      out.cover.push_back({all, weight + 1});
    } else {
      out.cover.push_back({neg, weight});
      out.cover.push_back({all, Rational(1)});
      std::sort(out.cover.begin(), out.cover.end(), [](const auto& l, const auto& r) { return l.set < r.set; });
    }
    return out;
  }

  const SetFunction& f_;
  ScaledValues scaled_;
  std::optional<Mask> negative_set_;
};

void require_capacity(const SetFunction& f, int limit, const char* check) {
  if (f.n() > limit)
    throw CapacityError(std::string(check) + " supports n <= " + std::to_string(limit) + ", got n = " +
                        std::to_string(f.n()));
}

}  // namespace

NonnegativityCheck is_nonnegative(const SetFunction& f) { return nonnegative_impl(f.values()); }

MonotonicityCheck is_monotone(const SetFunction& f) {
  const ScaledValues s = scale_to_integers(f);
  return s.small.empty() ? monotone_impl(s.exact, f.n()) : monotone_impl(s.small, f.n());
}

SubmodularityCheck is_submodular(const SetFunction& f) {
  const ScaledValues s = scale_to_integers(f);
  return s.small.empty() ? submodular_impl(s.exact, f.n()) : submodular_impl(s.small, f.n());
}

SubadditivityCheck is_subadditive(const SetFunction& f) {
  require_capacity(f, kMaxMonotoneSubadditiveElements, "subadditivity sweep");
  const ScaledValues s = scale_to_integers(f);
  const bool monotone = s.small.empty() ? monotone_impl(s.exact, f.n()).holds : monotone_impl(s.small, f.n()).holds;
  if (monotone)
    return s.small.empty() ? disjoint_subadditive_impl(s.exact, f.ground().all())
                           : disjoint_subadditive_impl(s.small, f.ground().all());
  require_capacity(f, kMaxSubadditiveElements, "subadditivity sweep (non-monotone input)");
  return s.small.empty() ? subadditive_impl(s.exact) : subadditive_impl(s.small);
}

XosViolation covering_lp(const SetFunction& f, Mask target) {
  require_capacity(f, kMaxFractionalElements, "covering LP");
  evaluate(f, target);
  const CoveringSolver solver(f);
  return solver.to_record(target, solver.solve(target));
}

FractionalSubadditivityCheck is_fractionally_subadditive(const SetFunction& f, const XosOptions& options) {
  require_capacity(f, kMaxFractionalElements, "fractional subadditivity LP");
  const CoveringSolver solver(f);
  const std::size_t count = f.size();

  std::vector<std::optional<TargetSolve>> results(count);
  std::atomic<Mask> first_violation{std::numeric_limits<Mask>::max()};
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= count) return;
      const auto target = static_cast<Mask>(index);
      if (target > first_violation.load()) continue;
      try {
        TargetSolve solved = solver.solve(target);
        if (solver.violates(target, solved)) {
          Mask current = first_violation.load();
          while (target < current && !first_violation.compare_exchange_weak(current, target)) {
          }
        }
        results[index] = std::move(solved);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  FractionalSubadditivityCheck out;
  const Mask violation = first_violation.load();
  if (violation != std::numeric_limits<Mask>::max()) {
    out.holds = false;
    out.violation = solver.to_record(violation, *results[violation]);
    return out;
  }
  if (options.keep_certificate) {
    XosCertificate cert;
    cert.entries.reserve(count);
    for (Mask target = 0; target < count; ++target)
      cert.entries.push_back({target, solver.certificate_vector(target, *results[target])});
    out.certificate = std::move(cert);
  }
  return out;
}

ClassReport classify(const SetFunction& f, const XosOptions& options) {
  ClassReport report;
  report.nonnegative_check = is_nonnegative(f);
  report.monotone_check = is_monotone(f);
  report.submodular_check = is_submodular(f);
  report.nonnegative = report.nonnegative_check.holds;
  report.monotone = report.monotone_check.holds;
  report.submodular = report.submodular_check.holds;

  try {
    report.xos_check = is_fractionally_subadditive(f, options);
    report.fractionally_subadditive = report.xos_check->holds;
  } catch (const CapacityError& e) {
    report.not_computed.emplace_back("fractionally_subadditive", e.what());
  }
  try {
    report.subadditive_check = is_subadditive(f);
    report.subadditive = report.subadditive_check->holds;
  } catch (const CapacityError& e) {
    report.not_computed.emplace_back("subadditive", e.what());
  }

  if (!*report.monotone)
    report.notes.emplace_back(
        "input is not monotone; fractionally_subadditive answers the covering inequality literally");
  return report;
}

}  // namespace setconc
