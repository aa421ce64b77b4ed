#include "setconc/selfbound.hpp"

#include <string>

#include "setconc/error.hpp"

namespace setconc {
namespace {

Mask insert_zero(Mask packed, int i) {
  const Mask low = packed & ((Mask{1} << i) - 1);
  return ((packed >> i) << (i + 1)) | low;
}

}  // namespace

SelfBoundingWitness::SelfBoundingWitness(int n, std::vector<std::vector<Rational>> tables,
                                         std::vector<std::vector<bool>> argmin_one)
    : n_(n), tables_(std::move(tables)), argmin_one_(std::move(argmin_one)) {
  if (n < 1 || n > kMaxWitnessElements)
    throw CapacityError("self-bounding witness supports 1 <= n <= " + std::to_string(kMaxWitnessElements));
  const std::size_t size = std::size_t{1} << (n - 1);
  if (tables_.size() != static_cast<std::size_t>(n))
    throw InputError("witness needs one table per coordinate: expected " + std::to_string(n) + ", got " +
                     std::to_string(tables_.size()));
  for (const auto& t : tables_)
    if (t.size() != size) throw InputError("witness tables must have 2^(n-1) = " + std::to_string(size) + " entries");
  if (!argmin_one_.empty()) {
    if (argmin_one_.size() != tables_.size()) throw InputError("argmin table count mismatch");
    for (const auto& t : argmin_one_)
      if (t.size() != size) throw InputError("argmin table size mismatch");
  }
}

Mask SelfBoundingWitness::drop_coordinate(Mask x, int i) {
  const Mask low = x & ((Mask{1} << i) - 1);
  return ((x >> (i + 1)) << i) | low;
}

const Rational& SelfBoundingWitness::value(int i, Mask x) const {
  return tables_[static_cast<std::size_t>(i)][drop_coordinate(x, i)];
}

bool SelfBoundingWitness::argmin_is_one(int i, Mask x) const {
  return !argmin_one_.empty() && argmin_one_[static_cast<std::size_t>(i)][drop_coordinate(x, i)];
}

SelfBoundingWitness min_extension(const SetFunction& f) {
  const int n = f.n();
  if (n > kMaxWitnessElements)
    throw CapacityError("min_extension supports n <= " + std::to_string(kMaxWitnessElements) +
                        ", got n = " + std::to_string(n));
  const std::size_t size = std::size_t{1} << (n - 1);
  std::vector<std::vector<Rational>> tables(static_cast<std::size_t>(n), std::vector<Rational>(size));
  std::vector<std::vector<bool>> argmin(static_cast<std::size_t>(n), std::vector<bool>(size));
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask c = 0; c < size; ++c) {
      const Mask x0 = insert_zero(c, i);
      const Rational& v0 = f[x0];
      const Rational& v1 = f[x0 | bit];
      // Ties keep x_i = 0.
      const bool one = v1 < v0;
      tables[static_cast<std::size_t>(i)][c] = one ? v1 : v0;
      argmin[static_cast<std::size_t>(i)][c] = one;
    }
  }
  return SelfBoundingWitness(n, std::move(tables), std::move(argmin));
}

CertificationResult certify(const SetFunction& f, const SelfBoundingWitness& w, const SelfBoundingParams& params) {
  if (w.n() != f.n())
    throw InputError("witness has n = " + std::to_string(w.n()) + " but function has n = " + std::to_string(f.n()));
  if (params.a < 0 || params.b < 0) throw InputError("self-bounding constants a, b must be non-negative");

  CertificationResult out;
  bool have_worst = false;
  for (Mask x = 0; x < f.size(); ++x) {
    Rational sum = 0;
    for (int i = 0; i < f.n(); ++i) {
      Rational d = f[x] - w.value(i, x);
      if (!out.range_violation && (d < 0 || d > 1)) out.range_violation = {x, i, d};
      sum += d;
    }
    Rational allowance = params.a * f[x] + params.b;
    Rational slack = sum - allowance;
    if (!out.sum_violation && slack > 0) out.sum_violation = {x, sum, allowance};
    if (!have_worst || slack > out.worst_slack) {
      out.worst_point = x;
      out.worst_slack = std::move(slack);
      have_worst = true;
    }
  }
  out.verdict = !out.range_violation && !out.sum_violation;
  return out;
}

MinimalA minimal_a(const SetFunction& f, const SelfBoundingWitness& w, const Rational& b) {
  if (w.n() != f.n())
    throw InputError("witness has n = " + std::to_string(w.n()) + " but function has n = " + std::to_string(f.n()));
  if (b < 0) throw InputError("b must be non-negative");

  std::vector<Rational> sums(f.size());
  for (Mask x = 0; x < f.size(); ++x) {
    for (int i = 0; i < f.n(); ++i) {
      Rational d = f[x] - w.value(i, x);
      if (d < 0 || d > 1)
        throw PreconditionError("range condition fails at x = " + set_notation(x) + ", coordinate " +
                                std::to_string(i + 1) + ": f(x) - f_i = " + to_string(d));
      sums[x] += d;
    }
  }

  MinimalA out;
  out.value = 0;
  std::optional<Rational> cap;
  Mask cap_point = 0;
  for (Mask x = 0; x < f.size(); ++x) {
    const Rational& fx = f[x];
    if (fx == 0) {
      if (sums[x] > b) return {MinimalA::Kind::Unbounded, Rational(0), x};
    } else if (fx > 0) {
      Rational ratio = (sums[x] - b) / fx;
      if (ratio > out.value) {
        out.value = std::move(ratio);
        out.attained_at = x;
      }
    } else {
      // a f(x) + b >= sum caps a from above when f(x) < 0.
      Rational limit = (b - sums[x]) / -fx;
      if (!cap || limit < *cap) {
        cap = std::move(limit);
        cap_point = x;
      }
    }
  }
  if (cap && *cap < out.value) return {MinimalA::Kind::Infeasible, Rational(0), cap_point};
  return out;
}

}  // namespace setconc
