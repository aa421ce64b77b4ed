#include "setconc/dist.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include <boost/multiprecision/mpfr.hpp>

#include "setconc/error.hpp"
#include "setconc/philox.hpp"

namespace setconc {
namespace {

using Float50 = boost::multiprecision::mpfr_float_50;

void require_probability(const Rational& p, const std::string& what) {
  if (p < 0 || p > 1) throw InputError(what + " must lie in [0, 1], got " + to_string(p));
}

Distribution from_exact_map(const std::map<Rational, Rational>& atoms) {
  Distribution d;
  std::vector<Rational> exact;
  for (const auto& [value, prob] : atoms) {
    if (prob == 0) continue;
    d.support.push_back(value);
    d.probs.push_back(to_double(prob));
    exact.push_back(prob);
  }
  d.exact_probs = std::move(exact);
  return d;
}

/// Distinct values of a table, sorted, and the index of each entry's value.
struct ValueIndex {
  std::vector<Rational> support;
  std::vector<std::uint32_t> id;
};

ValueIndex index_values(std::span<const Rational> values) {
  ValueIndex out;
  out.support.assign(values.begin(), values.end());
  std::sort(out.support.begin(), out.support.end());
  out.support.erase(std::unique(out.support.begin(), out.support.end()), out.support.end());
  out.id.reserve(values.size());
  for (const auto& v : values)
    out.id.push_back(static_cast<std::uint32_t>(
        std::lower_bound(out.support.begin(), out.support.end(), v) - out.support.begin()));
  return out;
}

/// Counts draws per support id over outcome indices [0, samples), split into
/// contiguous ranges per thread; the merge is a plain sum, so the result does
/// not depend on the split.
template <class Draw>
std::vector<std::uint64_t> count_draws(std::size_t support_size, const SampleOptions& options, Draw&& draw) {
  if (options.samples == 0) throw InputError("sample count must be at least 1");
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, options.samples));
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(support_size));
  auto run = [&](unsigned t) {
    const std::uint64_t begin = options.samples * t / threads;
    const std::uint64_t end = options.samples * (t + 1) / threads;
    auto& counts = partial[t];
    for (std::uint64_t j = begin; j < end; ++j) ++counts[draw(j)];
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
  }
  std::vector<std::uint64_t> total(support_size);
  for (const auto& counts : partial)
    for (std::size_t i = 0; i < support_size; ++i) total[i] += counts[i];
  return total;
}

Distribution from_counts(const std::vector<Rational>& support, const std::vector<std::uint64_t>& counts,
                         std::uint64_t samples) {
  Distribution d;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (counts[i] == 0) continue;
    d.support.push_back(support[i]);
    d.probs.push_back(static_cast<double>(counts[i]) / static_cast<double>(samples));
  }
  return d;
}

/// Coordinate draws for outcome j: x_i = 1 iff u_i < p_i.
class CoordinateSampler {
 public:
  CoordinateSampler(const BernoulliProduct& bp, std::uint64_t seed) : rng_(seed) {
    for (const auto& p : bp.p()) p_.push_back(to_double(p));
  }

  template <class Visit>
  void draw(std::uint64_t j, Visit&& on_one) const {
    const std::size_t n = p_.size();
    for (std::size_t i = 0; i < n; i += 2) {
      const auto u = rng_.uniform_pair(j, static_cast<std::uint32_t>(i / 2));
      if (u[0] < p_[i]) on_one(i);
      if (i + 1 < n && u[1] < p_[i + 1]) on_one(i + 1);
    }
  }

 private:
  Philox4x32 rng_;
  std::vector<double> p_;
};

/// Binomial(n, p) pmf in 50-digit floating point, by the ratio recurrence.
std::vector<Float50> binomial_pmf_float(long n, const Rational& p) {
  std::vector<Float50> pmf(static_cast<std::size_t>(n) + 1, Float50(0));
  if (p == 0) {
    pmf.front() = 1;
    return pmf;
  }
  if (p == 1) {
    pmf.back() = 1;
    return pmf;
  }
  const Float50 pf = Float50(to_string(boost::multiprecision::numerator(p))) /
                     Float50(to_string(boost::multiprecision::denominator(p)));
  const Float50 qf = 1 - pf;
  const Float50 odds = pf / qf;
  Float50 w = pow(qf, Float50(n));
  pmf[0] = w;
  for (long k = 1; k <= n; ++k) {
    w = w * Float50(n - k + 1) / Float50(k) * odds;
    pmf[static_cast<std::size_t>(k)] = w;
  }
  return pmf;
}

}  // namespace

BernoulliProduct::BernoulliProduct(std::vector<Rational> p) : p_(std::move(p)) {
  for (std::size_t i = 0; i < p_.size(); ++i) require_probability(p_[i], "p[" + std::to_string(i) + "]");
}

BernoulliProduct BernoulliProduct::uniform(int n, const Rational& p) {
  if (n < 1) throw InputError("Bernoulli product needs n >= 1");
  return BernoulliProduct(std::vector<Rational>(static_cast<std::size_t>(n), p));
}

bool BernoulliProduct::identical() const {
  return std::all_of(p_.begin(), p_.end(), [&](const Rational& p) { return p == p_.front(); });
}

double Distribution::probability_of(const Rational& value) const {
  const auto it = std::lower_bound(support.begin(), support.end(), value);
  if (it == support.end() || *it != value) return 0.0;
  return probs[static_cast<std::size_t>(it - support.begin())];
}

std::optional<Rational> Distribution::exact_probability_of(const Rational& value) const {
  if (!exact_probs) return std::nullopt;
  const auto it = std::lower_bound(support.begin(), support.end(), value);
  if (it == support.end() || *it != value) return Rational(0);
  return (*exact_probs)[static_cast<std::size_t>(it - support.begin())];
}

Distribution exact_distribution(const SetFunction& f, const BernoulliProduct& bp) {
  if (f.n() > kMaxEnumerationElements)
    throw CapacityError("exact enumeration supports n <= " + std::to_string(kMaxEnumerationElements) +
                        ", got n = " + std::to_string(f.n()));
  if (bp.n() != f.n())
    throw InputError("Bernoulli product has " + std::to_string(bp.n()) + " coordinates, function has n = " +
                     std::to_string(f.n()));

  const ValueIndex index = index_values(f.values());
  std::vector<Rational> mass(index.support.size());
  if (bp.identical()) {
    // Outcome weight depends only on |x|; accumulate counts per (value, |x|).
    const Rational& p = bp.p().front();
    const int n = f.n();
    std::vector<Rational> by_size(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      Rational w = 1;
      for (int i = 0; i < k; ++i) w *= p;
      for (int i = k; i < n; ++i) w *= 1 - p;
      by_size[static_cast<std::size_t>(k)] = w;
    }
    std::vector<std::vector<std::uint64_t>> counts(index.support.size(),
                                                   std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1));
    for (Mask x = 0; x < f.size(); ++x) ++counts[index.id[x]][static_cast<std::size_t>(cardinality(x))];
    for (std::size_t v = 0; v < mass.size(); ++v)
      for (int k = 0; k <= n; ++k)
        if (const auto c = counts[v][static_cast<std::size_t>(k)]) mass[v] += Rational(c) * by_size[static_cast<std::size_t>(k)];
  } else {
    // Doubling: after coordinate i the table holds weights over the first i+1 bits.
    std::vector<Rational> weight{Rational(1)};
    weight.reserve(f.size());
    for (const auto& p : bp.p()) {
      const std::size_t half = weight.size();
      weight.resize(2 * half);
      for (std::size_t x = 0; x < half; ++x) {
        weight[half + x] = weight[x] * p;
        weight[x] *= 1 - p;
      }
    }
    for (Mask x = 0; x < f.size(); ++x) mass[index.id[x]] += weight[x];
  }

  std::map<Rational, Rational> atoms;
  for (std::size_t v = 0; v < mass.size(); ++v) atoms.emplace(index.support[v], mass[v]);
  return from_exact_map(atoms);
}

Distribution symmetric_distribution(const SymmetricSetFunction& g, const Rational& p) {
  require_probability(p, "p");
  const long n = g.n();

  if (n > kMaxExactBinomial) {
    const std::vector<Float50> pmf = binomial_pmf_float(n, p);
    std::map<Rational, Float50> atoms;
    for (long k = 0; k <= n; ++k) {
      const auto& w = pmf[static_cast<std::size_t>(k)];
      if (w == 0) continue;
      atoms[g.level(k)] += w;
    }
    Distribution d;
    for (const auto& [value, prob] : atoms) {
      d.support.push_back(value);
      d.probs.push_back(prob.convert_to<double>());
    }
    return d;
  }

  std::map<Rational, Rational> atoms;
  if (p == 0) {
    atoms[g.level(0)] = 1;
    return from_exact_map(atoms);
  }
  if (p == 1) {
    atoms[g.level(n)] = 1;
    return from_exact_map(atoms);
  }
  // term_k = C(n,k) u^k (v-u)^(n-k), all over v^n, with p = u/v in lowest terms.
  const BigInt u = boost::multiprecision::numerator(p);
  const BigInt v = boost::multiprecision::denominator(p);
  const BigInt rest = v - u;
  BigInt term = 1;
  BigInt denominator = 1;
  for (long i = 0; i < n; ++i) {
    term *= rest;
    denominator *= v;
  }
  std::map<Rational, BigInt> numerators;
  const Rational* previous = nullptr;
  BigInt* slot = nullptr;
  for (long k = 0; k <= n; ++k) {
    if (k > 0) {
      term *= n - k + 1;
      term *= u;
      term /= BigInt(k) * rest;
    }
    const Rational& value = g.level(k);
    if (!previous || *previous != value) {
      slot = &numerators[value];
      previous = &value;
    }
    *slot += term;
  }
  for (auto& [value, num] : numerators) atoms.emplace(value, Rational(num, denominator));
  return from_exact_map(atoms);
}

Distribution sample(const SetFunction& f, const BernoulliProduct& bp, const SampleOptions& options) {
  if (bp.n() != f.n())
    throw InputError("Bernoulli product has " + std::to_string(bp.n()) + " coordinates, function has n = " +
                     std::to_string(f.n()));
  const ValueIndex index = index_values(f.values());
  const CoordinateSampler sampler(bp, options.seed);
  const auto counts = count_draws(index.support.size(), options, [&](std::uint64_t j) {
    Mask x = 0;
    sampler.draw(j, [&](std::size_t i) { x |= Mask{1} << i; });
    return index.id[x];
  });
  return from_counts(index.support, counts, options.samples);
}

Distribution sample(const SymmetricSetFunction& g, const BernoulliProduct& bp, const SampleOptions& options) {
  if (bp.n() != g.n())
    throw InputError("Bernoulli product has " + std::to_string(bp.n()) + " coordinates, function has n = " +
                     std::to_string(g.n()));
  const ValueIndex index = index_values(g.levels());
  if (bp.identical()) {
    // Inverse-CDF draw of |X| from the binomial law.
    const std::vector<Float50> pmf = binomial_pmf_float(g.n(), bp.p().front());
    std::vector<double> cdf(pmf.size());
    Float50 running = 0;
    for (std::size_t k = 0; k < pmf.size(); ++k) {
      running += pmf[k];
      cdf[k] = running.convert_to<double>();
    }
    const Philox4x32 rng(options.seed);
    const auto counts = count_draws(index.support.size(), options, [&](std::uint64_t j) {
      const double u = rng.uniform_pair(j, 0)[0];
      auto k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      k = std::min(k, cdf.size() - 1);
      return index.id[k];
    });
    return from_counts(index.support, counts, options.samples);
  }
  const CoordinateSampler sampler(bp, options.seed);
  const auto counts = count_draws(index.support.size(), options, [&](std::uint64_t j) {
    std::size_t k = 0;
    sampler.draw(j, [&](std::size_t) { ++k; });
    return index.id[k];
  });
  return from_counts(index.support, counts, options.samples);
}

Moments moments(const Distribution& d) {
  if (d.support.empty()) throw InputError("moments of an empty distribution");
  Moments out;
  if (d.exact_probs) {
    Rational mean = 0, second = 0, cumulative = 0;
    bool have_median = false;
    const Rational half(1, 2);
    for (std::size_t i = 0; i < d.support.size(); ++i) {
      const Rational& v = d.support[i];
      const Rational& p = (*d.exact_probs)[i];
      mean += v * p;
      second += v * v * p;
      cumulative += p;
      if (!have_median && cumulative >= half) {
        out.median = v;
        have_median = true;
      }
    }
    Rational variance = second - mean * mean;
    out.mean = to_double(mean);
    out.variance = to_double(variance);
    out.exact_mean = std::move(mean);
    out.exact_variance = std::move(variance);
  } else {
    double mean = 0, cumulative = 0;
    bool have_median = false;
    for (std::size_t i = 0; i < d.support.size(); ++i) {
      mean += to_double(d.support[i]) * d.probs[i];
      cumulative += d.probs[i];
      if (!have_median && cumulative >= 0.5) {
        out.median = d.support[i];
        have_median = true;
      }
    }
    if (!have_median) out.median = d.support.back();
    double variance = 0;
    for (std::size_t i = 0; i < d.support.size(); ++i) {
      const double dev = to_double(d.support[i]) - mean;
      variance += dev * dev * d.probs[i];
    }
    out.mean = mean;
    out.variance = variance;
  }
  out.stddev = std::sqrt(std::max(out.variance, 0.0));
  return out;
}

std::string BoundSpec::name() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::ChernoffUpper: return "chernoff_upper";
    case Kind::ChernoffLower: return "chernoff_lower";
    case Kind::AltUpper: return "alt_upper";
    case Kind::AbUpper: out << "ab_upper_" << a << "_" << b; break;
    case Kind::AbLower: out << "ab_lower_" << a << "_" << b; break;
  }
  return out.str();
}

BoundSpec BoundSpec::parse(const std::string& text) {
  if (text == "chernoff-upper") return {Kind::ChernoffUpper};
  if (text == "chernoff-lower") return {Kind::ChernoffLower};
  if (text == "alt-upper") return {Kind::AltUpper};
  for (const auto& [prefix, kind] : {std::pair{std::string("ab-upper"), Kind::AbUpper},
                                     std::pair{std::string("ab-lower"), Kind::AbLower}}) {
    if (text.rfind(prefix, 0) != 0) continue;
    BoundSpec spec{kind, 2.0, 0.0};  // non-monotone submodular default
    const std::string rest = text.substr(prefix.size());
    if (rest.empty()) return spec;
    const auto second = rest.find(':', 1);
    if (rest.front() != ':' || second == std::string::npos)
      throw ParseError("bound \"" + text + "\": expected " + prefix + ":A:B");
    spec.a = to_double(parse_rational(rest.substr(1, second - 1)));
    spec.b = to_double(parse_rational(rest.substr(second + 1)));
    return spec;
  }
  throw ParseError("unknown bound \"" + text + "\"");
}

Rational exact_upper_tail(const Distribution& d, const Rational& level) {
  if (!d.exact_probs) throw InputError("exact tail requested from an inexact distribution");
  Rational total = 0;
  for (std::size_t i = 0; i < d.support.size(); ++i)
    if (d.support[i] >= level) total += (*d.exact_probs)[i];
  return total;
}

Rational exact_lower_tail(const Distribution& d, const Rational& level) {
  if (!d.exact_probs) throw InputError("exact tail requested from an inexact distribution");
  Rational total = 0;
  for (std::size_t i = 0; i < d.support.size(); ++i)
    if (d.support[i] <= level) total += (*d.exact_probs)[i];
  return total;
}

double upper_tail(const Distribution& d, const Rational& level) {
  if (d.exact_probs) return to_double(exact_upper_tail(d, level));
  double total = 0;
  for (std::size_t i = 0; i < d.support.size(); ++i)
    if (d.support[i] >= level) total += d.probs[i];
  return total;
}

double lower_tail(const Distribution& d, const Rational& level) {
  if (d.exact_probs) return to_double(exact_lower_tail(d, level));
  double total = 0;
  for (std::size_t i = 0; i < d.support.size(); ++i)
    if (d.support[i] <= level) total += d.probs[i];
  return total;
}

TailTable tail_table(const Distribution& d, const std::optional<Rational>& mean_override,
                     const std::vector<Rational>& deltas, const std::vector<BoundSpec>& specs) {
  TailTable table;
  table.specs = specs;
  if (mean_override) {
    table.mean = *mean_override;
  } else {
    const Moments m = moments(d);
    table.mean = m.exact_mean ? *m.exact_mean : rational_from_double(m.mean);
  }
  const double mean = to_double(table.mean);

  for (const auto& delta : deltas) {
    if (delta < 0) throw InputError("tail table deltas must be non-negative, got " + to_string(delta));
    TailRow row;
    row.delta = delta;
    const Rational upper_level = (1 + delta) * table.mean;
    const Rational lower_level = (1 - delta) * table.mean;
    if (d.exact_probs) {
      row.exact_upper_rational = exact_upper_tail(d, upper_level);
      row.exact_lower_rational = exact_lower_tail(d, lower_level);
      row.exact_upper = to_double(*row.exact_upper_rational);
      row.exact_lower = to_double(*row.exact_lower_rational);
    } else {
      row.exact_upper = upper_tail(d, upper_level);
      row.exact_lower = lower_tail(d, lower_level);
    }
    const double dd = to_double(delta);
    for (const auto& spec : specs) {
      std::optional<bounds::BoundValue> value;
      try {
        switch (spec.kind) {
          case BoundSpec::Kind::ChernoffUpper: value = bounds::chernoff_upper(mean, dd); break;
          case BoundSpec::Kind::ChernoffLower:
            if (delta <= 1) value = bounds::chernoff_lower(mean, dd);
            break;
          case BoundSpec::Kind::AltUpper: value = bounds::alt_upper(mean, dd * mean); break;
          case BoundSpec::Kind::AbUpper: value = bounds::ab_upper(spec.a, spec.b, mean, dd * mean); break;
          case BoundSpec::Kind::AbLower:
            if (delta <= 1) value = bounds::ab_lower(spec.a, spec.b, mean, std::min(dd * mean, mean));
            break;
        }
      } catch (const DomainError&) {
        value.reset();
      }
      row.bounds.push_back(value);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace setconc
