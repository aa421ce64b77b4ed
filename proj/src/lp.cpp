#include "setconc/lp.hpp"

#include <string>

#include "setconc/error.hpp"

namespace setconc::lp {

// Dictionary tableau. Row i < m reads
//   sum_j t[i][j] * x_{nonbasic[j]} + x_{basic[i]} = t[i][cols],
// and the objective row m reads z + sum_j t[m][j] * x_{nonbasic[j]} = t[m][cols].
// Variables 0..cols-1 are structural, cols..cols+m-1 are slacks.
Solution solve(const Problem& problem) {
  const std::size_t m = problem.b.size();
  const std::size_t cols = problem.c.size();
  if (problem.a.size() != m) throw InputError("lp: row count of A does not match b");
  for (std::size_t i = 0; i < m; ++i) {
    if (problem.a[i].size() != cols) throw InputError("lp: row " + std::to_string(i) + " of A has wrong width");
    if (problem.b[i] < 0) throw InputError("lp: right-hand side must be non-negative");
  }

  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = problem.a[i][j];
    t[i][cols] = problem.b[i];
  }
  for (std::size_t j = 0; j < cols; ++j) t[m][j] = -problem.c[j];

  std::vector<std::size_t> nonbasic(cols), basic(m);
  for (std::size_t j = 0; j < cols; ++j) nonbasic[j] = j;
  for (std::size_t i = 0; i < m; ++i) basic[i] = cols + i;

  Solution out;
  for (;;) {
    // Entering: least variable index with negative objective-row coefficient.
    std::size_t s = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (t[m][j] < 0 && (s == cols || nonbasic[j] < nonbasic[s])) s = j;
    if (s == cols) break;

    // Leaving: minimum ratio, ties to the least basic variable index.
    std::size_t r = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][s] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][s];
      if (r == m || ratio < best || (ratio == best && basic[i] < basic[r])) {
        r = i;
        best = std::move(ratio);
      }
    }
    if (r == m) {
      out.status = Status::Unbounded;
      return out;
    }

    const Rational inv = Rational(1) / t[r][s];
    for (std::size_t j = 0; j <= cols; ++j)
      if (j != s) t[r][j] *= inv;
    t[r][s] = inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r || t[i][s] == 0) continue;
      const Rational factor = t[i][s];
      for (std::size_t j = 0; j <= cols; ++j)
        if (j != s && t[r][j] != 0) t[i][j] -= factor * t[r][j];
      t[i][s] = -factor * inv;
    }
    std::swap(basic[r], nonbasic[s]);
    ++out.pivots;
  }

  out.objective = t[m][cols];
  out.x.assign(cols, Rational(0));
  out.dual.assign(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basic[i] < cols) out.x[basic[i]] = t[i][cols];
  for (std::size_t j = 0; j < cols; ++j)
    if (nonbasic[j] >= cols) out.dual[nonbasic[j] - cols] = t[m][j];
  return out;
}

}  // namespace setconc::lp
