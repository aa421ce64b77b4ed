#pragma once

#include <vector>

#include "setconc/rational.hpp"

namespace setconc::lp {

/// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so the origin is a
/// feasible starting vertex.
struct Problem {
  std::vector<std::vector<Rational>> a;  // rows x cols
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class Status { Optimal, Unbounded };

struct Solution {
  Status status = Status::Optimal;
  Rational objective;
  std::vector<Rational> x;     // primal optimum
  std::vector<Rational> dual;  // one multiplier per row; b.dual == objective
  int pivots = 0;
};

/// Exact primal simplex with Bland's rule (smallest-index entering and leaving
/// variables), so it terminates on degenerate problems. Throws InputError for
/// ragged input or a negative right-hand side.
Solution solve(const Problem& problem);

}  // namespace setconc::lp
