#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace setconc {

/// Subset of the ground set encoded as a bitmask: element i occupies bit i-1.
using Mask = std::uint32_t;

/// Ground-set element, labeled 1..n.
struct Element {
  int label = 1;

  constexpr Mask bit() const { return Mask{1} << (label - 1); }
  friend constexpr bool operator==(Element, Element) = default;
};

constexpr int cardinality(Mask s) { return std::popcount(s); }

constexpr bool contains(Mask s, Element j) { return (s & j.bit()) != 0; }

constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Packs the bits of `s` selected by `support` into the low bits, in order.
constexpr Mask compress(Mask s, Mask support) {
  Mask out = 0;
  int pos = 0;
  for (Mask rest = support; rest != 0; rest &= rest - 1) {
    if (s & (rest & -rest)) out |= Mask{1} << pos;
    ++pos;
  }
  return out;
}

/// Inverse of compress: spreads the low bits of `packed` onto the bits of `support`.
constexpr Mask expand(Mask packed, Mask support) {
  Mask out = 0;
  int pos = 0;
  for (Mask rest = support; rest != 0; rest &= rest - 1) {
    if (packed & (Mask{1} << pos)) out |= rest & -rest;
    ++pos;
  }
  return out;
}

/// Human-readable set notation with 1-based labels, e.g. "{1,3}".
std::string set_notation(Mask s);

}  // namespace setconc
