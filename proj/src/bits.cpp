#include "setconc/bits.hpp"

namespace setconc {

std::string set_notation(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int label = 1; s != 0; ++label, s >>= 1) {
    if (!(s & 1)) continue;
    if (!first) out += ',';
    out += std::to_string(label);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace setconc
