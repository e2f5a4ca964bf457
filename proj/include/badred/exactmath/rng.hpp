#pragma once

#include <cstdint>
#include <random>

namespace badred {

// Uniform-ish integer in [lo, hi] from the raw engine output. Unlike
// std::uniform_int_distribution this is the same on every standard library.
inline long draw_int(std::mt19937_64& g, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(g() % span);
}

}  // namespace badred
