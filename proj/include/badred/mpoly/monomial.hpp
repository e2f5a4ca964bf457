#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "badred/error.hpp"

namespace badred {

inline constexpr int kMaxVars = 16;
inline constexpr std::uint32_t kMaxExponent = 65535;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  static Monomial var(int i, std::uint32_t power = 1) {
    Monomial m;
    if (power > kMaxExponent) throw Error(ErrorCode::ExponentOverflow, "exponent above 65535");
    m.e[i] = static_cast<std::uint16_t>(power);
    m.deg = power;
    return m;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg == b.deg && a.e == b.e; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      std::uint32_t s = std::uint32_t(a.e[i]) + b.e[i];
      if (s > kMaxExponent) throw Error(ErrorCode::ExponentOverflow, "exponent above 65535");
      r.e[i] = static_cast<std::uint16_t>(s);
    }
    r.deg = a.deg + b.deg;
    return r;
  }

  // caller guarantees b divides a
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    r.deg = a.deg - b.deg;
    return r;
  }
};

// Graded lexicographic with T0 > T1 > ...: returns <0, 0, >0.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

using VarNames = std::shared_ptr<const std::vector<std::string>>;

VarNames make_vars(std::vector<std::string> names);
// prefix0, prefix1, ..., prefix{n-1}
VarNames indexed_vars(const std::string& prefix, int n);

}  // namespace badred
