#pragma once

#include <string>

#include "badred/mpoly/mpoly.hpp"

namespace badred {

// Mpoly grammar: explicit '*' and '^', terms in descending grlex order.
template <class C>
std::string to_string(const MPoly<C>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto& [m, c] : f.terms()) {
    const bool neg = coeff_is_negative(c);
    std::string cs = neg ? coeff_to_string(C(-c)) : coeff_to_string(c);
    if (!coeff_is_atomic(c)) cs = "(" + cs + ")";
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < f.nvars() ? (*f.vars())[i] : "X" + std::to_string(i);
      if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
    }
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

template <class C>
std::string coeff_to_string(const MPoly<C>& a) {
  return to_string(a);
}
template <class C>
bool coeff_is_negative(const MPoly<C>& a) {
  return a.size() == 1 && coeff_is_negative(a.lead().second);
}
template <class C>
bool coeff_is_atomic(const MPoly<C>& a) {
  return a.size() <= 1 && (a.is_zero() || coeff_is_atomic(a.lead().second));
}

}  // namespace badred
