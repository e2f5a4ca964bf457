#include "badred/mpoly/binary_forms.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace badred {

namespace {

BezoutStructure compute_structure(int e) {
  VarNames v = make_vars({"s", "t", "s2", "t2"});
  using P = MPoly<Integer>;
  auto mono = [&](int s_var, int t_var, int ps, int pt) {
    Monomial m;
    m.e[s_var] = static_cast<std::uint16_t>(ps);
    m.e[t_var] = static_cast<std::uint16_t>(pt);
    m.deg = ps + pt;
    return P::term(v, m, Integer(1));
  };
  P denom = mono(0, 3, 1, 1) - mono(2, 1, 1, 1);  // s*t2 - s2*t
  BezoutStructure st;
  st.e = e;
  st.beta.assign(e, std::vector<std::vector<BezoutStructure::Entry>>(e));
  for (int i = 0; i <= e; ++i)
    for (int j = i + 1; j <= e; ++j) {
      P num = mono(0, 1, e - i, i) * mono(2, 3, e - j, j) - mono(2, 3, e - i, i) * mono(0, 1, e - j, j);
      auto q = try_divide(num, denom);
      if (!q) throw Error(ErrorCode::InvalidInput, "Bezout numerator not divisible");
      for (auto& [m, c] : q->terms()) {
        int k = m.e[0], l = m.e[2];
        if (!c.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "Bezout constant overflow");
        st.beta[k][l].push_back({i, j, c});
      }
    }
  return st;
}

}  // namespace

const BezoutStructure& bezout_structure(int e) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BezoutStructure>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[e];
  if (!slot) slot = std::make_unique<BezoutStructure>(compute_structure(e));
  return *slot;
}

}  // namespace badred
