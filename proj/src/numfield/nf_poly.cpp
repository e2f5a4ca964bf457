#include "badred/numfield/nf_poly.hpp"

#include <algorithm>
#include <map>

#include "badred/mpoly/parser.hpp"

namespace badred {

NFPoly absorb_generator(const MPoly<Integer>& f, const NumberField& K) {
  const int g = f.nvars() - 1;
  if (g < 0) throw Error(ErrorCode::InvalidInput, "polynomial has no generator variable");
  std::vector<std::string> names(f.vars()->begin(), f.vars()->end() - 1);
  VarNames nv = make_vars(names);
  std::map<Monomial, std::vector<Rational>, bool (*)(const Monomial&, const Monomial&)> by_mono(
      [](const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) > 0; });
  for (auto& [m, c] : f.terms()) {
    Monomial rest = m;
    const int k = rest.e[g];
    rest.e[g] = 0;
    rest.deg -= k;
    auto& v = by_mono[rest];
    if (static_cast<int>(v.size()) <= k) v.resize(k + 1);
    v[k] += c;
  }
  std::vector<NFPoly::Term> terms;
  for (auto& [m, v] : by_mono) {
    NFElem a = K.from_coefficients(v);
    if (!a.is_zero()) terms.emplace_back(m, std::move(a));
  }
  return NFPoly::from_terms(nv, std::move(terms));
}

NFPoly to_nf(const MPoly<Integer>& f, const NumberField& K) {
  return map_coeffs<NFElem>(f, [&](const Integer& c) { return K.from_rational(c); });
}

NFPoly to_nf(const MPoly<Rational>& f, const NumberField& K) {
  return map_coeffs<NFElem>(f, [&](const Rational& c) { return K.from_rational(c); });
}

NFPoly parse_nf_poly(const std::string& text, const std::vector<std::string>& vars, const NumberField& K) {
  if (K.is_rational()) {
    auto clash = std::find(vars.begin(), vars.end(), K.generator_name()) != vars.end();
    if (clash) return to_nf(parse_poly(text, vars), K);
  }
  return absorb_generator(parse_poly(text, vars, K.generator_name()), K);
}

}  // namespace badred
