#include "badred/mpoly/mpoly.hpp"

namespace badred {

VarNames make_vars(std::vector<std::string> names) {
  if (names.size() > static_cast<std::size_t>(kMaxVars))
    throw Error(ErrorCode::InvalidInput, "at most 16 variables supported");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarNames indexed_vars(const std::string& prefix, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return make_vars(std::move(names));
}

std::pair<Integer, MPoly<Integer>> content_and_primitive(const MPoly<Integer>& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "content of zero polynomial");
  Integer g = 0;
  for (auto& [m, c] : f.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  std::vector<MPoly<Integer>::Term> out;
  for (auto& [m, c] : f.terms()) out.emplace_back(m, divexact(c, g));
  return {g, MPoly<Integer>::from_terms(f.vars(), std::move(out))};
}

std::pair<Integer, MPoly<Integer>> clear_denominators(const MPoly<Rational>& f) {
  Integer d = 1;
  for (auto& [m, c] : f.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  std::vector<MPoly<Integer>::Term> out;
  for (auto& [m, c] : f.terms()) out.emplace_back(m, Integer(c.get_num() * (d / c.get_den())));
  return {d, MPoly<Integer>::from_terms(f.vars(), std::move(out))};
}

MPoly<Rational> to_rational(const MPoly<Integer>& f) {
  return map_coeffs<Rational>(f, [](const Integer& c) { return Rational(c); });
}

}  // namespace badred
