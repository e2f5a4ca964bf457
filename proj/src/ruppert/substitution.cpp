#include <random>

#include "badred/exactmath/rng.hpp"
#include "badred/ruppert/ruppert.hpp"

namespace badred {

namespace {

const NumberField& field_of(const NFPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial");
  return *f.lead().second.field;
}

int require_homogeneous(const NFPoly& f) {
  auto d = f.homogeneous_degree();
  if (!d) throw Error(ErrorCode::NonHomogeneous, "polynomial is not homogeneous");
  return *d;
}

std::mt19937_64 rng_for(std::uint64_t seed, int attempt) {
  std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                  static_cast<std::uint32_t>(attempt), 0x52555050u};
  return std::mt19937_64(s);
}

}  // namespace

bool LinearSubstitution::is_identity() const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

std::string LinearSubstitution::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < a[i].size(); ++j) s += (j ? "," : "") + std::to_string(a[i][j]);
    s += "]";
  }
  return s + "]";
}

LinearSubstitution unimodular_change(int nvars, int attempt) {
  LinearSubstitution s;
  s.attempt = attempt;
  s.a.assign(nvars, std::vector<long>(nvars, 0));
  for (int i = 0; i < nvars; ++i) s.a[i][i] = 1;
  if (attempt == 0) return s;
  auto rng = rng_for(0, attempt);
  const long r = 1 + attempt / 25;
  std::vector<std::vector<long>> L(nvars, std::vector<long>(nvars, 0)), U = L;
  for (int i = 0; i < nvars; ++i) {
    L[i][i] = U[i][i] = 1;
    for (int j = 0; j < i; ++j) L[i][j] = draw_int(rng, -r, r);
    for (int j = i + 1; j < nvars; ++j) U[i][j] = draw_int(rng, -r, r);
  }
  for (int i = 0; i < nvars; ++i)
    for (int j = 0; j < nvars; ++j) {
      long acc = 0;
      for (int k = 0; k < nvars; ++k) acc += L[i][k] * U[k][j];
      s.a[i][j] = acc;
    }
  return s;
}

NFPoly substitute(const NFPoly& f, const LinearSubstitution& s, VarNames target) {
  const NumberField& K = field_of(f);
  if (static_cast<int>(s.a.size()) != f.nvars())
    throw Error(ErrorCode::InvalidInput, "substitution arity does not match the polynomial");
  std::vector<NFPoly> images;
  for (auto& row : s.a) {
    std::vector<NFPoly::Term> terms;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j]) terms.emplace_back(Monomial::var(static_cast<int>(j)), K.from_rational(Rational(row[j])));
    images.push_back(NFPoly::from_terms(target, std::move(terms)));
  }
  return f.compose(images, K.one()).with_vars(target);
}

NFPoly dehomogenize(const NFPoly& f, int direction) {
  require_homogeneous(f);
  if (direction < 0 || direction >= f.nvars()) throw Error(ErrorCode::InvalidInput, "direction out of range");
  return set_variable_to_one(f, direction);
}

Dehomogenization dehomogenize_generic(const NFPoly& f, int start_attempt) {
  const int d = require_homogeneous(f);
  const int nv = f.nvars();
  for (int attempt = start_attempt; attempt < start_attempt + 100; ++attempt) {
    LinearSubstitution s = unimodular_change(nv, attempt);
    NFPoly g = s.is_identity() ? f : substitute(f, s, f.vars());
    bool ok = true;
    for (int i = 0; i < nv && ok; ++i) ok = !g.coefficient(Monomial::var(i, d)).is_zero();
    if (!ok) continue;
    return {set_variable_to_one(g, 0), s};
  }
  throw Error(ErrorCode::DegenerateDirectionExhausted, "no coordinate change in 100 attempts gives full degree");
}

NFPoly integral_primitive(const NFPoly& f) {
  const NumberField& K = field_of(f);
  Integer den = 1, num = 0;
  for (auto& [m, a] : f.terms()) {
    for (auto& x : a.c) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    }
  }
  Rational q(den, num);
  q.canonicalize();
  return f.mul_scalar(K.from_rational(q));
}

PlaneSection plane_section(const NFPoly& f, std::uint64_t seed, int first_attempt) {
  field_of(f);
  require_homogeneous(f);
  const int nv = f.nvars();
  if (nv < 4) throw Error(ErrorCode::InvalidInput, "plane sections need at least 4 variables");
  VarNames uvw = make_vars({"U", "V", "W"});
  for (int attempt = first_attempt; attempt < first_attempt + 100; ++attempt) {
    auto rng = rng_for(seed, attempt);
    LinearSubstitution s;
    s.attempt = attempt;
    s.a.assign(nv, std::vector<long>(3));
    for (auto& row : s.a)
      for (auto& x : row) x = draw_int(rng, -3, 3);
    Matrix<Rational> A(nv, 3);
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < 3; ++j) A(i, j) = s.a[i][j];
    if (rank_field(A) < 3) continue;
    NFPoly t = substitute(f, s, uvw);
    if (t.is_zero()) continue;
    return {s, std::move(t), seed};
  }
  throw Error(ErrorCode::DegenerateSection, "every plane section in 100 attempts lost the degree");
}

}  // namespace badred
