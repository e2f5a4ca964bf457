#include "badred/cayley/cayley.hpp"

#include <optional>
#include <random>

#include "badred/exactmath/rng.hpp"
#include "badred/mpoly/binary_forms.hpp"
#include "badred/mpoly/parser.hpp"

namespace badred {

namespace {

template <class C>
MPoly<C> zero_poly(const VarNames& v) {
  return MPoly<C>::from_terms(v, {});
}

std::mt19937_64 rng_for(std::uint64_t seed, std::uint32_t salt) {
  std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), salt, 0x43415932u};
  return std::mt19937_64(s);
}

// a[i] multiplies s^{e-i} t^i
template <class C>
std::vector<C> coeffs_of(const MPoly<C>& f, int e) {
  std::vector<C> a(e + 1);
  for (auto& [m, c] : f.terms()) a[m.e[1]] = c;
  return a;
}

// gcd of the forms is nontrivial (over the algebraic closure)
template <class C>
bool have_common_factor(const std::vector<std::vector<C>>& a, int e) {
  bool all_t = true;
  UPoly<C> g;
  for (auto& v : a) {
    if (!is_zero(v[0])) all_t = false;
    std::vector<C> u(e + 1);
    for (int i = 0; i <= e; ++i) u[e - i] = v[i];
    g = gcd(g, UPoly<C>(std::move(u)));
  }
  return all_t || g.is_zero() || g.degree() >= 1;
}

template <class C>
MPoly<C> cayley_core(const std::vector<std::vector<C>>& a, int e, const VarNames& u) {
  const int n = static_cast<int>(a.size()) - 1;
  auto uidx = [n](int k, int l) { return k * (2 * n - k + 1) / 2 + (l - k - 1); };
  std::vector<std::vector<MPoly<C>>> bracket(e + 1, std::vector<MPoly<C>>(e + 1, zero_poly<C>(u)));
  for (int i = 0; i <= e; ++i)
    for (int j = i + 1; j <= e; ++j) {
      std::vector<typename MPoly<C>::Term> t;
      for (int k = 0; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          C c = a[k][i] * a[l][j] - a[k][j] * a[l][i];
          if (!is_zero(c)) t.emplace_back(Monomial::var(uidx(k, l)), c);
        }
      bracket[i][j] = MPoly<C>::from_terms(u, std::move(t));
    }
  const BezoutStructure& st = bezout_structure(e);
  Matrix<MPoly<C>> M(e, e);
  for (int k = 0; k < e; ++k)
    for (int l = 0; l < e; ++l) {
      MPoly<C> acc = zero_poly<C>(u);
      for (auto& en : st.beta[k][l]) acc = acc + scale(bracket[en.i][en.j], en.c.get_si());
      M(k, l) = acc;
    }
  MPoly<C> d = det_bareiss(std::move(M));
  return d.is_zero() ? zero_poly<C>(u) : d.with_vars(u);
}

// Sylvester resultant of A, B with symbolic L1, L2 against the form at u = L1 ^ L2.
void check_against_sylvester(const CayleyForm& cf, const CurveParam& c) {
  const NumberField& K = *c.phi.front().lead().second.field;
  const int n = c.n, e = c.e;
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("L1_" + std::to_string(i));
  for (int i = 0; i <= n; ++i) names.push_back("L2_" + std::to_string(i));
  VarNames L = make_vars(names);
  std::vector<NFPoly> A(e + 1, zero_poly<NFElem>(L)), B(e + 1, zero_poly<NFElem>(L));
  for (int k = 0; k <= n; ++k) {
    auto a = coeffs_of(c.phi[k], e);
    for (int i = 0; i <= e; ++i) {
      if (is_zero(a[i])) continue;
      A[i] = A[i] + NFPoly::term(L, Monomial::var(k), a[i]);
      B[i] = B[i] + NFPoly::term(L, Monomial::var(n + 1 + k), a[i]);
    }
  }
  NFPoly res = det_bareiss(sylvester_matrix(A, B));
  std::vector<NFPoly> images;
  for (int k = 0; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      images.push_back(NFPoly::variable(L, k, K.one()) * NFPoly::variable(L, n + 1 + l, K.one()) -
                       NFPoly::variable(L, l, K.one()) * NFPoly::variable(L, n + 1 + k, K.one()));
  NFPoly pulled = cf.form.compose(images, K.one()).with_vars(L);
  if (res.is_zero() ? !pulled.is_zero() : !(pulled == res || pulled == -res))
    throw Error(ErrorCode::InvalidInput, "internal: Bezout determinant differs from the Sylvester resultant");
}

NFElem small_int(std::mt19937_64& g, const NumberField& K, long r) {
  return K.from_rational(Rational(draw_int(g, -r, r)));
}

std::vector<NFElem> plucker(const std::vector<NFElem>& L1, const std::vector<NFElem>& L2) {
  std::vector<NFElem> u;
  for (std::size_t k = 0; k < L1.size(); ++k)
    for (std::size_t l = k + 1; l < L1.size(); ++l) u.push_back(L1[k] * L2[l] - L1[l] * L2[k]);
  return u;
}

std::vector<NFElem> combine(const CurveParam& c, const std::vector<NFElem>& L) {
  std::vector<NFElem> out(c.e + 1);
  for (int k = 0; k <= c.n; ++k) {
    auto a = coeffs_of(c.phi[k], c.e);
    for (int i = 0; i <= c.e; ++i) out[i] += L[k] * a[i];
  }
  return out;
}

std::vector<FFMPoly> reduce_param(const CurveParam& c, const PrimeIdeal& P) {
  std::vector<FFMPoly> out;
  for (auto& f : c.phi) out.push_back(reduce_mod(f, P));
  return out;
}

}  // namespace

std::string CurveParam::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < phi.size(); ++i) s += (i ? ", " : "") + badred::to_string(phi[i]);
  return s;
}

CurveParam make_curve_param(std::vector<NFPoly> forms) {
  if (forms.size() < 2) throw Error(ErrorCode::InvalidInput, "a parametrization needs at least two forms");
  const NumberField* K = nullptr;
  int e = -1;
  for (auto& f : forms) {
    if (f.nvars() != 2) throw Error(ErrorCode::NonBinary, "parametrizing forms must be in (s, t)");
    if (f.is_zero()) continue;
    K = f.lead().second.field;
    auto d = f.homogeneous_degree();
    if (!d) throw Error(ErrorCode::InconsistentDegrees, to_string(f) + " is not homogeneous");
    if (e >= 0 && *d != e) throw Error(ErrorCode::InconsistentDegrees, "forms of degrees " + std::to_string(e) +
                                                                         " and " + std::to_string(*d));
    e = *d;
  }
  if (!K) throw Error(ErrorCode::CommonFactor, "every form is zero");
  if (e < 1) throw Error(ErrorCode::InvalidInput, "forms must have degree >= 1");
  Integer den = 1;
  for (auto& f : forms)
    for (auto& [m, a] : f.terms())
      for (auto& x : a.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  VarNames st = forms.front().vars();
  CurveParam c;
  c.n = static_cast<int>(forms.size()) - 1;
  c.e = e;
  for (auto& f : forms) {
    NFPoly g = f.with_vars(st);
    c.phi.push_back(den == 1 ? g : g.mul_scalar(K->from_rational(Rational(den))));
  }
  std::vector<std::vector<NFElem>> a;
  for (auto& f : c.phi) a.push_back(coeffs_of(f, e));
  if (have_common_factor(a, e)) throw Error(ErrorCode::CommonFactor, "the forms share a factor (base locus)");
  return c;
}

CurveParam parse_curve_param(const std::string& text, const NumberField& K) {
  const std::vector<std::string> st = {"s", "t"};
  std::vector<NFPoly> forms;
  for (auto& f : parse_poly_list(text, st, K.is_rational() ? "" : K.generator_name()))
    forms.push_back(K.is_rational() ? to_nf(f, K) : absorb_generator(f, K));
  return make_curve_param(std::move(forms));
}

VarNames cayley_vars(int n) {
  std::vector<std::string> names;
  for (int k = 0; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      names.push_back(n <= 9 ? "u" + std::to_string(k) + std::to_string(l)
                             : "u" + std::to_string(k) + "_" + std::to_string(l));
  return make_vars(names);
}

CayleyForm cayley_form(const CurveParam& c) {
  std::vector<std::vector<NFElem>> a;
  for (auto& f : c.phi) a.push_back(coeffs_of(f, c.e));
  CayleyForm cf;
  cf.n = c.n;
  cf.e = c.e;
  cf.form = cayley_core(a, c.e, cayley_vars(c.n));
  if (cf.form.is_zero()) throw Error(ErrorCode::CommonFactor, "Cayley determinant vanishes identically");
  if (c.e <= 3) check_against_sylvester(cf, c);
  return cf;
}

FFMPoly cayley_form_ff(const std::vector<FFMPoly>& phi, const FiniteField& F) {
  int e = -1;
  for (auto& f : phi)
    if (!f.is_zero()) e = *f.homogeneous_degree();
  if (e < 1) throw Error(ErrorCode::DegenerateReduction, "parametrization vanishes");
  std::vector<std::vector<FFElem>> a;
  for (auto& f : phi) {
    auto v = coeffs_of(f, e);
    for (auto& x : v)
      if (!x.field) x = F.zero();
    a.push_back(std::move(v));
  }
  return cayley_core(a, e, cayley_vars(static_cast<int>(phi.size()) - 1));
}

bool good_parametrization_reduction(const CurveParam& c, const PrimeIdeal& P) {
  auto red = reduce_param(c, P);
  std::vector<std::vector<FFElem>> a;
  bool any = false;
  for (auto& f : red) {
    any = any || !f.is_zero();
    a.push_back(coeffs_of(f, c.e));
  }
  return any && !have_common_factor(a, c.e);
}

bool cayley_specialization_check(const CurveParam& c, const PrimeIdeal& P) {
  if (!good_parametrization_reduction(c, P))
    throw Error(ErrorCode::DegenerateReduction, "parametrization degenerates modulo " + P.label());
  const FiniteField& F = P.residue_field();
  FFMPoly lhs = p_part_reduction(cayley_form(c).form, P);
  FFMPoly rhs = cayley_form_ff(reduce_param(c, P), F);
  if (lhs.is_zero() || rhs.is_zero() || lhs.terms().size() != rhs.terms().size()) return false;
  FFElem ratio = lhs.lead().second * F.inverse(rhs.lead().second);
  return lhs == rhs.mul_scalar(ratio).with_vars(lhs.vars());
}

bool incidence_probe(const CayleyForm& cf, const CurveParam& c, int trials, std::uint64_t seed) {
  const NumberField& K = *c.phi.front().lead().second.field;
  auto g = rng_for(seed, 1);
  int sign = 0;
  for (int t = 0; t < trials; ++t) {
    // a curve point and a pencil through it
    NFElem s0 = small_int(g, K, 7), t0 = small_int(g, K, 7);
    if (s0.is_zero() && t0.is_zero()) t0 = K.one();
    std::vector<NFElem> x;
    for (auto& f : c.phi) x.push_back(f.evaluate({s0, t0}));
    int j = 0;
    while (j <= c.n && x[j].is_zero()) ++j;
    if (j > c.n) continue;  // base point of this sample; cannot happen without a common factor
    auto through = [&] {
      std::vector<NFElem> L(c.n + 1);
      for (auto& v : L) v = small_int(g, K, 5);
      NFElem dot = K.zero();
      for (int i = 0; i <= c.n; ++i) dot += L[i] * x[i];
      L[j] -= dot * K.inverse(x[j]);
      return L;
    };
    auto L1 = through(), L2 = through();
    if (!cf.form.evaluate(plucker(L1, L2)).is_zero()) return false;

    // an arbitrary pencil
    std::vector<NFElem> M1(c.n + 1), M2(c.n + 1);
    for (auto& v : M1) v = small_int(g, K, 5);
    for (auto& v : M2) v = small_int(g, K, 5);
    NFElem val = cf.form.evaluate(plucker(M1, M2));
    NFElem res = sylvester_resultant(combine(c, M1), combine(c, M2), K.one());
    if (res.is_zero()) {
      if (!val.is_zero()) return false;
      continue;
    }
    int sg = val == res ? 1 : val == -res ? -1 : 0;
    if (sg == 0 || (sign && sg != sign)) return false;
    sign = sg;
  }
  return true;
}

int mapping_degree_estimate(const CurveParam& c, std::uint64_t seed) {
  const NumberField& K = *c.phi.front().lead().second.field;
  std::optional<PrimeIdeal> P;
  for (Integer p = 1000003; !P; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    std::vector<PrimeIdeal> ps;
    try {
      ps = K.prime_decomposition(p);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::IndexDivisorUnsupported) throw;
      continue;
    }
    for (auto& Q : ps)
      if (Q.f() == 1 && good_parametrization_reduction(c, Q)) {
        P = Q;
        break;
      }
  }
  const FiniteField& F = P->residue_field();
  auto red = reduce_param(c, *P);
  std::vector<std::vector<FFElem>> a;
  for (auto& f : red) {
    auto v = coeffs_of(f, c.e);
    for (auto& x : v)
      if (!x.field) x = F.zero();
    a.push_back(std::move(v));
  }
  auto g = rng_for(seed, 2);
  const std::uint64_t p = F.characteristic();
  int best = -1;
  for (int trial = 0; trial < 4; ++trial) {
    FFElem s0 = F.from_int(static_cast<long>(g() % p));
    std::vector<FFElem> x;
    for (auto& v : a) {
      FFElem acc = F.zero();
      for (int i = 0; i <= c.e; ++i) acc = acc * s0 + v[i];
      x.push_back(acc);
    }
    int j = 0;
    while (j <= c.n && x[j].is_zero()) ++j;
    if (j > c.n) continue;
    FFPoly gg;
    bool at_infinity = true;
    for (int i = 0; i <= c.n; ++i) {
      std::vector<FFElem> u(c.e + 1);
      for (int k = 0; k <= c.e; ++k) u[c.e - k] = x[j] * a[i][k] - x[i] * a[j][k];
      if (!u[c.e].is_zero()) at_infinity = false;
      gg = gcd(gg, FFPoly(std::move(u)));
    }
    int count = gg.degree() + (at_infinity ? 1 : 0);
    if (best < 0 || count < best) best = count;
  }
  return best < 0 ? 1 : best;
}

void check_birational(const CayleyForm& cf, const CurveParam& c, std::uint64_t seed) {
  if (cf.form.total_degree() != c.e)
    throw Error(ErrorCode::NonBirationalSuspected, "Cayley form degree differs from the parametrization degree");
  if (!incidence_probe(cf, c, 20, seed))
    throw Error(ErrorCode::NonBirationalSuspected, "incidence probe failed");
  int m = mapping_degree_estimate(c, seed);
  if (m != 1)
    throw Error(ErrorCode::NonBirationalSuspected,
                "a generic curve point has " + std::to_string(m) + " preimages");
}

}  // namespace badred
