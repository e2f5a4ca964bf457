#include "badred/exactmath/ff_upoly.hpp"

#include <algorithm>
#include <random>

namespace badred {

namespace {

bool elem_less(const FFElem& a, const FFElem& b) {
  for (int i = kMaxExtDegree - 1; i >= 0; --i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

bool poly_less(const FFPoly& a, const FFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const FFElem& x = a.coeffs()[i];
    const FFElem& y = b.coeffs()[i];
    if (elem_less(x, y)) return true;
    if (elem_less(y, x)) return false;
  }
  return false;
}

FFPoly x_poly(const FiniteField& F) { return FFPoly::monomial(F.one(), 1); }

FFPoly exact_quotient(const FFPoly& a, const FFPoly& b) { return divmod(a, b).first; }

// f(x) = g(x)^p; returns g. Coefficient-wise p-th root is a^(q/p).
FFPoly pth_root(const FiniteField& F, const FFPoly& f) {
  const std::uint64_t p = F.characteristic();
  Integer e = F.size() / from_u64(p);
  std::vector<FFElem> out(f.degree() / p + 1);
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) out[i / p] = F.pow(f.coeff(i), e);
  return FFPoly(std::move(out));
}

void squarefree(const FiniteField& F, const FFPoly& f, int mult, std::vector<FFPolyFactor>& out) {
  if (f.degree() <= 0) return;
  FFPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree(F, pth_root(F, f), mult * static_cast<int>(F.characteristic()), out);
    return;
  }
  FFPoly c = gcd(f, d);
  FFPoly w = exact_quotient(f, c);
  int i = 1;
  while (w.degree() > 0) {
    FFPoly y = gcd(w, c);
    FFPoly z = exact_quotient(w, y);
    if (z.degree() > 0) out.push_back({z.monic(), mult * i});
    ++i;
    w = y;
    c = exact_quotient(c, y);
  }
  if (c.degree() > 0) squarefree(F, pth_root(F, c), mult * static_cast<int>(F.characteristic()), out);
}

FFElem random_elem(const FiniteField& F, std::mt19937_64& gen) {
  FFElem r = F.zero();
  for (int i = 0; i < F.degree(); ++i) r.c[i] = gen() % F.characteristic();
  return r;
}

// Splits a squarefree monic g whose irreducible factors all have degree d.
void equal_degree(const FiniteField& F, const FFPoly& g, int d, std::mt19937_64& gen,
                  std::vector<FFPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FFElem one = F.one();
  const bool even = F.characteristic() == 2;
  Integer half;
  if (!even) {
    Integer qd;
    mpz_pow_ui(qd.get_mpz_t(), F.size().get_mpz_t(), d);
    half = (qd - 1) / 2;
  }
  while (true) {
    std::vector<FFElem> coeffs(g.degree());
    for (auto& c : coeffs) c = random_elem(F, gen);
    FFPoly a(std::move(coeffs));
    if (a.degree() <= 0) continue;
    FFPoly b;
    if (even) {
      // trace from F_{2^{kd}} down to F_2
      FFPoly t = a;
      b = a;
      for (int i = 1; i < F.degree() * d; ++i) {
        t = (t * t) % g;
        b = b + t;
      }
    } else {
      b = powmod(a, half, g, one) - FFPoly::constant(one);
    }
    FFPoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(F, h, d, gen, out);
      equal_degree(F, exact_quotient(g, h), d, gen, out);
      return;
    }
  }
}

// Distinct-degree then equal-degree split of a squarefree monic f.
std::vector<FFPoly> factor_squarefree(const FiniteField& F, FFPoly f, std::mt19937_64& gen) {
  std::vector<FFPoly> out;
  const FFElem one = F.one();
  const FFPoly x = x_poly(F);
  const Integer q = F.size();
  FFPoly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, q, f, one);
    FFPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      equal_degree(F, g, d, gen, out);
      f = exact_quotient(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back(f.monic());
  return out;
}

}  // namespace

std::vector<FFPolyFactor> factor_ff(const FiniteField& F, const FFPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor_ff of zero");
  std::vector<FFPolyFactor> sqf;
  squarefree(F, f.monic(), 1, sqf);
  std::mt19937_64 gen(0xf1e1dULL);
  std::vector<FFPolyFactor> out;
  for (auto& [g, m] : sqf)
    for (auto& h : factor_squarefree(F, g, gen)) out.push_back({h, m});
  std::sort(out.begin(), out.end(), [](const FFPolyFactor& a, const FFPolyFactor& b) {
    if (poly_less(a.factor, b.factor)) return true;
    if (poly_less(b.factor, a.factor)) return false;
    return a.multiplicity < b.multiplicity;
  });
  // a p-th-power pass can split the same irreducible across entries
  std::vector<FFPolyFactor> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().factor == e.factor) merged.back().multiplicity += e.multiplicity;
    else merged.push_back(e);
  }
  return merged;
}

std::vector<FFElem> roots_ff(const FiniteField& F, const FFPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots_ff of zero");
  if (f.degree() == 0) return {};
  const FFElem one = F.one();
  FFPoly m = f.monic();
  FFPoly x = x_poly(F);
  FFPoly g = gcd(m, powmod(x, F.size(), m, one) - x);
  std::vector<FFElem> roots;
  if (g.degree() <= 0) return roots;
  std::mt19937_64 gen(0x7007ULL);
  std::vector<FFPoly> lin;
  equal_degree(F, g, 1, gen, lin);
  for (auto& l : lin) roots.push_back(-l.coeff(0));
  std::sort(roots.begin(), roots.end(), elem_less);
  return roots;
}

bool is_irreducible_ff(const FiniteField& F, const FFPoly& f) {
  if (f.degree() <= 0) return false;
  auto fac = factor_ff(F, f);
  return fac.size() == 1 && fac[0].multiplicity == 1;
}

FFPoly ff_poly_from_integers(const FiniteField& F, const std::vector<Integer>& coeffs) {
  std::vector<FFElem> v;
  v.reserve(coeffs.size());
  for (auto& c : coeffs) v.push_back(F.from_integer(c));
  return FFPoly(std::move(v));
}

FFPoly ff_poly_from_u64(const FiniteField& F, const std::vector<std::uint64_t>& coeffs) {
  std::vector<FFElem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(F.from_coefficients({c}));
  return FFPoly(std::move(v));
}

FieldEmbedding::FieldEmbedding(const FiniteField& from, const FiniteField& to) : from_(&from), to_(&to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
    throw Error(ErrorCode::InvalidInput, "no embedding " + from.describe() + " -> " + to.describe());
  if (from.degree() == 1) {
    image_ = to.zero();
  } else {
    auto roots = roots_ff(to, ff_poly_from_u64(to, from.modulus()));
    if (roots.empty()) throw Error(ErrorCode::InvalidInput, "modulus has no root in extension");
    image_ = roots.front();
  }
  FFElem pw = to.one();
  for (int i = 0; i < from.degree(); ++i) {
    powers_.push_back(pw);
    pw = to.mul(pw, image_);
  }
}

FFElem FieldEmbedding::operator()(const FFElem& a) const {
  FFElem r = to_->zero();
  for (int i = 0; i < from_->degree(); ++i)
    if (a.c[i]) r = to_->add(r, to_->mul(powers_[i], to_->from_coefficients({a.c[i]})));
  return r;
}

}  // namespace badred
