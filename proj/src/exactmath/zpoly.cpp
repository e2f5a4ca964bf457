#include "badred/exactmath/zpoly.hpp"

#include <algorithm>

#include "badred/exactmath/ff_upoly.hpp"
#include "badred/exactmath/primes.hpp"

namespace badred {

QPoly to_qpoly(const ZPoly& f) {
  std::vector<Rational> v;
  for (auto& c : f.coeffs()) v.emplace_back(c);
  return QPoly(std::move(v));
}

namespace {

int sign_changes(const std::vector<int>& s) {
  int changes = 0, last = 0;
  for (int x : s) {
    if (x == 0) continue;
    if (last != 0 && x != last) ++changes;
    last = x;
  }
  return changes;
}

ZPoly reduce_mod(const ZPoly& f, const Integer& m) {
  std::vector<Integer> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_fdiv_r(v[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
  return ZPoly(std::move(v));
}

ZPoly symmetric_mod(const ZPoly& f, const Integer& m) {
  Integer half = m / 2;
  std::vector<Integer> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_fdiv_r(v[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
    if (v[i] > half) v[i] -= m;
  }
  return ZPoly(std::move(v));
}

FFPoly to_ff(const FiniteField& F, const ZPoly& f) { return ff_poly_from_integers(F, f.coeffs()); }

ZPoly from_ff(const FFPoly& f) {
  std::vector<Integer> v;
  for (auto& c : f.coeffs()) v.push_back(from_u64(c.c[0]));
  return ZPoly(std::move(v));
}

ZPoly scalar(const Integer& k, const ZPoly& f) { return ZPoly::constant(k) * f; }

// f = G*H mod p^a from f = g*h mod p (g, h monic and coprime mod p).
std::pair<ZPoly, ZPoly> hensel_lift2(const FiniteField& F, const ZPoly& f, const FFPoly& g, const FFPoly& h,
                                     unsigned a) {
  const Integer p = from_u64(F.characteristic());
  auto eg = ext_gcd(g, h, F.one());
  ZPoly G = from_ff(g), H = from_ff(h);
  Integer pk = p;
  for (unsigned k = 1; k < a; ++k) {
    Integer next = pk * p;
    ZPoly e = reduce_mod(f - G * H, next);
    std::vector<Integer> ev = e.coeffs();
    for (auto& c : ev) c = divexact(c, pk);
    FFPoly ebar = to_ff(F, ZPoly(std::move(ev)));
    auto [q, sigma] = divmod(eg.s * ebar, h);
    FFPoly tau = eg.t * ebar + q * g;
    G = G + scalar(pk, from_ff(tau));
    H = H + scalar(pk, from_ff(sigma));
    pk = next;
  }
  return {G, H};
}

void hensel_lift_all(const FiniteField& F, const ZPoly& f, const std::vector<FFPoly>& fac, unsigned a,
                     const Integer& modulus, std::vector<ZPoly>& out) {
  if (fac.size() == 1) {
    out.push_back(reduce_mod(f, modulus));
    return;
  }
  std::size_t mid = fac.size() / 2;
  FFPoly g = FFPoly::constant(F.one()), h = FFPoly::constant(F.one());
  std::vector<FFPoly> left(fac.begin(), fac.begin() + mid), right(fac.begin() + mid, fac.end());
  for (auto& x : left) g = g * x;
  for (auto& x : right) h = h * x;
  auto [G, H] = hensel_lift2(F, f, g, h, a);
  hensel_lift_all(F, G, left, a, modulus, out);
  hensel_lift_all(F, H, right, a, modulus, out);
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  return false;
}

}  // namespace

std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero() || b.lead() != 1) throw Error(ErrorCode::NonMonic, "divisor must be monic");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {ZPoly{}, a};
  std::vector<Integer> q(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Integer t = r[i];
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
  }
  r.resize(db);
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

int count_real_roots(const ZPoly& f) {
  if (f.degree() <= 0) return 0;
  QPoly p0 = to_qpoly(f);
  QPoly g = gcd(p0, p0.derivative());
  if (g.degree() > 0) p0 = divmod(p0, g).first;
  std::vector<QPoly> seq{p0, p0.derivative()};
  while (!seq.back().is_zero()) {
    QPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  std::vector<int> at_pos, at_neg;
  for (auto& s : seq) {
    int sg = sgn(s.lead());
    at_pos.push_back(sg);
    at_neg.push_back(s.degree() % 2 ? -sg : sg);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

bool is_squarefree_over_Q(const ZPoly& f) {
  QPoly q = to_qpoly(f);
  return gcd(q, q.derivative()).degree() <= 0;
}

std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  if (f.is_zero() || f.lead() != 1) throw Error(ErrorCode::NonMonic, "expected a monic polynomial");
  if (f.degree() <= 1) return {f};
  if (!is_squarefree_over_Q(f)) throw Error(ErrorCode::InvalidInput, "polynomial is not squarefree");
  const int n = f.degree();

  // pick the good prime with the fewest modular factors among the first few
  std::shared_ptr<const FiniteField> best;
  std::vector<FFPoly> best_fac;
  int tried = 0;
  for (std::uint64_t p : primes_up_to(100000)) {
    if (p == 2 && n > 1) continue;
    auto F = FiniteField::prime_field(p);
    FFPoly fp = to_ff(*F, f);
    if (gcd(fp, fp.derivative()).degree() > 0) continue;
    auto fac = factor_ff(*F, fp);
    if (!best || fac.size() < best_fac.size()) {
      best = F;
      best_fac.clear();
      for (auto& e : fac) best_fac.push_back(e.factor);
    }
    if (best_fac.size() == 1 || ++tried >= 5) break;
  }
  if (!best) throw Error(ErrorCode::InvalidInput, "no good reduction prime found");
  if (best_fac.size() == 1) return {f};

  Integer norm2 = 0;
  for (auto& c : f.coeffs()) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = (Integer(1) << n) * norm * 2 + 1;
  const Integer p = from_u64(best->characteristic());
  unsigned a = 1;
  Integer modulus = p;
  while (modulus <= bound) {
    modulus *= p;
    ++a;
  }
  std::vector<ZPoly> lifted;
  hensel_lift_all(*best, f, best_fac, a, modulus, lifted);

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<int> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<int>(i);
    const int r = static_cast<int>(lifted.size());
    while (true) {
      ZPoly g = ZPoly::constant(Integer(1));
      for (int i : idx) g = reduce_mod(g * lifted[i], modulus);
      g = symmetric_mod(g, modulus);
      auto [q, rem] = divmod_monic(rest, g);
      if (rem.is_zero()) {
        found.push_back(g);
        rest = q;
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) lifted.erase(lifted.begin() + *it);
        hit = true;
        break;
      }
      // next combination
      int k = static_cast<int>(s) - 1;
      while (k >= 0 && idx[k] == r - static_cast<int>(s) + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (std::size_t j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (rest.degree() > 0) found.push_back(rest);
  std::sort(found.begin(), found.end(), zpoly_less);
  return found;
}

bool is_irreducible_over_Q(const ZPoly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  if (!is_squarefree_over_Q(f)) return false;
  ZPoly m = f;
  if (f.lead() != 1) {
    // a^{n-1} f(x/a) is monic with the same irreducibility
    const int n = f.degree();
    Integer a = f.lead();
    std::vector<Integer> v(n + 1);
    v[n] = 1;
    for (int i = 0; i < n; ++i) {
      Integer e;
      mpz_pow_ui(e.get_mpz_t(), a.get_mpz_t(), n - 1 - i);
      v[i] = f.coeffs()[i] * e;
    }
    m = ZPoly(std::move(v));
  }
  return factor_monic_squarefree(m).size() == 1;
}

}  // namespace badred
