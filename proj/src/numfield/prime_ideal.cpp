#include <algorithm>

#include "badred/exactmath/ff_upoly.hpp"
#include "badred/exactmath/primes.hpp"
#include "badred/numfield/number_field.hpp"

namespace badred {

// ---- HNF ----

std::vector<std::vector<Integer>> hnf_modular(std::vector<std::vector<Integer>> gens, const Integer& D, int n) {
  auto reduce_row = [&](std::vector<Integer>& r) {
    for (auto& x : r) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), D.get_mpz_t());
  };
  for (auto& r : gens) reduce_row(r);
  std::vector<std::vector<Integer>> H;
  for (int c = 0; c < n; ++c) {
    std::vector<Integer> piv(n);
    piv[c] = D;
    for (auto& r : gens) {
      if (sgn(r[c]) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), piv[c].get_mpz_t(), r[c].get_mpz_t());
      Integer u = piv[c] / g, w = r[c] / g;
      std::vector<Integer> np(n), nr(n);
      for (int j = c; j < n; ++j) {
        np[j] = s * piv[j] + t * r[j];
        nr[j] = u * r[j] - w * piv[j];
      }
      piv = std::move(np);
      r = std::move(nr);
      reduce_row(r);
      // keep the pivot entry exact, the rest mod D
      Integer pc = piv[c];
      reduce_row(piv);
      piv[c] = pc;
    }
    if (sgn(piv[c]) < 0)
      for (auto& x : piv) x = -x;
    H.push_back(std::move(piv));
  }
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H[i][j].get_mpz_t(), H[j][j].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (int k = j; k < n; ++k) H[i][k] -= q * H[j][k];
    }
  return H;
}

bool hnf_contains(const std::vector<std::vector<Integer>>& H, std::vector<Integer> v) {
  const std::size_t n = H.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(v[i]) == 0) continue;
    if (!mpz_divisible_p(v[i].get_mpz_t(), H[i][i].get_mpz_t())) return false;
    Integer q = v[i] / H[i][i];
    for (std::size_t k = i; k < n; ++k) v[k] -= q * H[i][k];
  }
  return true;
}

// ---- decomposition ----

namespace {

ZPoly lift(const FFPoly& f) {
  std::vector<Integer> c;
  for (auto& a : f.coeffs()) c.push_back(a.field ? from_u64(a.c[0]) : Integer(0));
  return ZPoly(std::move(c));
}

FFPoly reduce(const FiniteField& F, const ZPoly& f) { return ff_poly_from_integers(F, f.coeffs()); }

std::vector<Integer> poly_at_theta(const NumberField& K, const ZPoly& g) {
  std::vector<Rational> c(g.coeffs().begin(), g.coeffs().end());
  NFElem x = K.from_coefficients(std::move(c));
  return x.split_denominator().first;
}

Integer pow_int(const Integer& p, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
  return r;
}

}  // namespace

bool NumberField::divides_index(const Integer& p) const {
  if (n_ == 1) return false;
  if (!fits_u64(p) || to_u64(p) >= (1ULL << 63)) throw Error(ErrorCode::InvalidInput, "prime too large for residue arithmetic");
  auto F = FiniteField::prime_field(to_u64(p));
  FFPoly mbar = reduce(*F, m_);
  auto facs = factor_ff(*F, mbar);
  FFPoly t = FFPoly::constant(F->one());
  for (auto& fc : facs) t = t * fc.factor;
  FFPoly h = divmod(mbar, t).first;
  ZPoly G = lift(t), H = lift(h);
  ZPoly diff = G * H - m_;
  std::vector<Integer> fc;
  for (auto& x : diff.coeffs()) fc.push_back(x / p);
  FFPoly Fbar = reduce(*F, ZPoly(std::move(fc)));
  FFPoly z = gcd(gcd(Fbar, t), h);
  return z.degree() > 0;
}

std::vector<PrimeIdeal> NumberField::prime_decomposition(const Integer& p) const {
  if (p < 2 || !is_prime(p)) throw Error(ErrorCode::InvalidInput, p.get_str() + " is not prime");
  NumberFieldPtr self = shared_from_this();
  if (n_ == 1) {
    Integer c = m_.coeff(0) % p;
    if (c < 0) c += p;
    return {PrimeIdeal(self, p, ZPoly(std::vector<Integer>{c, 1}), 1, ZPoly(std::vector<Integer>{1}))};
  }
  if (divides_index(p))
    throw Error(ErrorCode::IndexDivisorUnsupported,
                p.get_str() + " divides the index of Z[" + gen_ + "] in the maximal order of " + describe());
  auto F = FiniteField::prime_field(to_u64(p));
  FFPoly mbar = reduce(*F, m_);
  std::vector<PrimeIdeal> out;
  int total = 0;
  for (auto& fc : factor_ff(*F, mbar)) {
    FFPoly h = divmod(mbar, fc.factor).first;
    out.emplace_back(self, p, lift(fc.factor), fc.multiplicity, lift(h));
    total += out.back().e() * out.back().f();
  }
  if (total != n_) throw Error(ErrorCode::InvalidInput, "decomposition does not satisfy sum e f = n");
  return out;
}

// ---- PrimeIdeal ----

PrimeIdeal::PrimeIdeal(NumberFieldPtr K, Integer p, ZPoly g, int e, ZPoly helper)
    : K_(std::move(K)), p_(std::move(p)), g_(std::move(g)), e_(e), f_(g_.degree()), helper_(std::move(helper)),
      cache_(std::make_shared<PowerCache>()) {
  const int n = K_->degree();
  std::vector<std::vector<Integer>> gens;
  std::vector<Integer> gt = poly_at_theta(*K_, g_);
  std::vector<Integer> th(n);
  if (n > 1) th[1] = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> pe(n);
    pe[i] = p_;
    gens.push_back(std::move(pe));
    gens.push_back(gt);
    if (n > 1) gt = K_->mul_integral(gt, th);
  }
  hnf_ = hnf_modular(std::move(gens), p_, n);
  cache_->powers.emplace(1, hnf_);

  if (fits_u64(p_) && to_u64(p_) < (1ULL << 63)) {
    const std::uint64_t pp = to_u64(p_);
    if (f_ == 1) {
      residue_ = FiniteField::prime_field(pp);
      // root of g = x + c
      theta_image_ = residue_->neg(residue_->from_integer(g_.coeff(0)));
    } else {
      std::vector<std::uint64_t> mod;
      for (auto& x : g_.coeffs()) mod.push_back(mod_u64(x, pp));
      residue_ = FiniteField::make(pp, std::move(mod));
      theta_image_ = residue_->generator();
    }
  }
}

Integer PrimeIdeal::norm() const { return pow_int(p_, f_); }

std::string PrimeIdeal::label() const {
  if (K_->is_rational()) return "(" + p_.get_str() + ")";
  return "(" + p_.get_str() + ", " + to_string(g_, K_->generator_name()) + ")";
}

const FiniteField& PrimeIdeal::residue_field() const {
  if (!residue_) throw Error(ErrorCode::InvalidInput, "residue field of " + label() + " is beyond 2^63");
  return *residue_;
}

std::shared_ptr<const FiniteField> PrimeIdeal::residue_field_ptr() const {
  residue_field();
  return residue_;
}

const FFElem& PrimeIdeal::theta_image() const {
  residue_field();
  return theta_image_;
}

const std::vector<std::vector<Integer>>& PrimeIdeal::power(long k) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (auto it = cache_->powers.find(k); it != cache_->powers.end()) return it->second;
  }
  const auto& A = power(k / 2);
  const auto& B = power(k - k / 2);
  std::vector<std::vector<Integer>> gens;
  for (auto& a : A)
    for (auto& b : B) gens.push_back(K_->mul_integral(a, b));
  auto H = hnf_modular(std::move(gens), pow_int(p_, k), K_->degree());
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->powers.emplace(k, std::move(H)).first->second;
}

long PrimeIdeal::valuation_integral(const std::vector<Integer>& beta) const {
  if (K_->is_rational()) return static_cast<long>(badred::valuation(beta[0], p_));
  constexpr long kCap = 1L << 24;
  long k = 1;
  while (hnf_contains(power(k), beta)) {
    k *= 2;
    if (k > kCap) throw Error(ErrorCode::BudgetExceeded, "valuation exceeds " + std::to_string(kCap));
  }
  long lo = k / 2, hi = k;  // beta in P^lo, not in P^hi
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (hnf_contains(power(mid), beta)) lo = mid;
    else hi = mid;
  }
  return lo;
}

long PrimeIdeal::valuation(const NFElem& x) const {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "valuation of zero");
  auto [num, den] = x.split_denominator();
  return valuation_integral(num) - static_cast<long>(e_ * badred::valuation(den, p_));
}

long PrimeIdeal::valuation_by_helper(const NFElem& x) const {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "valuation of zero");
  auto [t, den] = x.split_denominator();
  std::vector<Integer> a = poly_at_theta(*K_, helper_);
  long j = 0;
  while (true) {
    std::vector<Integer> nt = K_->mul_integral(t, a);
    bool divisible = std::all_of(nt.begin(), nt.end(), [&](const Integer& c) { return mpz_divisible_p(c.get_mpz_t(), p_.get_mpz_t()) != 0; });
    if (!divisible) break;
    for (auto& c : nt) c /= p_;
    t = std::move(nt);
    ++j;
  }
  return j - static_cast<long>(e_ * badred::valuation(den, p_));
}

NFElem PrimeIdeal::inverse_uniformizer_power(long c) const {
  if (c < 0) throw Error(ErrorCode::InvalidInput, "negative power");
  std::vector<Integer> a = helper_power(c);
  std::vector<Rational> q(a.size());
  Integer pc = pow_int(p_, static_cast<unsigned long>(c));
  for (std::size_t i = 0; i < a.size(); ++i) {
    q[i] = Rational(a[i], pc);
    q[i].canonicalize();
  }
  return K_->from_coefficients(std::move(q));
}

std::vector<Integer> PrimeIdeal::helper_power(long k) const {
  std::vector<Integer> a = poly_at_theta(*K_, helper_);
  std::vector<Integer> r(K_->degree());
  r[0] = 1;
  for (long i = 0; i < k; ++i) r = K_->mul_integral(r, a);
  return r;
}

FFElem PrimeIdeal::reduce_integral(const std::vector<Integer>& beta) const {
  const FiniteField& F = residue_field();
  FFElem r = F.zero();
  for (std::size_t i = beta.size(); i-- > 0;) r = F.add(F.mul(r, theta_image_), F.from_integer(beta[i]));
  return r;
}

FFElem PrimeIdeal::residue_reduce(const NFElem& x) const {
  const FiniteField& F = residue_field();
  if (x.is_zero()) return F.zero();
  auto [num, den] = x.split_denominator();
  Integer rest = den;
  unsigned long k = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p_.get_mpz_t());
  FFElem dinv = F.inverse(F.from_integer(rest));
  if (k == 0) return F.mul(reduce_integral(num), dinv);
  if (valuation(x) < 0) throw Error(ErrorCode::NotPIntegral, "element is not integral at " + label());
  // x = N / c with N = num a^{ke} / p^{ke}, c = a^{ke} / p^{ke-k}, c a unit at P.
  const long ke = static_cast<long>(k) * e_;
  std::vector<Integer> A = helper_power(ke);
  std::vector<Integer> N = K_->mul_integral(num, A);
  Integer pk = pow_int(p_, ke), pc = pow_int(p_, ke - k);
  for (auto& c : N) c = c / pk;
  for (auto& c : A) c = c / pc;
  return F.mul(F.mul(reduce_integral(N), F.inverse(reduce_integral(A))), dinv);
}

}  // namespace badred
