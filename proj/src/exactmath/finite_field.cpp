#include "badred/exactmath/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "badred/error.hpp"
#include "badred/exactmath/primes.hpp"

namespace badred {

namespace {

using Vec = std::vector<std::uint64_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p <= 0xffffffffULL) return a * b % p;
  return mulmod_u64(a, b, p);
}

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f over F_p, f monic.
Vec poly_rem(Vec a, const Vec& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i < df; ++i) {
      std::uint64_t t = mul_mod(lead, f[i], p);
      std::uint64_t& x = a[shift + i];
      x = x >= t ? x - t : x + (p - t);
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Vec poly_mulmod(const Vec& a, const Vec& b, const Vec& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t t = mul_mod(a[i], b[j], p);
      std::uint64_t& x = r[i + j];
      x = x >= p - t ? x - (p - t) : x + t;
    }
  }
  return poly_rem(std::move(r), f, p);
}

Vec poly_powmod(Vec base, Integer e, const Vec& f, std::uint64_t p) {
  Vec r{1};
  base = poly_rem(std::move(base), f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return poly_rem(std::move(r), f, p);
}

Vec poly_gcd(Vec a, Vec b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic then reduce a mod b
    std::uint64_t inv = invmod_u64(b.back(), p);
    for (auto& x : b) x = mul_mod(x, inv, p);
    a = poly_rem(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's test for a monic f of degree k.
bool is_irreducible_fp(const Vec& f, std::uint64_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k <= 0) return false;
  if (k == 1) return true;
  Integer pp = from_u64(p);
  Vec x{0, 1};
  // x^{p^i} by repeated p-th powers
  std::vector<Vec> frob(k + 1);
  frob[0] = poly_rem(x, f, p);
  for (int i = 1; i <= k; ++i) frob[i] = poly_powmod(frob[i - 1], pp, f, p);
  Vec xk = frob[k];
  Vec xr = poly_rem(x, f, p);
  if (xk != xr) return false;
  for (int r = 2; r <= k; ++r) {
    if (k % r) continue;
    bool prime = true;
    for (int s = 2; s * s <= r; ++s)
      if (r % s == 0) prime = false;
    if (!prime) continue;
    Vec d = frob[k / r];
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = d[1] >= 1 ? d[1] - 1 : p - 1;
    trim(d);
    Vec g = poly_gcd(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, int k) {
  if (k < 1 || k > kMaxExtDegree) throw Error(ErrorCode::InvalidInput, "extension degree out of range");
  if (!is_prime_u64(p)) throw Error(ErrorCode::InvalidInput, "characteristic must be prime");
  // Odometer over (a_{k-1}, ..., a_0): a_0 is the fastest digit.
  Vec f(k + 1, 0);
  f[k] = 1;
  while (true) {
    if (is_irreducible_fp(f, p)) return f;
    int i = 0;
    while (i < k) {
      if (++f[i] < p) break;
      f[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  throw Error(ErrorCode::InvalidInput, "no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), k_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {}

std::shared_ptr<const FiniteField> FiniteField::make(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (p < 2 || p >= (1ULL << 63) || !is_prime_u64(p))
    throw Error(ErrorCode::InvalidInput, "characteristic must be a prime below 2^63");
  trim(modulus);
  const int k = static_cast<int>(modulus.size()) - 1;
  if (k < 1 || k > kMaxExtDegree) throw Error(ErrorCode::InvalidInput, "extension degree out of range");
  for (auto c : modulus)
    if (c >= p) throw Error(ErrorCode::InvalidInput, "modulus coefficient not reduced");
  if (modulus.back() != 1) throw Error(ErrorCode::InvalidInput, "modulus must be monic");
  if (!is_irreducible_fp(modulus, p)) throw Error(ErrorCode::InvalidInput, "modulus is reducible");
  return std::shared_ptr<const FiniteField>(new FiniteField(p, std::move(modulus)));
}

std::shared_ptr<const FiniteField> FiniteField::prime_field(std::uint64_t p) { return make(p, {0, 1}); }

std::shared_ptr<const FiniteField> FiniteField::extension(std::uint64_t p, int k) {
  return make(p, find_irreducible(p, k));
}

Integer FiniteField::size() const {
  Integer q;
  mpz_pow_ui(q.get_mpz_t(), from_u64(p_).get_mpz_t(), k_);
  return q;
}

std::uint64_t FiniteField::mulp(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, p_); }

bool FFElem::is_zero() const {
  for (auto x : c)
    if (x) return false;
  return true;
}

std::vector<std::uint64_t> FFElem::coefficients() const {
  int k = field ? field->degree() : 1;
  return {c.begin(), c.begin() + k};
}

FFElem FiniteField::zero() const { return FFElem{this, {}}; }

FFElem FiniteField::one() const {
  FFElem r{this, {}};
  r.c[0] = 1 % p_;
  return r;
}

FFElem FiniteField::from_int(long v) const {
  FFElem r{this, {}};
  if (v >= 0 && static_cast<std::uint64_t>(v) < p_) {
    r.c[0] = static_cast<std::uint64_t>(v);
    return r;
  }
  r.c[0] = mod_u64(Integer(v), p_);
  return r;
}

FFElem FiniteField::from_integer(const Integer& v) const {
  FFElem r{this, {}};
  r.c[0] = mod_u64(v, p_);
  return r;
}

FFElem FiniteField::from_coefficients(const std::vector<std::uint64_t>& coeffs) const {
  Vec a(coeffs.begin(), coeffs.end());
  for (auto& x : a) x %= p_;
  a = poly_rem(std::move(a), modulus_, p_);
  FFElem r{this, {}};
  std::copy(a.begin(), a.end(), r.c.begin());
  return r;
}

FFElem FiniteField::generator() const { return from_coefficients({0, 1}); }

FFElem FiniteField::from_index(std::uint64_t index) const {
  FFElem r{this, {}};
  for (int i = 0; i < k_ && index; ++i) {
    r.c[i] = index % p_;
    index /= p_;
  }
  return r;
}

std::uint64_t FiniteField::to_index(const FFElem& a) const {
  std::uint64_t idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + a.c[i];
  return idx;
}

FFElem FiniteField::add(const FFElem& a, const FFElem& b) const {
  FFElem r{this, {}};
  for (int i = 0; i < k_; ++i) r.c[i] = addp(a.c[i], b.c[i]);
  return r;
}

FFElem FiniteField::sub(const FFElem& a, const FFElem& b) const {
  FFElem r{this, {}};
  for (int i = 0; i < k_; ++i) r.c[i] = subp(a.c[i], b.c[i]);
  return r;
}

FFElem FiniteField::neg(const FFElem& a) const {
  FFElem r{this, {}};
  for (int i = 0; i < k_; ++i) r.c[i] = a.c[i] ? p_ - a.c[i] : 0;
  return r;
}

FFElem FiniteField::mul(const FFElem& a, const FFElem& b) const {
  FFElem r{this, {}};
  if (k_ == 1) {
    r.c[0] = mulp(a.c[0], b.c[0]);
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxExtDegree> t{};
  for (int i = 0; i < k_; ++i) {
    if (!a.c[i]) continue;
    for (int j = 0; j < k_; ++j) t[i + j] = addp(t[i + j], mulp(a.c[i], b.c[j]));
  }
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    std::uint64_t lead = t[d];
    if (!lead) continue;
    t[d] = 0;
    for (int i = 0; i < k_; ++i) t[d - k_ + i] = subp(t[d - k_ + i], mulp(lead, modulus_[i]));
  }
  std::copy(t.begin(), t.begin() + k_, r.c.begin());
  return r;
}

FFElem FiniteField::inverse(const FFElem& a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + describe());
  if (k_ == 1) {
    FFElem r{this, {}};
    r.c[0] = invmod_u64(a.c[0], p_);
    return r;
  }
  return pow(a, size() - 2);
}

FFElem FiniteField::pow(const FFElem& a, const Integer& e) const {
  if (e < 0) return pow(inverse(a), Integer(-e));
  FFElem r = one();
  FFElem b = a;
  b.field = this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, b);
  }
  return r;
}

FFElem FiniteField::frobenius(const FFElem& a) const { return pow(a, from_u64(p_)); }

FFElem FiniteField::mul_int(const FFElem& a, long k) const { return mul(a, from_int(k)); }

bool FiniteField::equal(const FFElem& a, const FFElem& b) const { return a.c == b.c; }

std::string FiniteField::to_string(const FFElem& a) const {
  if (k_ == 1) return std::to_string(a.c[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = k_ - 1; i >= 0; --i) {
    if (!a.c[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << a.c[i];
    } else {
      if (a.c[i] != 1) os << a.c[i] << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (k_ > 1) os << "^" << k_;
  return os.str();
}

namespace {
const FiniteField* parent(const FFElem& a, const FFElem& b) { return a.field ? a.field : b.field; }
}  // namespace

bool operator==(const FFElem& a, const FFElem& b) { return a.c == b.c; }

FFElem operator+(const FFElem& a, const FFElem& b) {
  const FiniteField* F = parent(a, b);
  return F ? F->add(a, b) : FFElem{};
}

FFElem operator-(const FFElem& a, const FFElem& b) {
  const FiniteField* F = parent(a, b);
  return F ? F->sub(a, b) : FFElem{};
}

FFElem operator-(const FFElem& a) { return a.field ? a.field->neg(a) : FFElem{}; }

FFElem operator*(const FFElem& a, const FFElem& b) {
  const FiniteField* F = parent(a, b);
  return F ? F->mul(a, b) : FFElem{};
}

FFElem& operator+=(FFElem& a, const FFElem& b) { return a = a + b; }
FFElem& operator-=(FFElem& a, const FFElem& b) { return a = a - b; }
FFElem& operator*=(FFElem& a, const FFElem& b) { return a = a * b; }

FFElem one_like(const FFElem& a) {
  if (!a.field) throw Error(ErrorCode::InvalidInput, "one_like on a context-free zero");
  return a.field->one();
}

FFElem scale(const FFElem& a, long k) { return a.field ? a.field->mul_int(a, k) : FFElem{}; }

FFElem inverse(const FFElem& a) {
  if (!a.field) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return a.field->inverse(a);
}

FFElem divexact(const FFElem& a, const FFElem& b) { return a * inverse(b); }

std::string coeff_to_string(const FFElem& a) { return a.field ? a.field->to_string(a) : "0"; }

bool coeff_is_atomic(const FFElem& a) {
  if (!a.field || a.field->degree() == 1) return true;
  int nz = 0;
  for (int i = 0; i < a.field->degree(); ++i) nz += a.c[i] != 0;
  return nz <= 1;
}

}  // namespace badred
