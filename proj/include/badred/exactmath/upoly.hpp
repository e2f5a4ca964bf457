#pragma once

#include <string>
#include <utility>
#include <vector>

#include "badred/error.hpp"
#include "badred/exactmath/integer.hpp"

namespace badred {

// Dense univariate polynomial, coefficients low-to-high, no trailing zeros.
// Division and gcd need a field (C must provide inverse()).
template <class C>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static UPoly constant(const C& a) { return UPoly(std::vector<C>{a}); }
  // x^k with coefficient a
  static UPoly monomial(const C& a, int k) {
    std::vector<C> v(k + 1);
    v[k] = a;
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const C& lead() const { return c_.back(); }
  C coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : C{}; }
  const std::vector<C>& coeffs() const { return c_; }
  std::vector<C>& mutable_coeffs() { return c_; }

  void normalize() {
    while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a) {
    std::vector<C> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_coeff(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const C& k, const UPoly& a) {
    std::vector<C> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = k * a.c_[i];
    return UPoly(std::move(r));
  }
  UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
  UPoly& operator-=(const UPoly& b) { return *this = *this - b; }
  UPoly& operator*=(const UPoly& b) { return *this = *this * b; }

  C evaluate(const C& x) const {
    C r{};
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = scale(c_[i], static_cast<long>(i));
    return UPoly(std::move(r));
  }

  UPoly monic() const {
    if (is_zero()) return {};
    C inv = inverse(lead());
    return inv * *this;
  }

 private:
  static bool is_zero_coeff(const C& a) {
    using badred::is_zero;
    return is_zero(a);
  }
  std::vector<C> c_;
};

// Quotient and remainder over a field.
template <class C>
std::pair<UPoly<C>, UPoly<C>> divmod(const UPoly<C>& a, const UPoly<C>& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<C> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly<C>{}, a};
  std::vector<C> q(a.degree() - db + 1);
  C inv = inverse(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(r[i])) continue;
    C t = r[i] * inv;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - t * b.coeffs()[j];
  }
  r.resize(db);
  return {UPoly<C>(std::move(q)), UPoly<C>(std::move(r))};
}

template <class C>
UPoly<C> operator%(const UPoly<C>& a, const UPoly<C>& b) {
  return divmod(a, b).second;
}

// Monic gcd (zero if both inputs are zero).
template <class C>
UPoly<C> gcd(UPoly<C> a, UPoly<C> b) {
  while (!b.is_zero()) {
    UPoly<C> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class C>
struct ExtGcd {
  UPoly<C> g, s, t;
};

template <class C>
ExtGcd<C> ext_gcd(const UPoly<C>& a, const UPoly<C>& b, const C& one) {
  UPoly<C> r0 = a, r1 = b;
  UPoly<C> s0 = UPoly<C>::constant(one), s1, t0, t1 = UPoly<C>::constant(one);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<C> s2 = s0 - q * s1;
    UPoly<C> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  C inv = inverse(r0.lead());
  return {inv * r0, inv * s0, inv * t0};
}

template <class C>
UPoly<C> powmod(UPoly<C> base, Integer e, const UPoly<C>& m, const C& one) {
  UPoly<C> r = UPoly<C>::constant(one) % m;
  base = base % m;
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % m;
  }
  return r;
}

template <class C>
std::string to_string(const UPoly<C>& f, const std::string& var = "x") {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const C& a = f.coeffs()[i];
    if (is_zero(a)) continue;
    std::string s = coeff_to_string(a);
    bool neg = coeff_is_negative(a);
    if (neg) s = coeff_to_string(C(-a));
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (!coeff_is_atomic(a)) s = "(" + s + ")";
    if (i == 0) {
      out += s;
      continue;
    }
    if (s != "1") out += s + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace badred
