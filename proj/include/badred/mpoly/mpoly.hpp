#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "badred/error.hpp"
#include "badred/exactmath/integer.hpp"
#include "badred/mpoly/monomial.hpp"

namespace badred {

// Sparse multivariate polynomial; terms sorted by descending grlex, no zero
// coefficients. A default-constructed MPoly is the zero of every ring and has
// no variable list; binary operations adopt the other operand's list.
template <class C>
class MPoly {
 public:
  using Term = std::pair<Monomial, C>;

  MPoly() = default;
  explicit MPoly(VarNames vars) : vars_(std::move(vars)) {}

  static MPoly constant(VarNames vars, const C& c) { return term(std::move(vars), Monomial{}, c); }
  static MPoly term(VarNames vars, const Monomial& m, const C& c) {
    MPoly r(std::move(vars));
    if (!is_zero_c(c)) r.terms_.emplace_back(m, c);
    return r;
  }
  static MPoly variable(VarNames vars, int i, const C& one) { return term(std::move(vars), Monomial::var(i), one); }
  // Terms in any order, duplicates allowed.
  static MPoly from_terms(VarNames vars, std::vector<Term> terms) {
    MPoly r(std::move(vars));
    r.terms_ = std::move(terms);
    r.canonicalize();
    return r;
  }

  const VarNames& vars() const { return vars_; }
  int nvars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& lead() const { return terms_.front(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.deg == 0); }
  C constant_term() const {
    if (!terms_.empty() && terms_.back().first.deg == 0) return terms_.back().second;
    return C{};
  }

  int total_degree() const {
    if (is_zero()) return -1;
    return static_cast<int>(terms_.front().first.deg);
  }
  int degree_in(int var) const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max<int>(d, m.e[var]);
    return d;
  }
  // Common degree when homogeneous.
  std::optional<int> homogeneous_degree() const {
    if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "homogeneity of zero polynomial");
    const std::uint32_t d = terms_.front().first.deg;
    for (auto& [m, c] : terms_)
      if (m.deg != d) return std::nullopt;
    return static_cast<int>(d);
  }

  C coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return grlex_cmp(t.first, x) > 0; });
    if (it != terms_.end() && it->first == m) return it->second;
    return C{};
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
  friend MPoly operator-(const MPoly& a) {
    MPoly r(a.vars_);
    r.terms_.reserve(a.terms_.size());
    for (auto& [m, c] : a.terms_) r.terms_.emplace_back(m, C(-c));
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.vars_ ? a.vars_ : b.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second).with_vars(r.vars_);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second).with_vars(r.vars_);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.terms_.emplace_back(ma * mb, C(ca * cb));
    r.canonicalize();
    return r;
  }
  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

  MPoly mul_term(const Monomial& m, const C& c) const {
    MPoly r(vars_);
    if (is_zero_c(c)) return r;
    r.terms_.reserve(terms_.size());
    for (auto& [mt, ct] : terms_) {
      C prod = ct * c;
      if (!is_zero_c(prod)) r.terms_.emplace_back(mt * m, std::move(prod));
    }
    return r;
  }
  MPoly mul_scalar(const C& c) const { return mul_term(Monomial{}, c); }

  MPoly pow(unsigned k, const C& one) const {
    MPoly r = constant(vars_, one);
    MPoly b = *this;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  MPoly derivative(int var) const {
    std::vector<Term> out;
    for (auto& [m, c] : terms_) {
      if (m.e[var] == 0) continue;
      C d = scale(c, static_cast<long>(m.e[var]));
      if (is_zero_c(d)) continue;
      Monomial n = m;
      --n.e[var];
      --n.deg;
      out.emplace_back(n, std::move(d));
    }
    // lowering one exponent keeps grlex order among survivors
    MPoly r(vars_);
    r.terms_ = std::move(out);
    return r;
  }

  // Exact quotient a / b, or nullopt when b does not divide a.
  friend std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    MPoly q(a.vars_ ? a.vars_ : b.vars_);
    MPoly r = a;
    const auto& [lm, lc] = b.terms_.front();
    while (!r.is_zero()) {
      const auto& [rm, rc] = r.terms_.front();
      if (!lm.divides(rm) || !coeff_divides(lc, rc)) return std::nullopt;
      Monomial qm = rm / lm;
      C qc = divexact(rc, lc);
      q.terms_.emplace_back(qm, qc);
      r.sub_mul_term(b, qm, qc);
    }
    return q;
  }

  // Evaluate with values for every variable.
  C evaluate(const std::vector<C>& point) const {
    C acc{};
    // powers[i][k] = point[i]^(k+1)
    std::vector<std::vector<C>> powers(nvars());
    for (auto& [m, c] : terms_) {
      C t = c;
      for (int i = 0; i < nvars(); ++i) {
        if (!m.e[i]) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(point[i]);
        while (pw.size() < m.e[i]) pw.push_back(pw.back() * point[i]);
        t = t * pw[m.e[i] - 1];
      }
      acc = acc + t;
    }
    return acc;
  }

  // f(images[0], ..., images[n-1]); images share a new variable list.
  MPoly compose(const std::vector<MPoly>& images, const C& one) const {
    VarNames nv = images.empty() ? vars_ : images[0].vars_;
    MPoly acc(nv);
    std::vector<std::vector<MPoly>> powers(images.size());
    for (auto& [m, c] : terms_) {
      MPoly t = constant(nv, c);
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (!m.e[i]) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(nv, one));
        while (pw.size() <= m.e[i]) pw.push_back(pw.back() * images[i]);
        t = t * pw[m.e[i]];
      }
      acc += t;
    }
    return acc;
  }

  // Re-index variables: variable i goes to slot perm[i] of new_vars.
  MPoly relabel(VarNames new_vars, const std::vector<int>& perm) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& [m, c] : terms_) {
      Monomial n;
      for (int i = 0; i < kMaxVars; ++i) {
        if (!m.e[i]) continue;
        if (i >= static_cast<int>(perm.size()) || perm[i] < 0)
          throw Error(ErrorCode::InvalidInput, "relabel drops a used variable");
        n.e[perm[i]] = static_cast<std::uint16_t>(n.e[perm[i]] + m.e[i]);
      }
      n.deg = m.deg;
      out.emplace_back(n, c);
    }
    return from_terms(std::move(new_vars), std::move(out));
  }

  MPoly with_vars(VarNames v) const {
    MPoly r = *this;
    r.vars_ = std::move(v);
    return r;
  }

  // r -= (m, c) * b, merging in place.
  void sub_mul_term(const MPoly& b, const Monomial& m, const C& c) {
    std::vector<Term> out;
    out.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      Monomial bm = b.terms_[j].first * m;
      int cmp = i == terms_.size() ? -1 : grlex_cmp(terms_[i].first, bm);
      if (cmp > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp < 0) {
        C v = -(b.terms_[j].second * c);
        if (!is_zero_c(v)) out.emplace_back(bm, std::move(v));
        ++j;
      } else {
        C v = terms_[i].second - b.terms_[j].second * c;
        if (!is_zero_c(v)) out.emplace_back(bm, std::move(v));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

 private:
  static bool is_zero_c(const C& c) {
    using badred::is_zero;
    return is_zero(c);
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grlex_cmp(x.first, y.first) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) out.back().second = out.back().second + t.second;
      else out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return is_zero_c(t.second); }), out.end());
    terms_ = std::move(out);
  }

  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    MPoly r(a.vars_ ? a.vars_ : b.vars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp;
      if (i == a.terms_.size()) cmp = -1;
      else if (j == b.terms_.size()) cmp = 1;
      else cmp = grlex_cmp(a.terms_[i].first, b.terms_[j].first);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        const auto& [m, c] = b.terms_[j++];
        r.terms_.emplace_back(m, subtract ? C(-c) : c);
      } else {
        C v = subtract ? C(a.terms_[i].second - b.terms_[j].second) : C(a.terms_[i].second + b.terms_[j].second);
        if (!is_zero_c(v)) r.terms_.emplace_back(a.terms_[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return r;
  }

  VarNames vars_;
  std::vector<Term> terms_;
};

// Coefficient-domain hooks so MPoly can itself be a matrix entry.
template <class C>
bool is_zero(const MPoly<C>& a) {
  return a.is_zero();
}
template <class C>
MPoly<C> divexact(const MPoly<C>& a, const MPoly<C>& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error(ErrorCode::InvalidInput, "inexact polynomial division");
  return *q;
}
template <class C>
bool coeff_divides(const MPoly<C>& b, const MPoly<C>& a) {
  return !b.is_zero() && try_divide(a, b).has_value();
}
template <class C>
MPoly<C> scale(const MPoly<C>& a, long k) {
  std::vector<typename MPoly<C>::Term> out;
  for (auto& [m, c] : a.terms()) out.emplace_back(m, scale(c, k));
  return MPoly<C>::from_terms(a.vars(), std::move(out));
}

// Coefficient-wise map into another domain; zero images are dropped.
template <class D, class C, class F>
MPoly<D> map_coeffs(const MPoly<C>& f, F&& fn) {
  std::vector<typename MPoly<D>::Term> out;
  out.reserve(f.size());
  for (auto& [m, c] : f.terms()) {
    D d = fn(c);
    if (!is_zero(d)) out.emplace_back(m, std::move(d));
  }
  return MPoly<D>::from_terms(f.vars(), std::move(out));
}

template <class C>
std::string to_string(const MPoly<C>& f);

// Gcd of the coefficients (positive) and f / gcd. Throws ZeroPolynomial.
std::pair<Integer, MPoly<Integer>> content_and_primitive(const MPoly<Integer>& f);
// Smallest positive d with d*f integral, and d*f.
std::pair<Integer, MPoly<Integer>> clear_denominators(const MPoly<Rational>& f);
MPoly<Rational> to_rational(const MPoly<Integer>& f);

// Substitute value 1 for variable var and drop it from the variable list.
template <class C>
MPoly<C> set_variable_to_one(const MPoly<C>& f, int var) {
  std::vector<std::string> names;
  std::vector<int> perm(f.nvars(), -1);
  for (int i = 0, k = 0; i < f.nvars(); ++i) {
    if (i == var) continue;
    names.push_back((*f.vars())[i]);
    perm[i] = k++;
  }
  VarNames nv = make_vars(names);
  std::vector<typename MPoly<C>::Term> out;
  for (auto& [m, c] : f.terms()) {
    Monomial n;
    for (int i = 0; i < f.nvars(); ++i)
      if (i != var) n.e[perm[i]] = m.e[i];
    n.deg = m.deg - m.e[var];
    out.emplace_back(n, c);
  }
  return MPoly<C>::from_terms(nv, std::move(out));
}

}  // namespace badred

#include "badred/mpoly/printer.hpp"
