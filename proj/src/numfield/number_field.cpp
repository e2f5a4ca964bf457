#include "badred/numfield/number_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "badred/mpoly/matrix.hpp"
#include "badred/mpoly/parser.hpp"

namespace badred {

// ---- NFElem free functions ----

bool NFElem::is_zero() const {
  for (auto& x : c)
    if (sgn(x) != 0) return false;
  return true;
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (sgn(c[i]) != 0) return false;
  return true;
}

std::pair<std::vector<Integer>, Integer> NFElem::split_denominator() const {
  Integer den = 1;
  for (auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> num(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) num[i] = c[i].get_num() * (den / c[i].get_den());
  return {num, den};
}

namespace {

const NumberField* parent(const NFElem& a, const NFElem& b) {
  if (a.field && b.field && a.field != b.field)
    throw Error(ErrorCode::InvalidInput, "elements of different number fields");
  return a.field ? a.field : b.field;
}

}  // namespace

bool operator==(const NFElem& a, const NFElem& b) {
  if (!a.field || !b.field) return a.is_zero() && b.is_zero();
  return a.field == b.field && a.c == b.c;
}

NFElem operator+(const NFElem& a, const NFElem& b) {
  const NumberField* K = parent(a, b);
  if (!K) return {};
  return K->add(a, b);
}

NFElem operator-(const NFElem& a, const NFElem& b) {
  const NumberField* K = parent(a, b);
  if (!K) return {};
  return K->sub(a, b);
}

NFElem operator-(const NFElem& a) {
  NFElem r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
  const NumberField* K = parent(a, b);
  if (!K) return {};
  return K->mul(a, b);
}

bool is_zero(const NFElem& a) { return a.is_zero(); }

NFElem one_like(const NFElem& a) {
  if (!a.field) throw Error(ErrorCode::InvalidInput, "one_like on a field-less zero");
  return a.field->one();
}

NFElem scale(const NFElem& a, long k) {
  NFElem r = a;
  for (auto& x : r.c) x *= k;
  return r;
}

NFElem inverse(const NFElem& a) {
  if (!a.field) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return a.field->inverse(a);
}

NFElem divexact(const NFElem& a, const NFElem& b) { return a * inverse(b); }

std::string coeff_to_string(const NFElem& a) {
  if (!a.field) return "0";
  return a.field->to_string(a);
}

namespace {

int nonzero_terms(const NFElem& a) {
  int k = 0;
  for (auto& x : a.c) k += sgn(x) != 0;
  return k;
}

}  // namespace

bool coeff_is_negative(const NFElem& a) {
  if (nonzero_terms(a) != 1) return false;
  for (auto& x : a.c)
    if (sgn(x) != 0) return sgn(x) < 0;
  return false;
}

bool coeff_is_atomic(const NFElem& a) { return nonzero_terms(a) <= 1; }

// ---- NumberField ----

NumberField::NumberField(ZPoly m, std::string gen) : m_(std::move(m)), gen_(std::move(gen)), n_(m_.degree()) {
  // theta^n = -sum_{i<n} m_i theta^i, then shift.
  std::vector<Integer> cur(n_);
  for (int i = 0; i < n_; ++i) cur[i] = -m_.coeff(i);
  for (int j = 0; j + 1 < n_; ++j) {
    high_powers_.push_back(cur);
    std::vector<Integer> nxt(n_);
    for (int i = 1; i < n_; ++i) nxt[i] = cur[i - 1];
    for (int i = 0; i < n_; ++i) nxt[i] -= cur[n_ - 1] * m_.coeff(i);
    cur = std::move(nxt);
  }
}

std::shared_ptr<const NumberField> NumberField::make(const ZPoly& minpoly, std::string generator) {
  if (minpoly.degree() < 1) throw Error(ErrorCode::InvalidInput, "minimal polynomial must have degree >= 1");
  if (minpoly.lead() != 1) throw Error(ErrorCode::NonMonic, "minimal polynomial must be monic");
  if (!is_irreducible_over_Q(minpoly))
    throw Error(ErrorCode::ReducibleMinPoly, badred::to_string(minpoly, generator) + " is reducible over Q");
  std::shared_ptr<NumberField> K(new NumberField(minpoly, std::move(generator)));
  K->r1_ = count_real_roots(minpoly);
  K->r2_ = (K->n_ - K->r1_) / 2;
  for (int i = 0; i < K->r1_ + K->r2_; ++i) K->places_.push_back({i, i < K->r1_, i < K->r1_ ? 1 : 2});
  K->roots_at(kStartPrec);
  return K;
}

std::shared_ptr<const NumberField> NumberField::make(const QPoly& minpoly, std::string generator) {
  std::vector<Integer> c;
  for (auto& x : minpoly.coeffs()) {
    if (x.get_den() != 1) throw Error(ErrorCode::NonIntegral, "minimal polynomial must have integer coefficients");
    c.push_back(x.get_num());
  }
  return make(ZPoly(std::move(c)), std::move(generator));
}

std::shared_ptr<const NumberField> NumberField::parse(const std::string& text) {
  auto vars = infer_variables(text);
  if (vars.size() > 1) throw Error(ErrorCode::InvalidInput, "field polynomial must be univariate: " + text);
  std::string name = vars.empty() ? "x" : vars[0];
  auto f = parse_poly(text, {name});
  std::vector<Integer> c(f.total_degree() + 1);
  for (auto& [mono, a] : f.terms()) c[mono.e[0]] = a;
  return make(ZPoly(std::move(c)), name);
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const std::shared_ptr<const NumberField> q = make(ZPoly(std::vector<Integer>{0, 1}), "x");
  return q;
}

std::string NumberField::describe() const {
  if (is_rational()) return "Q";
  return "Q(" + gen_ + ") with " + badred::to_string(m_, gen_) + " = 0";
}

NFElem NumberField::zero() const { return NFElem{this, std::vector<Rational>(n_)}; }

NFElem NumberField::one() const {
  NFElem r = zero();
  r.c[0] = 1;
  return r;
}

NFElem NumberField::from_rational(const Rational& q) const {
  NFElem r = zero();
  r.c[0] = q;
  return r;
}

NFElem NumberField::from_coefficients(std::vector<Rational> c) const {
  if (c.size() < static_cast<std::size_t>(n_)) c.resize(n_);
  reduce_in_place(c);
  return NFElem{this, std::move(c)};
}

NFElem NumberField::generator() const {
  if (n_ == 1) return from_rational(-Rational(m_.coeff(0)));
  NFElem r = zero();
  r.c[1] = 1;
  return r;
}

void NumberField::reduce_in_place(std::vector<Rational>& c) const {
  // Reduce degrees >= n through theta^n = -sum m_i theta^i, from the top.
  for (int d = static_cast<int>(c.size()) - 1; d >= n_; --d) {
    if (sgn(c[d]) == 0) continue;
    Rational t = c[d];
    c[d] = 0;
    for (int i = 0; i < n_; ++i) c[d - n_ + i] -= t * m_.coeff(i);
  }
  c.resize(n_);
}

NFElem NumberField::add(const NFElem& a, const NFElem& b) const {
  if (!a.field) return b;
  if (!b.field) return a;
  NFElem r = a;
  for (int i = 0; i < n_; ++i) r.c[i] += b.c[i];
  return r;
}

NFElem NumberField::sub(const NFElem& a, const NFElem& b) const {
  if (!b.field) return a;
  if (!a.field) return -b;
  NFElem r = a;
  for (int i = 0; i < n_; ++i) r.c[i] -= b.c[i];
  return r;
}

NFElem NumberField::mul(const NFElem& a, const NFElem& b) const {
  if (!a.field || !b.field) return zero();
  std::vector<Rational> prod(2 * n_ - 1);
  for (int i = 0; i < n_; ++i) {
    if (sgn(a.c[i]) == 0) continue;
    for (int j = 0; j < n_; ++j) prod[i + j] += a.c[i] * b.c[j];
  }
  NFElem r = zero();
  for (int i = 0; i < n_; ++i) r.c[i] = prod[i];
  for (int j = 0; j + 1 < n_; ++j) {
    const Rational& t = prod[n_ + j];
    if (sgn(t) == 0) continue;
    for (int i = 0; i < n_; ++i) r.c[i] += t * high_powers_[j][i];
  }
  return r;
}

std::vector<Integer> NumberField::mul_integral(const std::vector<Integer>& a, const std::vector<Integer>& b) const {
  std::vector<Integer> prod(2 * n_ - 1);
  for (int i = 0; i < n_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < n_; ++j) prod[i + j] += a[i] * b[j];
  }
  std::vector<Integer> r(prod.begin(), prod.begin() + n_);
  for (int j = 0; j + 1 < n_; ++j) {
    if (sgn(prod[n_ + j]) == 0) continue;
    for (int i = 0; i < n_; ++i) r[i] += prod[n_ + j] * high_powers_[j][i];
  }
  return r;
}

NFElem NumberField::inverse(const NFElem& a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + describe());
  QPoly A(a.c), M = to_qpoly(m_);
  auto eg = ext_gcd(A, M, Rational(1));
  if (eg.g.degree() != 0) throw Error(ErrorCode::ReducibleMinPoly, "non-invertible element");
  return from_coefficients(eg.s.coeffs());
}

Rational NumberField::norm(const NFElem& a) const {
  if (a.is_zero()) return 0;
  Matrix<Rational> mm(n_, n_);
  NFElem basis = one();
  NFElem th = generator();
  for (int j = 0; j < n_; ++j) {
    NFElem col = mul(a, basis);
    for (int i = 0; i < n_; ++i) mm(i, j) = col.c[i];
    basis = mul(basis, th);
  }
  return det_bareiss(mm);
}

Rational NumberField::trace(const NFElem& a) const {
  Rational t = 0;
  NFElem basis = one();
  NFElem th = generator();
  for (int j = 0; j < n_; ++j) {
    t += mul(a, basis).c[j];
    basis = mul(basis, th);
  }
  return t;
}

std::string NumberField::to_string(const NFElem& a) const {
  if (n_ == 1) return a.c.empty() ? "0" : a.c[0].get_str();
  return badred::to_string(QPoly(a.c), gen_);
}

// ---- archimedean places ----

namespace {

struct MpC {
  MpReal re, im;
  explicit MpC(mpfr_prec_t p) : re(p), im(p) {}
};

void c_mul(MpC& r, const MpC& a, const MpC& b, mpfr_prec_t p) {
  MpReal t1(p), t2(p), re(p);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_set(r.re.get(), re.get(), MPFR_RNDN);
}

// r = a / b; false if b == 0
bool c_div(MpC& r, const MpC& a, const MpC& b, mpfr_prec_t p) {
  MpReal den(p), t1(p), t2(p), re(p);
  mpfr_sqr(t1.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t2.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), t1.get(), t2.get(), MPFR_RNDN);
  if (mpfr_zero_p(den.get())) return false;
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), den.get(), MPFR_RNDN);
  mpfr_div(r.re.get(), re.get(), den.get(), MPFR_RNDN);
  return true;
}

void c_eval(MpC& r, const ZPoly& m, const MpC& z, mpfr_prec_t p) {
  mpfr_set_zero(r.re.get(), 1);
  mpfr_set_zero(r.im.get(), 1);
  for (int i = m.degree(); i >= 0; --i) {
    c_mul(r, r, z, p);
    mpfr_add_z(r.re.get(), r.re.get(), m.coeff(i).get_mpz_t(), MPFR_RNDN);
  }
}

double c_abs_d(const MpC& z) { return std::hypot(z.re.to_double(), z.im.to_double()); }

ComplexBox point_box(const MpC& z, mpfr_prec_t p) {
  ComplexBox b(p);
  mpfr_set(b.re.lo().get(), z.re.get(), MPFR_RNDD);
  mpfr_set(b.re.hi().get(), z.re.get(), MPFR_RNDU);
  mpfr_set(b.im.lo().get(), z.im.get(), MPFR_RNDD);
  mpfr_set(b.im.hi().get(), z.im.get(), MPFR_RNDU);
  return b;
}

ComplexBox box_eval(const ZPoly& m, const ComplexBox& z, mpfr_prec_t p) {
  ComplexBox r(p);
  for (int i = m.degree(); i >= 0; --i) {
    r = r * z;
    r.re = r.re + Interval::point(m.coeff(i), p);
  }
  return r;
}

// Upper bound for the radius n |m(z)| / |m'(z)|; false if m'(z) may vanish.
bool inclusion_radius(const ZPoly& m, const MpC& z, mpfr_prec_t p, MpReal& radius) {
  ComplexBox zb = point_box(z, p);
  Interval num = box_eval(m, zb, p).abs();
  Interval den = box_eval(m.derivative(), zb, p).abs();
  if (!den.certainly_positive()) return false;
  Interval r = (num / den).scaled(Rational(m.degree()));
  mpfr_set(radius.get(), r.hi().get(), MPFR_RNDU);
  return true;
}

// Durand-Kerner iteration in place.
void refine_roots(const ZPoly& m, std::vector<MpC>& z, mpfr_prec_t p) {
  const int n = m.degree();
  const int max_iter = 400 + 40 * n;
  const double stop = std::ldexp(1.0, -static_cast<int>(std::min<mpfr_prec_t>(p, 1000)) + 8);
  MpC val(p), den(p), diff(p), corr(p);
  for (int it = 0; it < max_iter; ++it) {
    double worst = 0;
    for (int k = 0; k < n; ++k) {
      c_eval(val, m, z[k], p);
      mpfr_set_ui(den.re.get(), 1, MPFR_RNDN);
      mpfr_set_zero(den.im.get(), 1);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        mpfr_sub(diff.re.get(), z[k].re.get(), z[j].re.get(), MPFR_RNDN);
        mpfr_sub(diff.im.get(), z[k].im.get(), z[j].im.get(), MPFR_RNDN);
        c_mul(den, den, diff, p);
      }
      if (!c_div(corr, val, den, p)) {
        mpfr_nextabove(z[k].re.get());
        worst = 1;
        continue;
      }
      mpfr_sub(z[k].re.get(), z[k].re.get(), corr.re.get(), MPFR_RNDN);
      mpfr_sub(z[k].im.get(), z[k].im.get(), corr.im.get(), MPFR_RNDN);
      double rel = c_abs_d(corr) / std::max(1.0, c_abs_d(z[k]));
      if (!std::isfinite(rel)) rel = 1;
      worst = std::max(worst, rel);
    }
    if (worst < stop) break;
  }
}

}  // namespace

const std::vector<ComplexBox>& NumberField::roots_at(mpfr_prec_t prec) const {
  std::lock_guard<std::mutex> lock(root_mu_);
  if (auto it = roots_.find(prec); it != roots_.end()) return it->second;

  std::vector<ComplexBox> out;
  if (n_ == 1) {
    out.push_back(ComplexBox(Interval::point(-Rational(m_.coeff(0)), prec), Interval(prec)));
    return roots_.emplace(prec, std::move(out)).first->second;
  }

  for (mpfr_prec_t p = prec;; p *= 2) {
    if (p > kMaxPrec) throw Error(ErrorCode::PrecisionExhausted, "cannot isolate the roots of " + badred::to_string(m_, gen_));
    std::vector<MpC> z;
    if (approx_.size() == static_cast<std::size_t>(n_)) {
      for (auto& [re, im] : approx_) {
        MpC c(p);
        mpfr_set(c.re.get(), re.get(), MPFR_RNDN);
        mpfr_set(c.im.get(), im.get(), MPFR_RNDN);
        z.push_back(std::move(c));
      }
    } else {
      double bound = 1;
      for (int i = 0; i < n_; ++i) bound = std::max(bound, 1 + std::fabs(m_.coeff(i).get_d()));
      for (int k = 0; k < n_; ++k) {
        MpC c(p);
        double ang = 2 * std::numbers::pi * k / n_ + 0.4;
        mpfr_set_d(c.re.get(), bound * std::cos(ang), MPFR_RNDN);
        mpfr_set_d(c.im.get(), bound * std::sin(ang), MPFR_RNDN);
        z.push_back(std::move(c));
      }
    }
    refine_roots(m_, z, p);

    // The r1 candidates closest to the real axis are moved onto it.
    std::vector<int> order(n_);
    for (int k = 0; k < n_; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return mpfr_cmpabs(z[a].im.get(), z[b].im.get()) < 0;
    });
    std::vector<bool> is_real(n_, false);
    for (int i = 0; i < r1_; ++i) {
      is_real[order[i]] = true;
      mpfr_set_zero(z[order[i]].im.get(), 1);
    }

    std::vector<MpReal> rad;
    bool ok = true;
    for (int k = 0; k < n_ && ok; ++k) {
      MpReal r(p);
      ok = inclusion_radius(m_, z[k], p, r);
      rad.push_back(std::move(r));
    }
    // Non-real disks must avoid the real axis; all disks pairwise disjoint.
    for (int k = 0; k < n_ && ok; ++k) {
      if (!is_real[k] && mpfr_cmpabs(z[k].im.get(), rad[k].get()) <= 0) ok = false;
      for (int j = k + 1; j < n_ && ok; ++j) {
        ComplexBox d = point_box(z[k], p) - point_box(z[j], p);
        Interval sum = Interval::hull(rad[k], rad[k]) + Interval::hull(rad[j], rad[j]);
        if (!sum.certainly_less(d.abs())) ok = false;
      }
    }
    approx_.clear();
    for (auto& c : z) approx_.emplace_back(c.re, c.im);
    if (!ok) continue;

    std::vector<int> real_idx, cplx_idx;
    for (int k = 0; k < n_; ++k) {
      if (is_real[k]) real_idx.push_back(k);
      else if (mpfr_sgn(z[k].im.get()) > 0) cplx_idx.push_back(k);
    }
    if (static_cast<int>(cplx_idx.size()) != r2_) continue;
    std::sort(real_idx.begin(), real_idx.end(), [&](int a, int b) { return mpfr_less_p(z[a].re.get(), z[b].re.get()); });
    std::sort(cplx_idx.begin(), cplx_idx.end(), [&](int a, int b) {
      int c = mpfr_cmp(z[a].re.get(), z[b].re.get());
      return c != 0 ? c < 0 : mpfr_less_p(z[a].im.get(), z[b].im.get());
    });
    auto disk_box = [&](int k, bool real) {
      ComplexBox b = point_box(z[k], p);
      Interval pm = Interval::hull(rad[k], rad[k]);
      mpfr_neg(pm.lo().get(), rad[k].get(), MPFR_RNDD);
      b.re = b.re + pm;
      if (!real) b.im = b.im + pm;
      return b;
    };
    for (int k : real_idx) out.push_back(disk_box(k, true));
    for (int k : cplx_idx) out.push_back(disk_box(k, false));
    return roots_.emplace(prec, std::move(out)).first->second;
  }
}

ComplexBox NumberField::root_enclosure(int v, mpfr_prec_t prec) const {
  if (v < 0 || v >= static_cast<int>(places_.size())) throw Error(ErrorCode::InvalidInput, "no such archimedean place");
  return roots_at(prec)[v];
}

ComplexBox NumberField::embed(const NFElem& a, int v, mpfr_prec_t prec) const {
  ComplexBox th = root_enclosure(v, prec);
  ComplexBox r(prec);
  if (a.c.empty()) return r;
  for (int i = n_ - 1; i >= 0; --i) {
    r = r * th;
    r.re = r.re + Interval::point(a.c[i], prec);
  }
  if (places_[v].real) r.im = Interval(prec);
  return r;
}

Interval NumberField::arch_abs(const NFElem& a, int v, double rel_tol) const {
  if (n_ == 1) {
    Rational q = a.c.empty() ? Rational(0) : a.c[0];
    return Interval::point(Rational(abs(q)), kStartPrec);
  }
  for (mpfr_prec_t p = kStartPrec; p <= kMaxPrec; p *= 2) {
    ComplexBox b = embed(a, v, p);
    Interval r = places_[v].real ? b.re.abs() : b.abs();
    if (r.relative_width() <= rel_tol && (a.is_zero() || r.certainly_positive())) return r;
  }
  throw Error(ErrorCode::PrecisionExhausted, "archimedean enclosure did not reach the requested width");
}

}  // namespace badred
