#include "badred/numfield/interval.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "badred/error.hpp"

namespace badred {

namespace {

mpfr_prec_t join_prec(const Interval& a, const Interval& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

Interval Interval::point(const Rational& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::hull(const MpReal& a, const MpReal& b) {
  Interval r(std::max(a.prec(), b.prec()));
  if (mpfr_lessequal_p(a.get(), b.get())) {
    mpfr_set(r.lo_.get(), a.get(), MPFR_RNDD);
    mpfr_set(r.hi_.get(), b.get(), MPFR_RNDU);
  } else {
    mpfr_set(r.lo_.get(), b.get(), MPFR_RNDD);
    mpfr_set(r.hi_.get(), a.get(), MPFR_RNDU);
  }
  return r;
}

Interval Interval::log_of(const Integer& n, mpfr_prec_t prec) {
  if (n <= 0) throw Error(ErrorCode::InvalidInput, "log of a non-positive integer");
  return point(n, prec).log();
}

Interval Interval::operator+(const Interval& b) const {
  Interval r(join_prec(*this, b));
  mpfr_add(r.lo_.get(), lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& b) const {
  Interval r(join_prec(*this, b));
  mpfr_sub(r.lo_.get(), lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& b) const {
  const mpfr_prec_t p = join_prec(*this, b);
  Interval r(p);
  MpReal t(p);
  const MpReal* xs[2] = {&lo_, &hi_};
  const MpReal* ys[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  return r;
}

Interval Interval::operator/(const Interval& b) const {
  if (b.contains_zero()) throw Error(ErrorCode::PrecisionExhausted, "interval division by an interval containing 0");
  const mpfr_prec_t p = join_prec(*this, b);
  Interval inv(p);
  mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
  return *this * inv;
}

Interval Interval::scaled(const Rational& q) const { return *this * point(q, prec()); }

Interval Interval::sqr() const {
  Interval a = abs();
  Interval r(prec());
  mpfr_sqr(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
  mpfr_sqr(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (certainly_negative()) throw Error(ErrorCode::InvalidInput, "sqrt of a negative interval");
  Interval r(prec());
  if (mpfr_sgn(lo_.get()) <= 0) mpfr_set_zero(r.lo_.get(), 1);
  else mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (!certainly_positive()) throw Error(ErrorCode::PrecisionExhausted, "log of an interval not bounded away from 0");
  Interval r(prec());
  mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  if (mpfr_sgn(lo_.get()) >= 0) return *this;
  if (mpfr_sgn(hi_.get()) <= 0) return -*this;
  Interval r(prec());
  mpfr_set_zero(r.lo_.get(), 1);
  if (mpfr_cmpabs(lo_.get(), hi_.get()) > 0) mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  else mpfr_set(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::max_with(const Interval& b) const {
  Interval r(join_prec(*this, b));
  mpfr_max(r.lo_.get(), lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

double Interval::width() const {
  MpReal t(prec());
  mpfr_sub(t.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return mpfr_get_d(t.get(), MPFR_RNDU);
}

double Interval::relative_width() const {
  double m = std::fabs(mid_double());
  return width() / std::max(1.0, m);
}

double Interval::mid_double() const {
  MpReal t(prec() + 1);
  mpfr_add(t.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
  return t.to_double();
}

std::string decimal_string(const MpReal& x, int digits, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(x.get())) return "0";
  std::vector<char> buf(digits + 64);
  std::string fmt = "%." + std::to_string(digits) + "R*g";
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), rnd, x.get());
  return std::string(buf.data());
}

std::string Interval::lo_string(int digits) const { return decimal_string(lo_, digits, MPFR_RNDD); }
std::string Interval::hi_string(int digits) const { return decimal_string(hi_, digits, MPFR_RNDU); }

std::string Interval::mid_string(int digits) const {
  MpReal t(prec() + 1);
  mpfr_add(t.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
  return decimal_string(t, digits, MPFR_RNDN);
}

}  // namespace badred
