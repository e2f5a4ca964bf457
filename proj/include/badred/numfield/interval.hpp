#pragma once

#include <mpfr.h>

#include <string>

#include "badred/exactmath/integer.hpp"

namespace badred {

// Owning mpfr_t.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpReal(MpReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] with outward rounding. Precision is the bit
// precision of both endpoints.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128) : lo_(prec), hi_(prec) {}
  static Interval point(const Rational& q, mpfr_prec_t prec);
  static Interval point(const Integer& z, mpfr_prec_t prec) { return point(Rational(z), prec); }
  static Interval hull(const MpReal& a, const MpReal& b);
  static Interval log_of(const Integer& n, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return lo_.prec(); }
  const MpReal& lo() const { return lo_; }
  const MpReal& hi() const { return hi_; }
  MpReal& lo() { return lo_; }
  MpReal& hi() { return hi_; }

  Interval operator+(const Interval& b) const;
  Interval operator-(const Interval& b) const;
  Interval operator-() const;
  Interval operator*(const Interval& b) const;
  Interval operator/(const Interval& b) const;
  Interval scaled(const Rational& q) const;
  Interval sqr() const;
  Interval sqrt() const;
  Interval log() const;
  Interval abs() const;
  Interval max_with(const Interval& b) const;

  bool contains_zero() const;
  bool contains(const Rational& q) const;
  bool certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool certainly_less(const Interval& b) const { return mpfr_less_p(hi_.get(), b.lo_.get()); }
  bool certainly_leq(const Interval& b) const { return mpfr_lessequal_p(hi_.get(), b.lo_.get()); }
  // hi - lo, rounded up
  double width() const;
  // width relative to max(1, |mid|)
  double relative_width() const;
  double mid_double() const;

  // Endpoints as decimal strings, rounded outward, with `digits` significant digits.
  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;
  // Midpoint with `digits` significant digits.
  std::string mid_string(int digits = 20) const;

 private:
  MpReal lo_, hi_;
};

// Rectangle in C.
struct ComplexBox {
  Interval re, im;
  explicit ComplexBox(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  ComplexBox(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  ComplexBox operator+(const ComplexBox& b) const { return {re + b.re, im + b.im}; }
  ComplexBox operator-(const ComplexBox& b) const { return {re - b.re, im - b.im}; }
  ComplexBox operator*(const ComplexBox& b) const {
    return {re * b.re - im * b.im, re * b.im + im * b.re};
  }
  ComplexBox scaled(const Rational& q) const { return {re.scaled(q), im.scaled(q)}; }
  Interval abs() const { return (re.sqr() + im.sqr()).sqrt(); }
  Interval abs_sqr() const { return re.sqr() + im.sqr(); }
};

std::string decimal_string(const MpReal& x, int digits, mpfr_rnd_t rnd);

}  // namespace badred
