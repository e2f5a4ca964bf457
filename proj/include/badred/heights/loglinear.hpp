#pragma once

#include <memory>
#include <string>
#include <vector>

#include "badred/numfield/number_field.hpp"

namespace badred {

// log of max_i |a_i|_v over a nonempty list of elements of K at one
// archimedean place. Several entries only when their absolute values could
// not be separated numerically.
struct ArchLogMax {
  NumberFieldPtr K;
  int place = 0;
  std::vector<NFElem> elems;
  std::string label;  // e.g. "log|x + 1|_v0"

  Interval enclose(mpfr_prec_t prec) const;
};

// Either log(n) for an integer n >= 2 or an archimedean log-max.
struct LogAtom {
  Integer n;
  std::shared_ptr<const ArchLogMax> arch;

  bool is_integer() const { return !arch; }
  std::string label() const;
  Interval enclose(mpfr_prec_t prec) const;
  // Sort key: integers ascending, then arch labels.
  friend bool operator<(const LogAtom& a, const LogAtom& b);
  friend bool operator==(const LogAtom& a, const LogAtom& b);
};

// r + sum q_i * atom_i with rational r, q_i.
class LogLinear {
 public:
  LogLinear() = default;
  static LogLinear rational(const Rational& r);
  // q * log(n); n >= 1 (log 1 = 0 is dropped).
  static LogLinear log_int(const Integer& n, const Rational& q = 1);
  static LogLinear log_arch(std::shared_ptr<const ArchLogMax> a, const Rational& q = 1);

  const Rational& constant() const { return r_; }
  const std::vector<std::pair<Rational, LogAtom>>& terms() const { return terms_; }
  bool is_zero() const { return sgn(r_) == 0 && terms_.empty(); }
  bool has_arch() const;

  LogLinear operator+(const LogLinear& b) const;
  LogLinear operator-(const LogLinear& b) const;
  LogLinear operator-() const { return scaled(-1); }
  LogLinear scaled(const Rational& q) const;
  LogLinear& operator+=(const LogLinear& b) { return *this = *this + b; }

  // Integer atoms rewritten over primes where factoring succeeds; two
  // integer-only forms are equal as reals iff their prime forms coincide.
  LogLinear prime_form() const;

  Interval enclose(mpfr_prec_t prec) const;
  // Escalates precision from 128 bits until the relative width is below tol.
  Interval enclose_to(double rel_tol = 1e-12) const;
  // Canonical text, e.g. "9*log(2) + 6*log(3) - 137/120"; "0" when zero.
  std::string to_string() const;

  friend bool operator==(const LogLinear& a, const LogLinear& b) { return a.r_ == b.r_ && a.terms_ == b.terms_; }

 private:
  void add_term(const Rational& q, const LogAtom& a);
  Rational r_ = 0;
  std::vector<std::pair<Rational, LogAtom>> terms_;  // sorted by atom, nonzero q
};

enum class Cmp { Less, Equal, Greater, Undecided };
const char* cmp_name(Cmp c);

// Certified comparison. Equal when the prime form of a - b vanishes; Undecided
// only when an archimedean difference cannot be separated from 0.
Cmp compare(const LogLinear& a, const LogLinear& b);

// Symbolic value with a certified enclosure.
struct HeightValue {
  LogLinear value;
  Interval enclosure;

  static HeightValue of(LogLinear v, double rel_tol = 1e-12);
  std::string decimal(int digits = 12) const { return enclosure.mid_string(digits); }
};

}  // namespace badred
